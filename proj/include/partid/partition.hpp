#pragma once

#include <compare>
#include <string>
#include <vector>

#include "partid/checked.hpp"

namespace partid {

/* A partition: a non-increasing list of positive integer parts. The empty
 * list is the unique partition of 0. Values are immutable after
 * construction; every operation is a pure function, so partitions can be
 * shared freely across threads. */
class Partition {
  public:
    Partition() = default;

    /* Normalizes to non-increasing order. Rejects parts < 1. */
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int j) const { return parts_[j]; }  // j is 0-based

    i64 weight() const;

    /* Sum of the parts congruent to i (mod m). Requires m >= 2 and
     * 0 <= i < m. */
    i64 residue_weight(int i, int m) const;

    /* Number of parts equal to v (v >= 1). */
    int multiplicity(int v) const;

    int max_multiplicity() const;

    /* The partition whose i-th part counts the parts of *this that are
     * >= i. An involution. */
    Partition conjugate() const;

    bool is_m_regular(int m) const;  // no part divisible by m

    /* All consecutive gaps, including the smallest part itself, are < m.
     * Equivalent to: the conjugate has no part repeated m or more times. */
    bool is_m_flat(int m) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/* An (m-1)-tuple of nonnegative integers indexed 1..m-1; used for both the
 * m-length type (entry i = number of parts congruent to i mod m) and the
 * m-alternating-sum type (entry i = M_i - M_{i+1}, with M_i the sum of the
 * parts at 1-based positions congruent to i mod m). */
struct TypeVector {
    int modulus = 2;
    std::vector<i64> entries;  // size modulus-1

    i64 entry(int i) const { return entries[i - 1]; }  // i in 1..m-1

    bool operator==(const TypeVector&) const = default;
    auto operator<=>(const TypeVector&) const = default;

    std::string str() const;
};

TypeVector length_type(const Partition& p, int m);
TypeVector alt_sum_type(const Partition& p, int m);

/* Text format: "+"-separated parts, e.g. "9+8+8+5+2+1". Input order is
 * irrelevant; output is canonical non-increasing. The empty string denotes
 * the empty partition. Rejects non-numeric tokens and parts < 1. */
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

/* JSON rendering: array of parts, largest first. */
std::string partition_to_json(const Partition& p);

}  // namespace partid
