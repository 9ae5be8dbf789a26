#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "partid/partition.hpp"

namespace partid {

/* Hard cap for every enumeration entry point. Counting sequences at this
 * scale stay far below 2^63. */
constexpr int kMaxN = 200;

/* Declarative description of a partition family. Every rule is checkable
 * in one pass over the distinct part values of a candidate. Difference
 * rules are evaluated on pairs of distinct part values (u, v), u > v, both
 * present; because parts are sorted this is equivalent to rules on
 * adjacent entries of the part list. */
struct ConstraintSpec {
    // parts must be congruent to one of these residues (mod modulus)
    std::optional<std::set<int>> allowed_residues;
    int modulus = 0;

    int min_part = 1;

    // multiplicities a part value may not have, e.g. {1} = "no part
    // occurs exactly once"
    std::set<int> forbidden_multiplicities;

    // no two distinct part values may differ by any of these
    std::set<int> forbidden_differences;

    // (difference d, allowed residues mod diff_modulus of the smaller
    // value): for every pair u - v == d both present, v mod diff_modulus
    // must be in the allowed set
    struct DiffRule {
        int difference;
        std::set<int> smaller_allowed;
    };
    std::vector<DiffRule> diff_rules;
    int diff_modulus = 3;

    std::set<int> forbidden_values;

    // every odd part must be at least this large
    int min_odd_part = 1;

    bool satisfies(const Partition& p) const;
};

/* The families of the identities, addressable by name from the CLI.
 * A1 : parts == 0,2,3,4 (mod 6)
 * A2 : no part occurs exactly once
 * A3 : no two consecutive integers as parts, all parts >= 2
 * B1 : A1 refined by (#parts==2 (6), #parts==4 (6))
 * B2 : A3 refined by (#parts==2 (3), #parts==1 (3))
 * C1 : parts == 0,1,3,5 (mod 6) refined by (#==1 (6), #==5 (6))
 * C2 : the three difference rules, no part 2, refined by
 *      (#==1 (3), #==2 (3))
 * D1 : parts even or == 2r+1 (mod 4r+2), m_i = #parts == 2i (mod 4r+2)
 * D2 : consecutive-part differences avoid {1,3,...,2r-1}, smallest odd
 *      part >= 2r+1, m_i = #parts == 2i (mod 2r+1)
 */
ConstraintSpec preset(const std::string& name, int r = 1);
bool is_preset_refined(const std::string& name);  // B/C/D carry a type vector
std::vector<std::string> preset_names();

/* Type vector a preset classifies by (empty for A presets). */
std::vector<int> preset_type(const std::string& name, const Partition& p, int r = 1);
int preset_type_arity(const std::string& name, int r = 1);

/* Visits every partition of n exactly once, in lexicographic descending
 * order, as a non-increasing vector. Returning false stops early. */
void for_each_partition(int n, const std::function<bool(const std::vector<int>&)>& visit);

/* Same order, restricted to partitions satisfying the constraints. Residue,
 * value and min-part rules are pruned during generation; multiplicity and
 * difference rules are enforced as each run of equal parts is placed. */
void for_each_in_family(int n, const ConstraintSpec& c,
                        const std::function<bool(const std::vector<int>&)>& visit);

i64 count_partitions(int n);
i64 count_family(const std::string& name, int n, int r = 1);
std::vector<Partition> list_family(const std::string& name, int n, int r = 1);

/* Counts keyed by type vector, one enumeration pass. */
std::map<std::vector<int>, i64> count_family_by_type(const std::string& name, int n, int r = 1);
std::map<std::vector<int>, std::vector<Partition>> list_family_by_type(const std::string& name,
                                                                       int n, int r = 1);

/* Counting operations of the identities. variant selects the family side. */
i64 count_A(int variant, int n);
i64 count_B(int variant, int m1, int m2, int n);
i64 count_C(int variant, int m1, int m2, int n);
i64 count_D(int variant, const std::vector<int>& m, int r, int n);

/* Partitions where every part with odd multiplicity appears at least
 * 2r+1 times; at r=1 this is the A2 condition. */
i64 count_odd_multiplicity_floor(int r, int n);

}  // namespace partid
