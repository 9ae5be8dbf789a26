#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "partid/checked.hpp"

namespace partid {

/* Formal power series in q, truncated at degree N, whose coefficients are
 * polynomials in up to 8 marker variables with exact 64-bit integer
 * coefficients. Storage is dense in q and sparse in the markers; a marker
 * monomial is packed into a 64-bit key, 8 bits per variable. Marker
 * exponents never exceed the truncation degree (every marked part has
 * size >= 1), so the cap N <= 200 keeps each packed field below 256. */
class TruncatedSeries {
  public:
    using Key = std::uint64_t;

    /* The multiplicative identity with the given truncation degree and
     * number of marker variables. */
    TruncatedSeries(int degree_cap, int arity);

    int degree_cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    int arity() const { return arity_; }

    /* Multiplies by 1 / (1 - M q^k), i.e. the geometric series
     * sum_t M^t q^{kt}, where M is the marker monomial with the given
     * exponent vector (empty = no markers). Requires k >= 1. */
    void mul_inverse_factor(int part_size, const std::vector<int>& marker_exponents = {});

    /* Multiplies by the inverse factors at part sizes first, first+step,
     * first+2*step, ... up to the truncation degree, all carrying the same
     * marker exponents: the reciprocal of (M q^first; q^step)_infinity. */
    void mul_progression(int first, int step, const std::vector<int>& marker_exponents = {});

    /* Exact coefficient of q^n times the marker monomial. Requires
     * n <= degree_cap. */
    i64 coeff(int n, const std::vector<int>& marker_exponents = {}) const;

    /* All marker monomials with nonzero coefficient at q^n, sorted by
     * packed key (i.e. lexicographically by exponent vector, last variable
     * fastest). */
    const std::map<Key, i64>& terms(int n) const { return coeffs_.at(n); }

    TruncatedSeries operator*(const TruncatedSeries& other) const;
    bool operator==(const TruncatedSeries&) const = default;

    Key pack(const std::vector<int>& exponents) const;
    std::vector<int> unpack(Key key) const;

  private:
    int arity_;
    std::vector<std::map<Key, i64>> coeffs_;  // index = q-degree
};

/* Generating functions of the congruence families, as products of inverse
 * factors over arithmetic progressions:
 *   A1          : no markers, parts == 2,3,4,6 (mod 6)
 *   B1          : markers (A,C) on the 2 (mod 6) and 4 (mod 6) classes,
 *                 parts == 3 (mod 3) unmarked
 *   C1          : markers (A,C) on the 1 (mod 6) and 5 (mod 6) classes,
 *                 parts == 3,6 (mod 6) unmarked
 *   D1 (r)      : markers A_i on the 2i (mod 4r+2) classes, the classes
 *                 2r+1 and 4r+2 (mod 4r+2) unmarked
 *   colored (r) : all part sizes unmarked once, plus odd part sizes once
 *                 per marker A_1..A_2r; counts the colored family by
 *                 uncolored weight and per-color part counts (r = 1 is the
 *                 three-color identity with A = A_1 marking color a and
 *                 C = A_2 marking color c)
 */
TruncatedSeries family_series(const std::string& name, int degree_cap, int r = 1);
std::vector<std::string> family_series_names();

}  // namespace partid
