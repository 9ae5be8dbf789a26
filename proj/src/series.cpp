#include "partid/series.hpp"

#include <stdexcept>

namespace partid {

TruncatedSeries::TruncatedSeries(int degree_cap, int arity) : arity_(arity)
{
    if (degree_cap < 0 || degree_cap > 200)
        throw std::invalid_argument("truncation degree must be in [0, 200]");
    if (arity < 0 || arity > 8)
        throw std::invalid_argument("marker arity must be in [0, 8]");
    coeffs_.assign(degree_cap + 1, {});
    coeffs_[0][0] = 1;
}

TruncatedSeries::Key TruncatedSeries::pack(const std::vector<int>& exponents) const
{
    if (static_cast<int>(exponents.size()) != arity_)
        throw std::invalid_argument("marker exponent vector has wrong arity");
    Key key = 0;
    for (int e : exponents) {
        if (e < 0 || e > 255)
            throw std::invalid_argument("marker exponent out of range");
        key = (key << 8) | static_cast<Key>(e);
    }
    return key;
}

std::vector<int> TruncatedSeries::unpack(Key key) const
{
    std::vector<int> out(arity_, 0);
    for (int v = arity_ - 1; v >= 0; --v) {
        out[v] = static_cast<int>(key & 0xff);
        key >>= 8;
    }
    return out;
}

void TruncatedSeries::mul_inverse_factor(int part_size, const std::vector<int>& marker_exponents)
{
    if (part_size < 1)
        throw std::invalid_argument("part size must be positive");
    std::vector<int> exps = marker_exponents;
    if (exps.empty())
        exps.assign(arity_, 0);
    const Key mono = pack(exps);

    // c'_n = c_n + M q^k c'_{n-k}: one ascending pass updates in place
    const int N = degree_cap();
    for (int n = part_size; n <= N; ++n)
        for (const auto& [key, val] : coeffs_[n - part_size]) {
            i64& slot = coeffs_[n][key + mono];
            slot = checked_add(slot, val);
            if (slot == 0)
                coeffs_[n].erase(key + mono);
        }
}

void TruncatedSeries::mul_progression(int first, int step,
                                      const std::vector<int>& marker_exponents)
{
    if (first < 1 || step < 1)
        throw std::invalid_argument("progression parameters must be positive");
    for (int k = first; k <= degree_cap(); k += step)
        mul_inverse_factor(k, marker_exponents);
}

i64 TruncatedSeries::coeff(int n, const std::vector<int>& marker_exponents) const
{
    if (n < 0 || n > degree_cap())
        throw std::out_of_range("degree exceeds the truncation cap");
    std::vector<int> exps = marker_exponents;
    if (exps.empty())
        exps.assign(arity_, 0);
    auto it = coeffs_[n].find(pack(exps));
    return it == coeffs_[n].end() ? 0 : it->second;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const
{
    if (arity_ != other.arity_ || degree_cap() != other.degree_cap())
        throw std::invalid_argument("series shapes do not match");
    TruncatedSeries out(degree_cap(), arity_);
    out.coeffs_[0].clear();
    for (int a = 0; a <= degree_cap(); ++a)
        for (const auto& [ka, va] : coeffs_[a])
            for (int b = 0; a + b <= degree_cap(); ++b)
                for (const auto& [kb, vb] : other.coeffs_[b]) {
                    i64& slot = out.coeffs_[a + b][ka + kb];
                    slot = checked_add(slot, checked_mul(va, vb));
                    if (slot == 0)
                        out.coeffs_[a + b].erase(ka + kb);
                }
    return out;
}

TruncatedSeries family_series(const std::string& name, int degree_cap, int r)
{
    if (name == "A1") {
        TruncatedSeries s(degree_cap, 0);
        for (int first : {2, 3, 4, 6})
            s.mul_progression(first, 6);
        return s;
    }
    if (name == "B1") {
        TruncatedSeries s(degree_cap, 2);
        s.mul_progression(3, 3, {0, 0});
        s.mul_progression(2, 6, {1, 0});
        s.mul_progression(4, 6, {0, 1});
        return s;
    }
    if (name == "C1") {
        TruncatedSeries s(degree_cap, 2);
        s.mul_progression(3, 6, {0, 0});
        s.mul_progression(6, 6, {0, 0});
        s.mul_progression(1, 6, {1, 0});
        s.mul_progression(5, 6, {0, 1});
        return s;
    }
    if (name == "D1") {
        if (r < 1 || 2 * r > 8)
            throw std::invalid_argument("D1 series needs 1 <= r <= 4");
        const int M = 4 * r + 2;
        TruncatedSeries s(degree_cap, 2 * r);
        s.mul_progression(2 * r + 1, M, std::vector<int>(2 * r, 0));
        s.mul_progression(M, M, std::vector<int>(2 * r, 0));
        for (int i = 1; i <= 2 * r; ++i) {
            std::vector<int> e(2 * r, 0);
            e[i - 1] = 1;
            s.mul_progression(2 * i, M, e);
        }
        return s;
    }
    if (name == "colored") {
        if (r < 1 || 2 * r > 8)
            throw std::invalid_argument("colored series needs 1 <= r <= 4");
        TruncatedSeries s(degree_cap, 2 * r);
        s.mul_progression(1, 1, std::vector<int>(2 * r, 0));
        for (int i = 1; i <= 2 * r; ++i) {
            std::vector<int> e(2 * r, 0);
            e[i - 1] = 1;
            s.mul_progression(1, 2, e);
        }
        return s;
    }
    throw std::invalid_argument("unknown series '" + name +
                                "' (expected A1, B1, C1, D1 or colored)");
}

std::vector<std::string> family_series_names() { return {"A1", "B1", "C1", "D1", "colored"}; }

}  // namespace partid
