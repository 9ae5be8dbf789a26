#include "partid/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace partid {

namespace {

void require_modulus(int m)
{
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

i64 Partition::weight() const
{
    i64 w = 0;
    for (int p : parts_)
        w = checked_add(w, p);
    return w;
}

i64 Partition::residue_weight(int i, int m) const
{
    require_modulus(m);
    if (i < 0 || i >= m)
        throw std::invalid_argument("residue must satisfy 0 <= i < m");
    i64 w = 0;
    for (int p : parts_)
        if (p % m == i)
            w = checked_add(w, p);
    return w;
}

int Partition::multiplicity(int v) const
{
    if (v < 1)
        throw std::invalid_argument("part value must be positive");
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

int Partition::max_multiplicity() const
{
    int best = 0;
    for (std::size_t j = 0; j < parts_.size();) {
        std::size_t k = j;
        while (k < parts_.size() && parts_[k] == parts_[j])
            ++k;
        best = std::max(best, static_cast<int>(k - j));
        j = k;
    }
    return best;
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return {};
    std::vector<int> out(parts_[0], 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i)
            out[i]++;
    return Partition(std::move(out));
}

bool Partition::is_m_regular(int m) const
{
    require_modulus(m);
    return std::none_of(parts_.begin(), parts_.end(),
                        [m](int p) { return p % m == 0; });
}

bool Partition::is_m_flat(int m) const
{
    require_modulus(m);
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        int next = j + 1 < parts_.size() ? parts_[j + 1] : 0;
        if (parts_[j] - next >= m)
            return false;
    }
    return true;
}

std::string TypeVector::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i)
        os << (i ? "," : "") << entries[i];
    os << ')';
    return os.str();
}

TypeVector length_type(const Partition& p, int m)
{
    require_modulus(m);
    TypeVector t{m, std::vector<i64>(m - 1, 0)};
    for (int x : p.parts()) {
        int r = x % m;
        if (r != 0)
            t.entries[r - 1]++;
    }
    return t;
}

TypeVector alt_sum_type(const Partition& p, int m)
{
    require_modulus(m);
    // M[i] = sum of parts at 1-based positions congruent to i (mod m),
    // with positions congruent to 0 counted as class m.
    std::vector<i64> M(m + 1, 0);
    for (int j = 0; j < p.size(); ++j) {
        int cls = (j % m) + 1;
        M[cls] = checked_add(M[cls], p.part(j));
    }
    TypeVector t{m, std::vector<i64>(m - 1, 0)};
    for (int i = 1; i < m; ++i)
        t.entries[i - 1] = M[i] - M[i + 1];  // >= 0: parts non-increasing
    return t;
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&](bool final) {
        // trim surrounding whitespace
        std::size_t b = 0, e = token.size();
        while (b < e && std::isspace(static_cast<unsigned char>(token[b])))
            ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(token[e - 1])))
            --e;
        std::string t = token.substr(b, e - b);
        token.clear();
        if (t.empty()) {
            if (final && parts.empty())
                return;  // "" is the empty partition
            throw std::invalid_argument("empty summand in partition text");
        }
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(t, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part '" + t + "'");
        }
        if (pos != t.size())
            throw std::invalid_argument("bad partition part '" + t + "'");
        if (v < 1)
            throw std::invalid_argument("partition parts must be positive, got '" + t + "'");
        if (v > 1000000)
            throw std::invalid_argument("partition part out of range '" + t + "'");
        parts.push_back(static_cast<int>(v));
    };

    bool any = false;
    for (char c : text) {
        if (c == '+') {
            flush(false);
            any = true;
        } else {
            token += c;
            if (!std::isspace(static_cast<unsigned char>(c)))
                any = true;
        }
    }
    if (any)
        flush(true);
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p)
{
    std::ostringstream os;
    for (int j = 0; j < p.size(); ++j)
        os << (j ? "+" : "") << p.part(j);
    return os.str();
}

std::string partition_to_json(const Partition& p)
{
    std::ostringstream os;
    os << '[';
    for (int j = 0; j < p.size(); ++j)
        os << (j ? "," : "") << p.part(j);
    os << ']';
    return os.str();
}

}  // namespace partid
