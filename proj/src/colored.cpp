#include "partid/colored.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace partid {

namespace {

/* Ranks colors for canonical (display) order. For r = 1 the letter order
 * a < b < c, i.e. indices 1 < 3 < 2; otherwise plain index order. */
int color_rank(int color, int r)
{
    if (r == 1)
        return color == 1 ? 0 : color == 3 ? 1 : 2;
    return color - 1;
}

void canonicalize(ColoredPartition& cp)
{
    std::sort(cp.parts.begin(), cp.parts.end(), [&](const ColoredPart& x, const ColoredPart& y) {
        if (x.value != y.value)
            return x.value > y.value;
        return color_rank(x.color, cp.r) > color_rank(y.color, cp.r);
    });
}

bool forbidden_pair(const ColoredPart& x, const ColoredPart& y, int r)
{
    const int top = 2 * r + 1;
    // {j_i, j_top} with i <= 2r
    if (x.value == y.value) {
        int i = x.color == top ? y.color : (y.color == top ? x.color : 0);
        return (x.color == top || y.color == top) && i <= 2 * r && i >= 1 &&
               x.color != y.color;
    }
    // {j_i, (j+1)_l} with i <= 2r, l < i
    const ColoredPart& lo = x.value < y.value ? x : y;
    const ColoredPart& hi = x.value < y.value ? y : x;
    if (hi.value != lo.value + 1)
        return false;
    return lo.color <= 2 * r && hi.color < lo.color;
}

}  // namespace

i64 ColoredPartition::weight() const
{
    i64 w = 0;
    for (const auto& p : parts)
        w = checked_add(w, p.value);
    return w;
}

int ColoredPartition::color_count(int color) const
{
    int n = 0;
    for (const auto& p : parts)
        n += p.color == color;
    return n;
}

char color_letter(int color)
{
    switch (color) {
        case 1: return 'a';
        case 3: return 'b';
        case 2: return 'c';
    }
    throw std::invalid_argument("three-color labels exist only for colors 1..3");
}

int letter_color(char letter)
{
    switch (letter) {
        case 'a': return 1;
        case 'b': return 3;
        case 'c': return 2;
    }
    throw std::invalid_argument("unknown color letter");
}

bool in_colored_family(const ColoredPartition& cp)
{
    // pair rules do not depend on multiplicity; scan distinct pairs
    for (std::size_t i = 0; i < cp.parts.size(); ++i)
        for (std::size_t j = i + 1; j < cp.parts.size(); ++j)
            if (forbidden_pair(cp.parts[i], cp.parts[j], cp.r))
                return false;
    return true;
}

ColoredPartition to_colored(const Partition& tau, int r)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    const int m = 2 * r + 1;
    for (int x : tau.parts())
        if (x % 2 == 1 && x < m)
            throw std::invalid_argument("odd part " + std::to_string(x) +
                                        " is smaller than " + std::to_string(m));
    {
        const auto& parts = tau.parts();
        for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
            int d = parts[j] - parts[j + 1];
            if (d % 2 == 1 && d < m)
                throw std::invalid_argument("parts differ by the forbidden amount " +
                                            std::to_string(d));
        }
    }

    ColoredPartition cp;
    cp.r = r;
    for (int x : tau.parts()) {
        if (x % m == 0) {
            cp.parts.push_back({x / m, m});
        } else {
            // x = m(k-1) + 2i with 1 <= i <= 2r
            int rem = x % m;                       // == 2i mod m
            int i = rem % 2 == 0 ? rem / 2 : (rem + m) / 2;
            int k = (x - 2 * i) / m + 1;
            cp.parts.push_back({k, i});
        }
    }
    canonicalize(cp);
    return cp;
}

Partition colored_to_tau(const ColoredPartition& cp)
{
    if (!in_colored_family(cp))
        throw std::invalid_argument("colored partition contains a forbidden adjacent pair");
    const int m = 2 * cp.r + 1;
    std::vector<int> parts;
    for (const auto& p : cp.parts) {
        if (p.color == m)
            parts.push_back(m * p.value);
        else
            parts.push_back(m * (p.value - 1) + 2 * p.color);
    }
    return Partition(std::move(parts));
}

Partition colored_to_mod6(const ColoredPartition& cp)
{
    if (cp.r != 1)
        throw std::invalid_argument("the mod-6 dilation is defined for three colors");
    if (!in_colored_family(cp))
        throw std::invalid_argument("colored partition contains a forbidden adjacent pair");
    std::vector<int> parts;
    for (const auto& p : cp.parts) {
        switch (p.color) {
            case 1: parts.push_back(3 * p.value - 2); break;  // a
            case 3: parts.push_back(3 * p.value); break;      // b
            case 2: parts.push_back(3 * p.value + 2); break;  // c
            default: throw std::invalid_argument("bad color index");
        }
    }
    return Partition(std::move(parts));
}

ColoredPartition mod6_to_colored(const Partition& p)
{
    ColoredPartition cp;
    cp.r = 1;
    for (int x : p.parts()) {
        if (x == 2)
            throw std::invalid_argument("part 2 has no colored preimage");
        switch (x % 3) {
            case 0: cp.parts.push_back({x / 3, 3}); break;        // b
            case 1: cp.parts.push_back({(x + 2) / 3, 1}); break;  // a
            default: cp.parts.push_back({(x - 2) / 3, 2}); break; // c
        }
    }
    canonicalize(cp);
    if (!in_colored_family(cp))
        throw std::invalid_argument("input violates the adjacency rules of the mod-6 family");
    return cp;
}

std::string format_colored(const ColoredPartition& cp)
{
    std::ostringstream os;
    for (std::size_t j = 0; j < cp.parts.size(); ++j) {
        if (j)
            os << '+';
        if (cp.r == 1)
            os << cp.parts[j].value << color_letter(cp.parts[j].color);
        else
            os << cp.parts[j].value << '#' << cp.parts[j].color;
    }
    return os.str();
}

ColoredPartition parse_colored(const std::string& text, int r)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    ColoredPartition cp;
    cp.r = r;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, '+')) {
        std::string t;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c)))
                t += c;
        if (t.empty())
            throw std::invalid_argument("empty summand in colored partition text");
        std::size_t pos = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            ++pos;
        if (pos == 0)
            throw std::invalid_argument("bad colored part '" + token + "'");
        int value = std::stoi(t.substr(0, pos));
        if (value < 1)
            throw std::invalid_argument("colored part values must be positive");
        int color;
        if (r == 1 && pos + 1 == t.size() && std::isalpha(static_cast<unsigned char>(t[pos]))) {
            color = letter_color(t[pos]);
        } else if (pos < t.size() && t[pos] == '#') {
            color = std::stoi(t.substr(pos + 1));
        } else {
            throw std::invalid_argument("bad colored part '" + token + "'");
        }
        if (color < 1 || color > 2 * r + 1)
            throw std::invalid_argument("color index out of range in '" + token + "'");
        cp.parts.push_back({value, color});
    }
    canonicalize(cp);
    return cp;
}

void for_each_in_colored_family(int weight, int r,
                                const std::function<bool(const ColoredPartition&)>& visit)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    const int colors = 2 * r + 1;
    ColoredPartition acc;
    acc.r = r;
    bool stop = false;

    // items descend by (value, color); multiplicities never affect the
    // pair rules, so compatibility is checked once per distinct item
    std::function<void(int, int, int)> rec = [&](int value, int color, int rem) {
        if (stop)
            return;
        if (rem == 0) {
            ColoredPartition out = acc;
            canonicalize(out);
            stop = !visit(out);
            return;
        }
        while (value >= 1 && (color < 1 || value > rem)) {
            --value;
            color = colors;
        }
        if (value < 1)
            return;
        // skip this item entirely
        rec(value, color - 1, rem);
        if (stop)
            return;
        // or take it, with any multiplicity
        ColoredPart item{value, color};
        for (const auto& chosen : acc.parts)
            if (forbidden_pair(chosen, item, r))
                return;
        int maxmult = rem / value;
        for (int mult = 1; mult <= maxmult && !stop; ++mult) {
            for (int c = 0; c < mult; ++c)
                acc.parts.push_back(item);
            rec(value, color - 1, rem - mult * value);
            for (int c = 0; c < mult; ++c)
                acc.parts.pop_back();
        }
    };
    rec(weight, colors, weight);
}

}  // namespace partid
