#include "partid/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace partid {

namespace {

void require_n(int n)
{
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("n must be in [0, " + std::to_string(kMaxN) + "]");
}

}  // namespace

bool ConstraintSpec::satisfies(const Partition& p) const
{
    // distinct values with multiplicities, descending
    std::vector<std::pair<int, int>> runs;
    for (int x : p.parts()) {
        if (!runs.empty() && runs.back().first == x)
            runs.back().second++;
        else
            runs.emplace_back(x, 1);
    }

    for (const auto& [v, mult] : runs) {
        if (v < min_part)
            return false;
        if (allowed_residues && !allowed_residues->count(v % modulus))
            return false;
        if (forbidden_values.count(v))
            return false;
        if (v % 2 == 1 && v < min_odd_part)
            return false;
        if (forbidden_multiplicities.count(mult))
            return false;
    }
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            int d = runs[i].first - runs[j].first;
            if (forbidden_differences.count(d))
                return false;
            for (const auto& rule : diff_rules)
                if (d == rule.difference &&
                    !rule.smaller_allowed.count(runs[j].first % diff_modulus))
                    return false;
        }
    return true;
}

ConstraintSpec preset(const std::string& name, int r)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    ConstraintSpec c;
    if (name == "A1" || name == "B1") {
        c.allowed_residues = std::set<int>{0, 2, 3, 4};
        c.modulus = 6;
    } else if (name == "A2") {
        c.forbidden_multiplicities = {1};
    } else if (name == "A3" || name == "B2") {
        c.forbidden_differences = {1};
        c.min_part = 2;
    } else if (name == "C1") {
        c.allowed_residues = std::set<int>{0, 1, 3, 5};
        c.modulus = 6;
    } else if (name == "C2") {
        c.forbidden_values = {2};
        c.diff_rules = {{1, {0, 2}}, {2, {2}}};
        c.diff_modulus = 3;
    } else if (name == "D1") {
        std::set<int> residues;
        for (int i = 0; i <= 2 * r; ++i)
            residues.insert(2 * i);
        residues.insert(2 * r + 1);
        c.allowed_residues = residues;
        c.modulus = 4 * r + 2;
    } else if (name == "D2") {
        for (int d = 1; d < 2 * r + 1; d += 2)
            c.forbidden_differences.insert(d);
        c.min_odd_part = 2 * r + 1;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return c;
}

bool is_preset_refined(const std::string& name)
{
    return name == "B1" || name == "B2" || name == "C1" || name == "C2" || name == "D1" ||
           name == "D2";
}

std::vector<std::string> preset_names()
{
    return {"A1", "A2", "A3", "B1", "B2", "C1", "C2", "D1", "D2"};
}

int preset_type_arity(const std::string& name, int r)
{
    if (name == "D1" || name == "D2")
        return 2 * r;
    return is_preset_refined(name) ? 2 : 0;
}

std::vector<int> preset_type(const std::string& name, const Partition& p, int r)
{
    auto count_residue = [&](int res, int mod) {
        int n = 0;
        for (int x : p.parts())
            n += x % mod == res;
        return n;
    };
    if (name == "B1")
        return {count_residue(2, 6), count_residue(4, 6)};
    if (name == "B2")
        return {count_residue(2, 3), count_residue(1, 3)};
    if (name == "C1")
        return {count_residue(1, 6), count_residue(5, 6)};
    if (name == "C2")
        return {count_residue(1, 3), count_residue(2, 3)};
    if (name == "D1") {
        std::vector<int> t(2 * r);
        for (int i = 1; i <= 2 * r; ++i)
            t[i - 1] = count_residue(2 * i, 4 * r + 2);
        return t;
    }
    if (name == "D2") {
        std::vector<int> t(2 * r);
        for (int i = 1; i <= 2 * r; ++i)
            t[i - 1] = count_residue((2 * i) % (2 * r + 1), 2 * r + 1);
        return t;
    }
    return {};
}

namespace {

/* Lexicographic-descending generation: distinct values descend and, for a
 * fixed value, higher multiplicities come first. Constraint hooks prune
 * during the descent. */
struct Generator {
    const ConstraintSpec* spec = nullptr;
    const std::function<bool(const std::vector<int>&)>* visit = nullptr;
    std::vector<int> acc;
    std::vector<int> chosen;  // distinct values so far, descending
    int max_rule_diff = 0;
    bool stop = false;

    bool value_allowed(int v) const
    {
        if (!spec)
            return true;
        if (v < spec->min_part)
            return false;
        if (spec->allowed_residues && !spec->allowed_residues->count(v % spec->modulus))
            return false;
        if (spec->forbidden_values.count(v))
            return false;
        if (v % 2 == 1 && v < spec->min_odd_part)
            return false;
        // difference rules against already chosen (all larger) values
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            int d = *it - v;
            if (d > max_rule_diff)
                break;
            if (spec->forbidden_differences.count(d))
                return false;
            for (const auto& rule : spec->diff_rules)
                if (d == rule.difference && !rule.smaller_allowed.count(v % spec->diff_modulus))
                    return false;
        }
        return true;
    }

    bool mult_allowed(int mult) const
    {
        return !spec || !spec->forbidden_multiplicities.count(mult);
    }

    void rec(int maxv, int rem)
    {
        if (stop)
            return;
        if (rem == 0) {
            stop = !(*visit)(acc);
            return;
        }
        for (int v = std::min(maxv, rem); v >= 1 && !stop; --v) {
            if (!value_allowed(v))
                continue;
            chosen.push_back(v);
            for (int mult = rem / v; mult >= 1 && !stop; --mult) {
                if (!mult_allowed(mult))
                    continue;
                acc.insert(acc.end(), mult, v);
                rec(v - 1, rem - mult * v);
                acc.resize(acc.size() - mult);
            }
            chosen.pop_back();
        }
    }
};

void run_generator(int n, const ConstraintSpec* spec,
                   const std::function<bool(const std::vector<int>&)>& visit)
{
    require_n(n);
    Generator g;
    g.spec = spec;
    g.visit = &visit;
    if (spec) {
        for (int d : spec->forbidden_differences)
            g.max_rule_diff = std::max(g.max_rule_diff, d);
        for (const auto& rule : spec->diff_rules)
            g.max_rule_diff = std::max(g.max_rule_diff, rule.difference);
    }
    if (n == 0) {
        visit({});
        return;
    }
    g.rec(n, n);
}

}  // namespace

void for_each_partition(int n, const std::function<bool(const std::vector<int>&)>& visit)
{
    run_generator(n, nullptr, visit);
}

void for_each_in_family(int n, const ConstraintSpec& c,
                        const std::function<bool(const std::vector<int>&)>& visit)
{
    run_generator(n, &c, visit);
}

i64 count_partitions(int n)
{
    i64 count = 0;
    for_each_partition(n, [&](const std::vector<int>&) {
        count = checked_add(count, 1);
        return true;
    });
    return count;
}

i64 count_family(const std::string& name, int n, int r)
{
    ConstraintSpec c = preset(name, r);
    i64 count = 0;
    for_each_in_family(n, c, [&](const std::vector<int>&) {
        count = checked_add(count, 1);
        return true;
    });
    return count;
}

std::vector<Partition> list_family(const std::string& name, int n, int r)
{
    ConstraintSpec c = preset(name, r);
    std::vector<Partition> out;
    for_each_in_family(n, c, [&](const std::vector<int>& parts) {
        out.push_back(Partition(parts));
        return true;
    });
    return out;
}

std::map<std::vector<int>, i64> count_family_by_type(const std::string& name, int n, int r)
{
    ConstraintSpec c = preset(name, r);
    std::map<std::vector<int>, i64> out;
    for_each_in_family(n, c, [&](const std::vector<int>& parts) {
        out[preset_type(name, Partition(parts), r)]++;
        return true;
    });
    return out;
}

std::map<std::vector<int>, std::vector<Partition>> list_family_by_type(const std::string& name,
                                                                       int n, int r)
{
    ConstraintSpec c = preset(name, r);
    std::map<std::vector<int>, std::vector<Partition>> out;
    for_each_in_family(n, c, [&](const std::vector<int>& parts) {
        Partition p(parts);
        out[preset_type(name, p, r)].push_back(std::move(p));
        return true;
    });
    return out;
}

i64 count_A(int variant, int n)
{
    if (variant < 1 || variant > 3)
        throw std::invalid_argument("A has variants 1..3");
    return count_family("A" + std::to_string(variant), n);
}

i64 count_B(int variant, int m1, int m2, int n)
{
    if (variant < 1 || variant > 2)
        throw std::invalid_argument("B has variants 1..2");
    auto by_type = count_family_by_type("B" + std::to_string(variant), n);
    auto it = by_type.find({m1, m2});
    return it == by_type.end() ? 0 : it->second;
}

i64 count_C(int variant, int m1, int m2, int n)
{
    if (variant < 1 || variant > 2)
        throw std::invalid_argument("C has variants 1..2");
    auto by_type = count_family_by_type("C" + std::to_string(variant), n);
    auto it = by_type.find({m1, m2});
    return it == by_type.end() ? 0 : it->second;
}

i64 count_D(int variant, const std::vector<int>& m, int r, int n)
{
    if (variant < 1 || variant > 2)
        throw std::invalid_argument("D has variants 1..2");
    if (static_cast<int>(m.size()) != 2 * r)
        throw std::invalid_argument("D type vector must have 2r entries");
    auto by_type = count_family_by_type("D" + std::to_string(variant), n, r);
    auto it = by_type.find(m);
    return it == by_type.end() ? 0 : it->second;
}

i64 count_odd_multiplicity_floor(int r, int n)
{
    ConstraintSpec c;
    for (int mult = 1; mult < 2 * r + 1; mult += 2)
        c.forbidden_multiplicities.insert(mult);
    i64 count = 0;
    for_each_in_family(n, c, [&](const std::vector<int>&) {
        count = checked_add(count, 1);
        return true;
    });
    return count;
}

}  // namespace partid
