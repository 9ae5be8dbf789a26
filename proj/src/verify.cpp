#include "partid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "partid/chains.hpp"
#include "partid/colored.hpp"
#include "partid/enumerate.hpp"
#include "partid/partition.hpp"
#include "partid/series.hpp"
#include "partid/stockhofe.hpp"
#include "partid/sweep.hpp"

namespace partid {

namespace {

/* Per-row outcome of a sweep; rows are independent, the fold just picks
 * the first failure. */
struct Row {
    bool ok = true;
    i64 cases = 0;
    std::string detail;
};

template <class Fn>
CheckResult sweep_check(const std::string& name, int lo, int hi, bool parallel, Fn&& fn)
{
    CheckResult res;
    res.name = name;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Row> rows = map_range(lo, hi, parallel, fn);
    for (const Row& r : rows) {
        res.cases += r.cases;
        if (!r.ok && res.passed) {
            res.passed = false;
            res.detail = r.detail;
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

Row fail(int n, const std::string& what)
{
    return {false, 0, "n=" + std::to_string(n) + ": " + what};
}

// ---------------------------------------------------------------- macmahon

CheckResult check_A_counts(int max_n, bool parallel)
{
    return sweep_check("A1(n) = A2(n) = A3(n)", 0, max_n, parallel, [](int n) -> Row {
        i64 a1 = count_A(1, n), a2 = count_A(2, n), a3 = count_A(3, n);
        if (a1 != a2 || a2 != a3)
            return fail(n, "A1=" + std::to_string(a1) + " A2=" + std::to_string(a2) +
                               " A3=" + std::to_string(a3));
        return {true, 3, ""};
    });
}

CheckResult check_A_series(int max_n, bool parallel)
{
    auto series = family_series("A1", max_n);
    return sweep_check("A1(n) = mod-6 product coefficient", 0, max_n, parallel,
                       [&series](int n) -> Row {
                           i64 enumerated = count_A(1, n);
                           i64 from_series = series.coeff(n);
                           if (enumerated != from_series)
                               return fail(n, "enumeration " + std::to_string(enumerated) +
                                                  " series " + std::to_string(from_series));
                           return {true, 1, ""};
                       });
}

// ----------------------------------------------------------------- refined

CheckResult check_B_counts(int max_n, bool parallel)
{
    return sweep_check("B1 = B2 for every type vector", 0, max_n, parallel, [](int n) -> Row {
        auto b1 = count_family_by_type("B1", n);
        auto b2 = count_family_by_type("B2", n);
        if (b1 != b2)
            return fail(n, "type-count maps differ");
        return {true, static_cast<i64>(b1.size()), ""};
    });
}

CheckResult check_B_total(int max_n, bool parallel)
{
    return sweep_check("sum of B1 over types = A1", 0, max_n, parallel, [](int n) -> Row {
        i64 total = 0;
        for (const auto& [t, c] : count_family_by_type("B1", n))
            total = checked_add(total, c);
        i64 a1 = count_A(1, n);
        if (total != a1)
            return fail(n, "sum " + std::to_string(total) + " != A1 " + std::to_string(a1));
        return {true, 1, ""};
    });
}

CheckResult check_B_series(int max_n, bool parallel)
{
    auto series = family_series("B1", max_n);
    return sweep_check("B1 type counts = marked product coefficients", 0, max_n, parallel,
                       [&series](int n) -> Row {
                           auto b1 = count_family_by_type("B1", n);
                           std::map<std::vector<int>, i64> cells;
                           for (const auto& [key, val] : series.terms(n))
                               cells[series.unpack(key)] = val;
                           if (cells != b1)
                               return fail(n, "coefficient cells differ from enumeration");
                           return {true, static_cast<i64>(cells.size()), ""};
                       });
}

CheckResult check_chain_bijection(const std::string& name, int r, int max_n, bool parallel)
{
    const std::string d1 = r == 1 ? "B1" : "D1";
    const std::string d2 = r == 1 ? "B2" : "D2";
    return sweep_check(name, 0, max_n, parallel, [=](int n) -> Row {
        auto fam1 = list_family_by_type(d1, n, r);
        auto fam2 = list_family_by_type(d2, n, r);
        i64 cases = 0;
        std::map<std::vector<int>, std::vector<Partition>> images;
        for (const auto& [t, members] : fam1)
            for (const Partition& p : members) {
                ChainTrace tr = andrews_forward(p, r);
                if (tr.tau.weight() != p.weight())
                    return fail(n, "weight changed for " + format_partition(p));
                i64 even_class_weight = 0;
                for (int i = 1; i <= 2 * r; ++i)
                    even_class_weight += p.residue_weight(2 * i, 4 * r + 2);
                if (2 * tr.mu.weight() != even_class_weight)
                    return fail(n, "halved-side weight ledger off for " + format_partition(p));
                if (tr.rho.multiplicity(1) == 1)
                    return fail(n, "rho has a lone part for " + format_partition(p));
                for (int mult = 1; mult < 2 * r + 1; mult += 2) {
                    for (int v = 1; v <= n; ++v)
                        if (tr.rho.multiplicity(v) == mult)
                            return fail(n, "rho multiplicity " + std::to_string(mult) +
                                               " for " + format_partition(p));
                }
                if (preset_type(d2, tr.tau, r) != t)
                    return fail(n, "type not transported for " + format_partition(p));
                // the doubled side carries the shuffled type: entry i of
                // rho's alternating-sum type is m_{(r+1)i mod (2r+1)}
                {
                    const int m = 2 * r + 1;
                    TypeVector rho_type = alt_sum_type(tr.rho, m);
                    for (int i = 1; i <= 2 * r; ++i) {
                        int src = ((r + 1) * i) % m;
                        if (rho_type.entry(i) != t[src - 1])
                            return fail(n, "rho alt type off for " + format_partition(p));
                    }
                }
                ChainTrace back = andrews_inverse(tr.tau, r);
                if (back.lambda != p)
                    return fail(n, "round trip failed for " + format_partition(p));
                images[t].push_back(tr.tau);
                ++cases;
            }
        for (auto& [t, v] : images)
            std::sort(v.begin(), v.end());
        std::map<std::vector<int>, std::vector<Partition>> expected;
        for (auto& [t, v] : fam2) {
            std::sort(v.begin(), v.end());
            expected[t] = v;
        }
        if (images != expected)
            return fail(n, "image multisets differ from the target family");
        return {true, cases, ""};
    });
}

// --------------------------------------------------------------- companion

CheckResult check_C_counts(int max_n, bool parallel)
{
    return sweep_check("C1 = C2 for every type vector", 0, max_n, parallel, [](int n) -> Row {
        auto c1 = count_family_by_type("C1", n);
        auto c2 = count_family_by_type("C2", n);
        if (c1 != c2)
            return fail(n, "type-count maps differ");
        return {true, static_cast<i64>(c1.size()), ""};
    });
}

CheckResult check_C_series(int max_n, bool parallel)
{
    auto series = family_series("C1", max_n);
    return sweep_check("C1 type counts = marked product coefficients", 0, max_n, parallel,
                       [&series](int n) -> Row {
                           auto c1 = count_family_by_type("C1", n);
                           std::map<std::vector<int>, i64> cells;
                           for (const auto& [key, val] : series.terms(n))
                               cells[series.unpack(key)] = val;
                           if (cells != c1)
                               return fail(n, "coefficient cells differ from enumeration");
                           return {true, static_cast<i64>(cells.size()), ""};
                       });
}

CheckResult check_C_dilation(int max_w)
{
    // images of the colored family under the mod-6 dilation, up to the
    // weight cap, are exactly the C2 partitions
    CheckResult res;
    res.name = "mod-6 dilation maps the colored family onto C2";
    auto t0 = std::chrono::steady_clock::now();
    ConstraintSpec c2 = preset("C2");
    std::vector<Partition> images;
    bool ok = true;
    std::string detail;
    for (int w = 0; w <= max_w && ok; ++w)
        for_each_in_colored_family(w, 1, [&](const ColoredPartition& cp) {
            Partition img = colored_to_mod6(cp);
            if (!c2.satisfies(img)) {
                ok = false;
                detail = format_colored(cp) + " maps outside C2";
                return false;
            }
            if (mod6_to_colored(img) != cp) {
                ok = false;
                detail = "dilation round trip failed for " + format_colored(cp);
                return false;
            }
            res.cases++;
            if (img.weight() <= max_w)
                images.push_back(img);
            return true;
        });
    if (ok) {
        std::vector<Partition> expected;
        for (int n = 0; n <= max_w; ++n)
            for (const Partition& p : list_family("C2", n))
                expected.push_back(p);
        std::sort(images.begin(), images.end());
        std::sort(expected.begin(), expected.end());
        if (images != expected) {
            ok = false;
            detail = "image set differs from the C2 family";
        }
    }
    res.passed = ok;
    res.detail = detail;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// ----------------------------------------------------------------- andrews

CheckResult check_D_counts(int r, int max_n, bool parallel)
{
    return sweep_check("D1 = D2 for every type vector (r=" + std::to_string(r) + ")", 0, max_n,
                       parallel, [r](int n) -> Row {
                           auto d1 = count_family_by_type("D1", n, r);
                           auto d2 = count_family_by_type("D2", n, r);
                           if (d1 != d2)
                               return fail(n, "type-count maps differ");
                           return {true, static_cast<i64>(d1.size()), ""};
                       });
}

CheckResult check_D_series(int r, int max_n, bool parallel)
{
    auto series = family_series("D1", max_n, r);
    return sweep_check("D1 type counts = marked product coefficients (r=" + std::to_string(r) +
                           ")",
                       0, max_n, parallel, [&series, r](int n) -> Row {
                           auto d1 = count_family_by_type("D1", n, r);
                           std::map<std::vector<int>, i64> cells;
                           for (const auto& [key, val] : series.terms(n))
                               cells[series.unpack(key)] = val;
                           if (cells != d1)
                               return fail(n, "coefficient cells differ from enumeration");
                           return {true, static_cast<i64>(cells.size()), ""};
                       });
}

CheckResult check_D_matches_B(int max_n, bool parallel)
{
    return sweep_check("r=1 D counters equal the B counters", 0, max_n, parallel,
                       [](int n) -> Row {
                           if (count_family_by_type("D1", n, 1) != count_family_by_type("B1", n))
                               return fail(n, "D1 != B1");
                           if (count_family_by_type("D2", n, 1) != count_family_by_type("B2", n))
                               return fail(n, "D2 != B2");
                           return {true, 2, ""};
                       });
}

CheckResult check_And_multiplicity(int r_lo, int r_hi, int max_n, bool parallel)
{
    return sweep_check("odd-multiplicity floor count = congruence count", 0, max_n, parallel,
                       [=](int n) -> Row {
                           for (int r = r_lo; r <= r_hi; ++r) {
                               i64 lhs = count_odd_multiplicity_floor(r, n);
                               i64 rhs = count_family("D1", n, r);
                               if (lhs != rhs)
                                   return fail(n, "r=" + std::to_string(r) + ": " +
                                                      std::to_string(lhs) + " != " +
                                                      std::to_string(rhs));
                           }
                           return {true, r_hi - r_lo + 1, ""};
                       });
}

// ---------------------------------------------------------------------- phi

CheckResult check_phi_contract(int m, int max_n, bool parallel)
{
    return sweep_check("phi contract (m=" + std::to_string(m) + ")", 0, max_n, parallel,
                       [m](int n) -> Row {
        std::vector<Partition> regulars, distincts;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition p(parts);
            if (p.is_m_regular(m))
                regulars.push_back(p);
            if (p.max_multiplicity() < m)
                distincts.push_back(p);
            return true;
        });

        // construction-independent refinement: counts agree type by type
        std::map<std::vector<i64>, i64> by_length, by_alt;
        for (const Partition& p : regulars)
            by_length[length_type(p, m).entries]++;
        for (const Partition& q : distincts)
            by_alt[alt_sum_type(q, m).entries]++;
        if (by_length != by_alt)
            return fail(n, "length-type and alt-type counts differ");

        std::vector<Partition> images;
        for (const Partition& p : regulars) {
            Partition q = phi(p, m);
            if (q.weight() != p.weight())
                return fail(n, "phi changed the weight of " + format_partition(p));
            if (q.max_multiplicity() >= m)
                return fail(n, "phi image of " + format_partition(p) + " repeats a part");
            if (alt_sum_type(q, m).entries != length_type(p, m).entries)
                return fail(n, "phi did not transport the type of " + format_partition(p));
            if (phi_inv(q, m) != p)
                return fail(n, "phi round trip failed for " + format_partition(p));
            images.push_back(q);
        }
        std::sort(images.begin(), images.end());
        std::sort(distincts.begin(), distincts.end());
        if (images != distincts)
            return fail(n, "phi image is not the whole multiplicity-bounded family");
        return {true, static_cast<i64>(regulars.size()), ""};
    });
}

CheckResult check_phi_series(int m, int max_n, bool parallel)
{
    // product over residue classes, one marker per class: coefficients
    // count m-regular partitions by length type
    TruncatedSeries series(max_n, m - 1);
    for (int i = 1; i < m; ++i) {
        std::vector<int> e(m - 1, 0);
        e[i - 1] = 1;
        series.mul_progression(i, m, e);
    }
    return sweep_check("alt-type counts = marked product coefficients (m=" + std::to_string(m) +
                           ")",
                       0, max_n, parallel, [&series, m](int n) -> Row {
                           std::map<std::vector<int>, i64> by_alt;
                           for_each_partition(n, [&](const std::vector<int>& parts) {
                               Partition q(parts);
                               if (q.max_multiplicity() < m) {
                                   auto t = alt_sum_type(q, m).entries;
                                   by_alt[std::vector<int>(t.begin(), t.end())]++;
                               }
                               return true;
                           });
                           std::map<std::vector<int>, i64> cells;
                           for (const auto& [key, val] : series.terms(n))
                               cells[series.unpack(key)] = val;
                           if (cells != by_alt)
                               return fail(n, "coefficient cells differ from enumeration");
                           return {true, static_cast<i64>(cells.size()), ""};
                       });
}

// ------------------------------------------------------------------ lemmas

CheckResult check_conjugation(int max_n, bool parallel)
{
    return sweep_check("conjugation is an involution", 0, max_n, parallel, [](int n) -> Row {
        i64 cases = 0;
        Row bad{true, 0, ""};
        for_each_partition(n, [&](const std::vector<int>& parts) {
            Partition p(parts);
            if (p.conjugate().conjugate() != p) {
                bad = fail(n, "conjugate twice differs for " + format_partition(p));
                return false;
            }
            ++cases;
            return true;
        });
        if (!bad.ok)
            return bad;
        return {true, cases, ""};
    });
}

CheckResult check_conj_transport(int max_n, int m_lo, int m_hi, bool parallel)
{
    return sweep_check("alt type of p = length type of conj(p)", 0, max_n, parallel,
                       [=](int n) -> Row {
                           i64 cases = 0;
                           Row bad{true, 0, ""};
                           for_each_partition(n, [&](const std::vector<int>& parts) {
                               Partition p(parts);
                               for (int m = m_lo; m <= m_hi; ++m) {
                                   auto lhs = alt_sum_type(p, m);
                                   for (i64 e : lhs.entries)
                                       if (e < 0) {
                                           bad = fail(n, "negative alt-type entry");
                                           return false;
                                       }
                                   if (lhs != length_type(p.conjugate(), m)) {
                                       bad = fail(n, "transport fails for " + format_partition(p) +
                                                         " m=" + std::to_string(m));
                                       return false;
                                   }
                                   ++cases;
                               }
                               return true;
                           });
                           if (!bad.ok)
                               return bad;
                           return {true, cases, ""};
                       });
}

CheckResult check_statistic_sums(int max_n, int m_lo, int m_hi, bool parallel)
{
    return sweep_check("residue weights and length types sum correctly", 0, max_n, parallel,
                       [=](int n) -> Row {
                           i64 cases = 0;
                           Row bad{true, 0, ""};
                           for_each_partition(n, [&](const std::vector<int>& parts) {
                               Partition p(parts);
                               for (int m = m_lo; m <= m_hi; ++m) {
                                   i64 total = 0;
                                   for (int i = 0; i < m; ++i)
                                       total = checked_add(total, p.residue_weight(i, m));
                                   if (total != p.weight()) {
                                       bad = fail(n, "residue weights do not sum to the weight");
                                       return false;
                                   }
                                   i64 zero_parts = 0, typed = 0;
                                   for (int x : p.parts())
                                       zero_parts += x % m == 0;
                                   for (i64 e : length_type(p, m).entries)
                                       typed += e;
                                   if (typed + zero_parts != p.size()) {
                                       bad = fail(n, "length type entries do not sum to the "
                                                     "length");
                                       return false;
                                   }
                                   ++cases;
                               }
                               return true;
                           });
                           if (!bad.ok)
                               return bad;
                           return {true, cases, ""};
                       });
}

CheckResult check_duplication(int max_n, bool parallel)
{
    return sweep_check("duplication reverses the alt type (m=3,5)", 0, max_n, parallel,
                       [](int n) -> Row {
                           i64 cases = 0;
                           Row bad{true, 0, ""};
                           for_each_partition(n, [&](const std::vector<int>& parts) {
                               Partition p(parts);
                               for (int m : {3, 5}) {
                                   Partition dup = duplicate(p, m);
                                   if (dup.weight() != (m - 1) * p.weight()) {
                                       bad = fail(n, "duplication weight is off");
                                       return false;
                                   }
                                   auto t = alt_sum_type(p, m).entries;
                                   std::reverse(t.begin(), t.end());
                                   if (alt_sum_type(dup, m).entries != t) {
                                       bad = fail(n, "alt type not reversed for " +
                                                         format_partition(p) +
                                                         " m=" + std::to_string(m));
                                       return false;
                                   }
                                   ++cases;
                               }
                               return true;
                           });
                           if (!bad.ok)
                               return bad;
                           return {true, cases, ""};
                       });
}

// ----------------------------------------------------------------- colored

CheckResult check_colored_series(int r, int max_w, bool parallel)
{
    auto series = family_series("colored", max_w, r);
    return sweep_check("colored family counts = product coefficients (r=" + std::to_string(r) +
                           ")",
                       0, max_w, parallel, [&series, r](int w) -> Row {
                           std::map<std::vector<int>, i64> counts;
                           for_each_in_colored_family(w, r, [&](const ColoredPartition& cp) {
                               std::vector<int> key(2 * r);
                               for (int i = 1; i <= 2 * r; ++i)
                                   key[i - 1] = cp.color_count(i);
                               counts[key]++;
                               return true;
                           });
                           std::map<std::vector<int>, i64> cells;
                           for (const auto& [key, val] : series.terms(w))
                               cells[series.unpack(key)] = val;
                           if (cells != counts)
                               return fail(w, "coefficient cells differ from enumeration");
                           return {true, static_cast<i64>(cells.size()), ""};
                       });
}

CheckResult check_colored_images(int r, int max_n, bool parallel)
{
    const std::string fam = r == 1 ? "B2" : "D2";
    return sweep_check("difference side embeds in the colored family (r=" + std::to_string(r) +
                           ")",
                       0, max_n, parallel, [r, fam](int n) -> Row {
                           i64 cases = 0;
                           for (const Partition& tau : list_family(fam, n, r)) {
                               ColoredPartition cp = to_colored(tau, r);
                               if (!in_colored_family(cp))
                                   return fail(n, format_partition(tau) +
                                                      " maps to a forbidden pair");
                               if (colored_to_tau(cp) != tau)
                                   return fail(n, "colored round trip failed for " +
                                                      format_partition(tau));
                               for (int i = 1; i <= 2 * r; ++i) {
                                   int want = 0;
                                   int m = 2 * r + 1;
                                   for (int x : tau.parts())
                                       want += x % m == (2 * i) % m;
                                   if (cp.color_count(i) != want)
                                       return fail(n, "color counts do not match residues");
                               }
                               ++cases;
                           }
                           return {true, cases, ""};
                       });
}

}  // namespace

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

i64 VerificationReport::total_cases() const
{
    i64 total = 0;
    for (const auto& c : checks)
        total = checked_add(total, c.cases);
    return total;
}

void VerificationReport::print(std::ostream& os) const
{
    os << "verify " << identity << "\n";
    for (const auto& c : checks) {
        std::ostringstream sec;
        sec.precision(2);
        sec << std::fixed << c.seconds;
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " (" << c.cases
           << " cases, " << sec.str() << "s)";
        if (!c.passed && !c.detail.empty())
            os << " -- " << c.detail;
        os << "\n";
    }
    os << (passed() ? "all checks passed" : "VERIFICATION FAILED") << "\n";
}

std::vector<std::string> verify_names()
{
    return {"macmahon", "refined", "companion", "andrews", "phi", "lemmas", "series", "colored",
            "all"};
}

VerificationReport verify_identity(const std::string& name, const VerifyOptions& opt)
{
    const bool par = opt.parallel;
    auto n_or = [&](int dflt) { return opt.max_n >= 0 ? opt.max_n : dflt; };

    VerificationReport rep;
    rep.identity = name;

    if (name == "macmahon") {
        int N = n_or(40);
        rep.checks.push_back(check_A_counts(N, par));
        rep.checks.push_back(check_A_series(N, par));
    } else if (name == "refined") {
        int N = n_or(40);
        rep.checks.push_back(check_B_counts(N, par));
        rep.checks.push_back(check_B_total(N, par));
        rep.checks.push_back(check_B_series(N, par));
        rep.checks.push_back(
            check_chain_bijection("mod-6 chain is a type-preserving bijection", 1,
                                  std::min(N, 30), par));
    } else if (name == "companion") {
        int N = n_or(40);
        rep.checks.push_back(check_C_counts(N, par));
        rep.checks.push_back(check_C_series(N, par));
        rep.checks.push_back(check_C_dilation(std::min(N, 12)));
    } else if (name == "andrews") {
        int N = n_or(30);
        for (int r = opt.r_lo; r <= opt.r_hi; ++r) {
            rep.checks.push_back(check_D_counts(r, N, par));
            rep.checks.push_back(check_D_series(r, N, par));
            rep.checks.push_back(check_chain_bijection(
                "general chain is a type-preserving bijection (r=" + std::to_string(r) + ")", r,
                std::min(N, 25), par));
        }
        rep.checks.push_back(check_D_matches_B(N, par));
        rep.checks.push_back(check_And_multiplicity(opt.r_lo, opt.r_hi, N, par));
    } else if (name == "phi") {
        int N = n_or(25);
        for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
            rep.checks.push_back(check_phi_contract(m, N, par));
            rep.checks.push_back(check_phi_series(m, N, par));
        }
    } else if (name == "lemmas") {
        int N = n_or(20);
        rep.checks.push_back(check_conjugation(std::max(N, 25), par));
        rep.checks.push_back(check_conj_transport(std::max(N, 25), opt.m_lo, opt.m_hi, par));
        rep.checks.push_back(check_statistic_sums(N, opt.m_lo, opt.m_hi, par));
        rep.checks.push_back(check_duplication(N, par));
    } else if (name == "series") {
        rep.checks.push_back(check_A_series(n_or(40), par));
        rep.checks.push_back(check_B_series(n_or(40), par));
        rep.checks.push_back(check_C_series(n_or(40), par));
        rep.checks.push_back(check_colored_series(1, std::min(n_or(20), 20), par));
        rep.checks.push_back(check_colored_series(2, std::min(n_or(12), 12), par));
    } else if (name == "colored") {
        rep.checks.push_back(check_colored_series(1, n_or(20), par));
        rep.checks.push_back(check_colored_series(2, std::min(n_or(12), 12), par));
        rep.checks.push_back(check_colored_images(1, n_or(30), par));
        rep.checks.push_back(check_colored_images(2, std::min(n_or(20), 20), par));
    } else if (name == "all") {
        for (const char* subname :
             {"macmahon", "refined", "companion", "andrews", "phi", "lemmas", "colored"}) {
            std::string sub = subname;
            VerifyOptions o = opt;
            VerificationReport sr = verify_identity(sub, o);
            for (auto& c : sr.checks) {
                c.name = sub + ": " + c.name;
                rep.checks.push_back(std::move(c));
            }
        }
    } else {
        throw std::invalid_argument("unknown identity '" + name + "'");
    }
    return rep;
}

}  // namespace partid
