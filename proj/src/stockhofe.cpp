#include "partid/stockhofe.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace partid {

namespace {

/* Residue walk of a partition: part residues mod m, smallest part first.
 * A flat partition is recovered from its walk as the minimal lift: each
 * height step is the unique representative of the residue step in
 * [0, m-1] (the first step starts from 0, so the bottom residue must be
 * nonzero for the bottom part to be < m). */
using Walk = std::vector<int>;

Walk to_walk(const std::vector<int>& parts_desc, int m)
{
    Walk w(parts_desc.size());
    for (std::size_t j = 0; j < parts_desc.size(); ++j)
        w[j] = parts_desc[parts_desc.size() - 1 - j] % m;
    return w;
}

std::vector<int> walk_heights(const Walk& w, int m)
{
    std::vector<int> H(w.size());
    int h = 0, prev = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
        h += ((w[t] - prev) % m + m) % m;
        H[t] = h;
        prev = w[t];
    }
    return H;
}

Partition from_walk(const Walk& w, int m)
{
    std::vector<int> H = walk_heights(w, m);
    std::reverse(H.begin(), H.end());
    return Partition(std::move(H));
}

/* Distinct ways to insert one 0-visit, keyed by cost. A run of equal
 * 0-visits is a single slot (cost = quotient of the run height); a slot
 * between nonzero neighbours u below and v above costs the new part's
 * quotient plus, when v >= u, the number of raised positions above. */
struct Slot {
    int cost;
    std::size_t after;  // insert after position `after` (0-based)
};

std::vector<Slot> insertion_slots(const Walk& w, int m)
{
    const std::vector<int> H = walk_heights(w, m);
    const std::size_t k = w.size();
    std::vector<Slot> slots;
    for (std::size_t t = 0; t < k; ++t) {
        int u = w[t];
        int v = t + 1 < k ? w[t + 1] : -1;
        if (u == 0)
            continue;  // run slots are handled at the run's lower boundary
        if (v == 0) {
            slots.push_back({(H[t] + m - u) / m, t});  // join the run above
            continue;
        }
        int q = (H[t] + m - u) / m;
        int lift = (v >= u && v != -1) ? static_cast<int>(k - 1 - t) : 0;
        slots.push_back({q + lift, t});
    }
    return slots;
}

Walk insert_at(const Walk& w, std::size_t after)
{
    Walk out;
    out.reserve(w.size() + 1);
    out.insert(out.end(), w.begin(), w.begin() + after + 1);
    out.push_back(0);
    out.insert(out.end(), w.begin() + after + 1, w.end());
    return out;
}

/* Removal candidates: one per run of 0-visits. Removing from a run of
 * size >= 2 costs the run quotient; removing a lone 0 between u and v
 * additionally lowers everything above by m when v >= u, mirroring
 * insertion. */
struct Removal {
    int cost;
    std::size_t pos;  // index of the 0 to delete
};

std::vector<Removal> removal_candidates(const Walk& w, int m)
{
    const std::vector<int> H = walk_heights(w, m);
    const std::size_t k = w.size();
    std::vector<Removal> out;
    for (std::size_t t = 0; t < k;) {
        if (w[t] != 0) {
            ++t;
            continue;
        }
        std::size_t e = t;
        while (e + 1 < k && w[e + 1] == 0)
            ++e;
        int q = H[t] / m;
        int cost = q;
        if (e == t) {  // lone zero; w[0] != 0 always, so t >= 1
            int u = w[t - 1];
            int v = e + 1 < k ? w[e + 1] : -1;
            if (v >= u && v != -1)
                cost += static_cast<int>(k - 1 - e);
        }
        out.push_back({cost, t});
        t = e + 1;
    }
    return out;
}

}  // namespace

Partition regular_to_flat(const Partition& p, int m, PhiTrace* trace)
{
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (!p.is_m_regular(m))
        throw std::invalid_argument("input has a part divisible by " + std::to_string(m) +
                                    "; the map requires a regular partition");

    // lambda = f + m*d with f flat of the same length and residues
    const auto& parts = p.parts();
    const int k = p.size();
    std::vector<int> f(k, 0), d(k, 0);
    for (int j = k - 1; j >= 0; --j) {
        int lo = j + 1 < k ? f[j + 1] : 0;
        int r = parts[j] % m;
        f[j] = lo + (((r - lo) % m) + m) % m;
        d[j] = (parts[j] - f[j]) / m;
    }

    // conj(d): insertion costs, largest first
    std::vector<int> costs;
    if (k > 0)
        for (int c = 1; c <= d[0]; ++c) {
            int cnt = 0;
            for (int j = 0; j < k; ++j)
                cnt += d[j] >= c;
            costs.push_back(cnt);
        }
    std::sort(costs.begin(), costs.end(), std::greater<int>());

    if (trace) {
        trace->flat = Partition(f);
        trace->surplus = d;
        trace->costs = costs;
        trace->stages.clear();
    }

    Walk walk = to_walk(f, m);
    for (int c : costs) {
        const std::vector<Slot> slots = insertion_slots(walk, m);
        const Slot* hit = nullptr;
        for (const Slot& s : slots) {
            if (s.cost != c)
                continue;
            if (hit)
                throw std::logic_error("ambiguous insertion slot");
            hit = &s;
        }
        if (!hit)
            throw std::logic_error("no insertion slot of the required cost");
        walk = insert_at(walk, hit->after);
        if (trace)
            trace->stages.push_back(from_walk(walk, m));
    }
    return from_walk(walk, m);
}

Partition flat_to_regular(const Partition& fp, int m, PhiTrace* trace)
{
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (!fp.is_m_flat(m))
        throw std::invalid_argument("input is not " + std::to_string(m) +
                                    "-flat (a gap of at least the modulus)");

    Walk walk = to_walk(fp.parts(), m);
    std::vector<int> costs;  // collected in nondecreasing order
    for (;;) {
        const std::vector<Removal> cands = removal_candidates(walk, m);
        if (cands.empty())
            break;
        const Removal* best = nullptr;
        for (const Removal& c : cands)
            if (!best || c.cost < best->cost)
                best = &c;
        for (const Removal& c : cands)
            if (&c != best && c.cost == best->cost)
                throw std::logic_error("ambiguous removal candidate");
        if (!costs.empty() && best->cost < costs.back())
            throw std::logic_error("removal costs are not nondecreasing");
        costs.push_back(best->cost);
        walk.erase(walk.begin() + best->pos);
        if (trace)
            trace->stages.push_back(from_walk(walk, m));
    }

    Partition f = from_walk(walk, m);
    const int k = f.size();
    // d = conj of the costs, aligned with f largest part first
    std::vector<int> d(k, 0);
    for (int c : costs) {
        if (c > k)
            throw std::logic_error("removal cost exceeds part count");
        for (int j = 0; j < c; ++j)
            d[j]++;
    }
    std::vector<int> parts(k);
    for (int j = 0; j < k; ++j)
        parts[j] = f.part(j) + m * d[j];

    if (trace) {
        trace->flat = f;
        trace->surplus = d;
        trace->costs = costs;
    }
    return Partition(std::move(parts));
}

Partition phi(const Partition& p, int m, PhiTrace* trace)
{
    return regular_to_flat(p, m, trace).conjugate();
}

Partition phi_inv(const Partition& q, int m, PhiTrace* trace)
{
    if (m >= 2 && q.max_multiplicity() >= m)
        throw std::invalid_argument("input has a part repeated " + std::to_string(m) +
                                    " or more times; the inverse map requires all "
                                    "multiplicities below the modulus");
    return flat_to_regular(q.conjugate(), m, trace);
}

}  // namespace partid
