#include "partid/chains.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace partid {

Partition duplicate(const Partition& p, int m)
{
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()) * (m - 1));
    for (int x : p.parts())
        for (int c = 0; c < m - 1; ++c)
            out.push_back(x);
    return Partition(std::move(out));
}

std::pair<Partition, std::vector<std::pair<int, int>>> strip_tuples(const Partition& p, int t)
{
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument("tuple size must be odd and at least 3");
    std::map<int, int, std::greater<int>> mult;
    for (int x : p.parts())
        mult[x]++;

    std::vector<int> keep;
    std::vector<std::pair<int, int>> removed;
    for (auto [value, count] : mult) {
        // residual = the unique member of {0, 2, ..., 2(t-1)} congruent to
        // count mod t; the gap to it must be a nonnegative multiple of t
        int residual = -1;
        for (int res = 0; res <= 2 * (t - 1); res += 2)
            if (res % t == count % t) {
                residual = res;
                break;
            }
        if (residual < 0 || count < residual)
            throw std::invalid_argument("part " + std::to_string(value) +
                                        " has forbidden multiplicity " + std::to_string(count));
        int tuples = (count - residual) / t;
        if (tuples > 0)
            removed.emplace_back(value, tuples);
        for (int c = 0; c < residual; ++c)
            keep.push_back(value);
    }
    return {Partition(std::move(keep)), std::move(removed)};
}

namespace {

ChainTrace chain_forward(const Partition& lambda, int r)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    const int m = 2 * r + 1;
    const int M = 4 * r + 2;

    std::vector<int> halved, leftovers;
    for (int x : lambda.parts()) {
        if (x % 2 == 0 && (x / 2) % m != 0)
            halved.push_back(x / 2);
        else if (x % m == 0)
            leftovers.push_back(x);
        else
            throw std::invalid_argument("part " + std::to_string(x) +
                                        " is neither even nor congruent to " +
                                        std::to_string(m) + " (mod " + std::to_string(M) + ")");
    }

    ChainTrace tr;
    tr.r = r;
    tr.forward = true;
    tr.lambda = lambda;
    tr.mu = Partition(std::move(halved));
    tr.nu = phi(tr.mu, m);

    // two copies of each part, whatever r is
    std::vector<int> pi_parts;
    pi_parts.reserve(static_cast<std::size_t>(tr.nu.size()) * 2);
    for (int x : tr.nu.parts()) {
        pi_parts.push_back(x);
        pi_parts.push_back(x);
    }
    tr.pi = Partition(std::move(pi_parts));

    std::vector<int> rho_parts = tr.pi.parts();
    for (int x : leftovers)
        for (int c = 0; c < m; ++c)
            rho_parts.push_back(x / m);
    tr.rho = Partition(std::move(rho_parts));
    tr.tau = tr.rho.conjugate();
    return tr;
}

ChainTrace chain_inverse(const Partition& tau, int r)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    const int m = 2 * r + 1;

    // validate the difference-side conditions up front, for diagnostics
    for (int x : tau.parts())
        if (x % 2 == 1 && x < m)
            throw std::invalid_argument("odd part " + std::to_string(x) +
                                        " is smaller than " + std::to_string(m));
    {
        const auto& parts = tau.parts();
        for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
            int d = parts[j] - parts[j + 1];
            if (d % 2 == 1 && d < m)
                throw std::invalid_argument("parts " + std::to_string(parts[j]) + " and " +
                                            std::to_string(parts[j + 1]) +
                                            " differ by the forbidden amount " + std::to_string(d));
        }
    }

    ChainTrace tr;
    tr.r = r;
    tr.forward = false;
    tr.tau = tau;
    tr.rho = tau.conjugate();

    auto [pi, removed] = strip_tuples(tr.rho, m);
    tr.pi = pi;

    // halve every multiplicity
    std::vector<int> nu_parts;
    {
        const auto& parts = tr.pi.parts();
        for (std::size_t j = 0; j < parts.size(); j += 2) {
            if (j + 1 >= parts.size() || parts[j + 1] != parts[j])
                throw std::invalid_argument("internal: odd multiplicity after tuple stripping");
            nu_parts.push_back(parts[j]);
        }
    }
    tr.nu = Partition(std::move(nu_parts));
    tr.mu = phi_inv(tr.nu, m);

    std::vector<int> lambda_parts;
    for (int x : tr.mu.parts())
        lambda_parts.push_back(2 * x);
    for (auto [value, tuples] : removed)
        for (int c = 0; c < tuples; ++c)
            lambda_parts.push_back(m * value);
    tr.lambda = Partition(std::move(lambda_parts));
    return tr;
}

}  // namespace

ChainTrace macmahon_forward(const Partition& lambda) { return chain_forward(lambda, 1); }
ChainTrace macmahon_inverse(const Partition& tau) { return chain_inverse(tau, 1); }
ChainTrace andrews_forward(const Partition& lambda, int r) { return chain_forward(lambda, r); }
ChainTrace andrews_inverse(const Partition& tau, int r) { return chain_inverse(tau, r); }

}  // namespace partid
