#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partid {

/* Applies fn to every integer in [lo, hi] and collects the results. The
 * parallel variant distributes the rows across OpenMP threads; each row is
 * independent (no shared mutable state), so the two variants produce
 * identical results. Exceptions thrown by fn are captured per row and
 * rethrown after the loop. */
template <class Fn>
auto map_range(int lo, int hi, bool parallel, Fn&& fn)
    -> std::vector<decltype(fn(lo))>
{
    using T = decltype(fn(lo));
    if (hi < lo)
        return {};
    std::vector<T> out(hi - lo + 1);
    std::vector<std::string> errors(hi - lo + 1);

    if (parallel) {
        // rows get heavier with n; start the heaviest first so the tail of
        // the schedule stays short
#pragma omp parallel for schedule(dynamic, 1)
        for (int n = hi; n >= lo; --n) {
            try {
                out[n - lo] = fn(n);
            } catch (const std::exception& e) {
                errors[n - lo] = e.what();
            }
        }
    } else {
        for (int n = lo; n <= hi; ++n) {
            try {
                out[n - lo] = fn(n);
            } catch (const std::exception& e) {
                errors[n - lo] = e.what();
            }
        }
    }

    for (const auto& e : errors)
        if (!e.empty())
            throw std::runtime_error(e);
    return out;
}

}  // namespace partid
