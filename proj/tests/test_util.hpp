#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "partid/cli.hpp"
#include "partid/partition.hpp"

namespace testutil {

/* Independent brute-force oracle: every partition of n, largest part
 * first, by plain recursion. Deliberately separate from the library's
 * generator so the two can check each other. */
inline void naive_rec(int rem, int maxp, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out)
{
    if (rem == 0) {
        out.push_back(acc);
        return;
    }
    for (int v = std::min(rem, maxp); v >= 1; --v) {
        acc.push_back(v);
        naive_rec(rem - v, v, acc, out);
        acc.pop_back();
    }
}

inline std::vector<std::vector<int>> naive_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    naive_rec(n, n, acc, out);
    return out;
}

inline partid::Partition P(std::initializer_list<int> parts)
{
    return partid::Partition(std::vector<int>(parts));
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

inline CliResult cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = partid::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace testutil
