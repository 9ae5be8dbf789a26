/* Wall-time comparison of the serial and OpenMP sweep kernels on the
 * heavier verification workloads. */
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "partid/verify.hpp"

namespace {

double run(const std::string& identity, int max_n, bool parallel)
{
    partid::VerifyOptions opt;
    opt.max_n = max_n;
    opt.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    partid::VerificationReport rep = partid::verify_identity(identity, opt);
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.passed()) {
        std::cerr << "benchmark aborted: " << identity << " failed verification\n";
        std::exit(1);
    }
    return sec;
}

}  // namespace

int main()
{
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run serial\n";
#endif
    std::cout << std::left << std::setw(12) << "sweep" << std::right << std::setw(12)
              << "serial[s]" << std::setw(12) << "parallel[s]" << std::setw(10) << "speedup"
              << "\n";
    struct Job {
        const char* identity;
        int max_n;
    };
    for (const Job& job : {Job{"macmahon", 80}, Job{"refined", 66}, Job{"andrews", 34},
                           Job{"phi", 34}}) {
        double serial = run(job.identity, job.max_n, false);
        double parallel = run(job.identity, job.max_n, true);
        std::cout << std::left << std::setw(12) << job.identity << std::right << std::fixed
                  << std::setprecision(3) << std::setw(12) << serial << std::setw(12) << parallel
                  << std::setprecision(2) << std::setw(10) << serial / parallel << "\n";
    }
    return 0;
}
