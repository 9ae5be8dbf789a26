#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "partid/checked.hpp"

namespace partid {

struct CheckResult {
    std::string name;
    bool passed = true;
    i64 cases = 0;       // how many instances were compared
    double seconds = 0;  // wall time
    std::string detail;  // first counterexample, when failed
};

struct VerificationReport {
    std::string identity;
    std::vector<CheckResult> checks;

    bool passed() const;
    i64 total_cases() const;
    void print(std::ostream& os) const;
};

struct VerifyOptions {
    int max_n = -1;        // -1 = per-identity default
    int r_lo = 1;
    int r_hi = 3;
    int m_lo = 2;
    int m_hi = 5;
    bool parallel = true;
};

/* Identities: macmahon, refined, companion, andrews, phi, lemmas, series,
 * colored, all. Each runs its enumeration-vs-enumeration equalities, the
 * matching series cross-check, and the bijection round-trip and image
 * checks, with independent n values fanned out across threads. */
VerificationReport verify_identity(const std::string& name, const VerifyOptions& opt = {});
std::vector<std::string> verify_names();

}  // namespace partid
