#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammasg {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The end-to-end verification suite: closed-form equivalence of the
// inversion integral, moment reproduction, the semigroup law, tail and
// origin approximations, the determinacy classifier with its Carleman and
// Krein evidence, the additive-line cumulant/recursion identities, the
// whole-line Carleman bound, and the Monte Carlo cross-check. Tolerances
// are fixed in the implementation.
std::vector<CheckResult> run_verification_suite();

// Prints one PASS/FAIL line per check; returns 0 when all pass, 1 otherwise.
int report_checks(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace gammasg
