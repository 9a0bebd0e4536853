// Acceptance suite: runs every verification criterion at its fixed tolerance
// and prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <iostream>

#include "gammasg/verify.hpp"

int main() {
    const std::vector<gammasg::CheckResult> results = gammasg::run_verification_suite();
    return gammasg::report_checks(results, std::cout);
}
