#pragma once

#include <string>
#include <vector>

namespace zetareg::cli {

struct CheckResult {
    std::string name;   // "suite/identity"
    bool pass;
    double worst;       // worst residual observed (0 for exact identities)
    double bound;       // the contract the residual is held to
    std::string detail;
};

// Runs the identity checks of one module suite ("exact", "special", "mu",
// "regint") or every suite ("all").  Failures are report content, not errors.
std::vector<CheckResult> verify_suite(const std::string& suite);

} // namespace zetareg::cli
