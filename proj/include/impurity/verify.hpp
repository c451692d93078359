#pragma once

#include <string>
#include <vector>

#include "impurity/run_config.hpp"

namespace impurity::verify {

struct Check {
    std::string name;
    bool pass{};
    double measured{};   // worst-case residual for the check
    double tolerance{};
    std::string detail;  // optional, human-oriented
};

struct VerificationReport {
    bool overall{};
    std::vector<Check> checks;
};

// Runs the internal consistency suite for the configured system and
// statistics. Throws only on configuration errors; numerical failures are
// reported as failing checks.
VerificationReport run_verification(const RunConfig& cfg);

std::string to_json(const VerificationReport& report);

}  // namespace impurity::verify
