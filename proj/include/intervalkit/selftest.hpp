#pragma once

#include <string>
#include <vector>

namespace intervalkit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Reproduces the worked examples, tables and solver closed forms shipped
/// with the library (criteria 1 to 11).
std::vector<CriterionResult> run_selftest();

CriterionResult run_criterion(int id);

inline constexpr int selftest_criteria = 11;

} // namespace intervalkit
