#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace defectlab {

inline constexpr int criterion_count = 11;

struct CriterionResult {
    int index = 0; // 1-based
    std::string name;
    bool pass = false;
    std::string detail; // one-line evidence (counts, extremes) or failure cause
};

// Runs one certification criterion (1..criterion_count); throws only on
// internal setup faults, never on a criterion verdict.
CriterionResult run_criterion(int index, std::uint64_t seed);

// Runs the whole battery in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

} // namespace defectlab
