#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bcnet {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit = 0; // seconds; 0 when the criterion has no runtime bound
};

/// The twelve acceptance checks, run in order; `report` sees each result as it finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240601,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  3  homomorphism ...  (0.41 s)"
std::string format_result(const CriterionResult& r);

} // namespace bcnet
