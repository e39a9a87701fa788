#include "bcnet/acceptance.hpp"

#include <iostream>

int main() {
    int failed = 0;
    bcnet::run_acceptance(20240601, [&](const bcnet::CriterionResult& r) {
        std::cout << bcnet::format_result(r) << std::endl;
        failed += !r.pass;
    });
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 12 criteria pass") << std::endl;
    return failed ? 1 : 0;
}
