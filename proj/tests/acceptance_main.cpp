// Acceptance suite runner: one pass/fail line per criterion, nonzero exit if
// any criterion fails.

#include <cstring>
#include <iostream>

#include "signet/acceptance.hpp"

int main(int argc, char** argv) {
    signet::accept::Options opts;
    std::vector<int> ids = signet::accept::all_criteria();
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--threads") == 0 && k + 1 < argc) {
            opts.threads = std::atoi(argv[++k]);
        } else {
            ids = signet::accept::suite_criteria(argv[k]);
            if (ids.empty()) {
                std::cerr << "unknown suite '" << argv[k] << "'\n";
                return 2;
            }
        }
    }
    bool all_passed = true;
    for (int id : ids) {
        const auto result = signet::accept::run_criterion(id, opts);
        std::cout << signet::accept::format_result(result) << std::endl;
        all_passed = all_passed && result.passed;
    }
    std::cout << (all_passed ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
              << std::endl;
    return all_passed ? 0 : 1;
}
