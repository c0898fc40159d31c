#pragma once

#include <string>
#include <vector>

namespace signet::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    int threads = 0; // 0: hardware concurrency
};

/// All criterion ids, in execution order.
std::vector<int> all_criteria();

/// Criterion ids bundled under a suite name ("all", "lemmas", "theorem1",
/// "theorem2", "prop3", "structural", "determinism", ...). Empty if unknown.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<std::string> suite_names();

CriterionResult run_criterion(int id, const Options& opts = {});

/// One line per criterion: "PASS C3 theorem1_convergence (...) [12.3s]".
std::string format_result(const CriterionResult& result);

} // namespace signet::accept
