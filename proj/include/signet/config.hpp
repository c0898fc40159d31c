#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "signet/analysis.hpp"

namespace signet {

/// Parsed experiment file. alpha, beta, b, d, the schedule and the horizon
/// are mandatory; only tolerances, probe stride, threads and claims default.
struct ExperimentConfig {
    explicit ExperimentConfig(ExperimentSpec s) : spec(std::move(s)) {}

    ExperimentSpec spec;
    int runs = 1;
    std::uint64_t base_seed = 0;
    std::string raw_json; // exact config echo for report self-description
};

/// Loads and semantically checks a config file. Throws ParseError on
/// malformed input and SemanticError on constraint violations.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& json_text,
                              const std::filesystem::path& base_dir = ".");

/// Which assumptions the configured environment and model satisfy, which
/// parameter regimes apply, and any claim/hypothesis mismatches. Reported,
/// never silently fixed.
struct ValidationReport {
    int n = 0;
    int period = 0;

    bool a1 = false;
    double p_star = 0.0;
    std::string a1_reason;
    std::optional<int> a2_window;  // minimal K, all arcs
    bool a3 = false;               // sign consistency
    std::optional<int> a4_window;  // minimal K, positive arcs
    std::optional<int> a5_window;  // minimal K, negative arcs
    bool a6 = false;
    bool a6_boundary = false;
    double p_upper = 0.0;
    std::string a6_reason;

    bool nonexpansive = false;
    bool theorem1_regime = false; // alpha + beta < 1/(n-1)
    bool prop3_alpha = false;     // alpha <= (4n)^-1
    bool prop3_beta = false;      // beta > 16 n^(n+1)
    double gamma_star = 0.0;
    double beta_threshold = 0.0;

    std::vector<std::string> warnings;
};

ValidationReport validate_config(const ExperimentConfig& cfg);

std::string format_validation(const ValidationReport& report);

} // namespace signet
