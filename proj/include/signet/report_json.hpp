#pragma once

#include <string>

#include "signet/analysis.hpp"
#include "signet/config.hpp"

namespace signet {

/// Deterministic JSON renderings of batch artifacts: keys are sorted and no
/// volatile fields (timestamps, host names) appear, so identical inputs give
/// byte-identical text.
std::string report_to_json(const MonteCarloReport& report, int indent = 2);
std::string validation_to_json(const ValidationReport& report, int indent = 2);
std::string trajectory_summary_to_json(const TrajectoryRecord& traj, const Verdict& verdict,
                                       int indent = 2);
std::string sweep_to_csv(const std::vector<BetaSweepRow>& rows);

} // namespace signet
