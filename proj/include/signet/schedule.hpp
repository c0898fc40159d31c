#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// Deterministic periodic environment {G_t}: graph_at(t) = frames[t mod period].
class GraphSchedule {
public:
    explicit GraphSchedule(std::vector<SignedDigraph> frames);

    int period() const { return static_cast<int>(frames_.size()); }
    int node_count() const { return frames_.front().node_count(); }
    const std::vector<SignedDigraph>& frames() const { return frames_; }

    const SignedDigraph& graph_at(std::int64_t t) const {
        return frames_[static_cast<std::size_t>(t % period())];
    }

private:
    std::vector<SignedDigraph> frames_;
};

/// Union of all frame arc sets, plus the frame indices each arc appears in.
/// In a periodic schedule an arc appears infinitely often iff its hit set is
/// nonempty, which holds for every arc of the union by construction.
struct TotalGraph {
    SignedDigraph graph;
    std::map<std::pair<NodeId, NodeId>, std::vector<int>> frame_hits;
};

/// True iff no ordered pair appears with different signs in two frames.
bool is_sign_consistent(const GraphSchedule& sched);

/// Sign-sensitive union over all frames. Throws SignConflictError if the
/// schedule is not sign consistent.
TotalGraph total_graph(const GraphSchedule& sched);

enum class ConnectivityMode { All, PositiveOnly, NegativeOnly };

/// True iff for every start offset t in [0, period) the sign-erased union of
/// frames t..t+K-1 (restricted to the requested arc sign) is strongly
/// connected. Periodicity makes one period of start offsets sufficient.
bool check_window_connectivity(const GraphSchedule& sched, int window, ConnectivityMode mode);

/// Smallest K in [1, period] for which check_window_connectivity holds, if
/// any. A window of length period already unions every frame, so no larger K
/// can succeed where K = period fails.
std::optional<int> minimal_connectivity_window(const GraphSchedule& sched, ConnectivityMode mode);

/// Schedule manifest: `period <k>` plus one `frame <path>` line per frame,
/// paths relative to the manifest file. Frames reuse the graph text format.
GraphSchedule read_schedule_manifest(const std::filesystem::path& path);
void write_schedule_manifest(const std::filesystem::path& path,
                             const GraphSchedule& sched,
                             const std::string& frame_stem);

} // namespace signet
