#include "signet/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "signet/graph_io.hpp"

namespace signet {

GraphSchedule::GraphSchedule(std::vector<SignedDigraph> frames) : frames_(std::move(frames)) {
    if (frames_.empty()) {
        throw SemanticError("schedule requires at least one frame");
    }
    const int n = frames_.front().node_count();
    for (const SignedDigraph& f : frames_) {
        if (f.node_count() != n) {
            throw SemanticError("all schedule frames must share the node count");
        }
    }
}

bool is_sign_consistent(const GraphSchedule& sched) {
    std::map<std::pair<NodeId, NodeId>, Sign> seen;
    for (const SignedDigraph& f : sched.frames()) {
        for (const SignedArc& a : f.arcs()) {
            auto [it, inserted] = seen.try_emplace({a.tail, a.head}, a.sign);
            if (!inserted && it->second != a.sign) return false;
        }
    }
    return true;
}

TotalGraph total_graph(const GraphSchedule& sched) {
    std::map<std::pair<NodeId, NodeId>, Sign> signs;
    std::map<std::pair<NodeId, NodeId>, std::vector<int>> hits;
    for (int f = 0; f < sched.period(); ++f) {
        for (const SignedArc& a : sched.frames()[static_cast<std::size_t>(f)].arcs()) {
            auto key = std::make_pair(a.tail, a.head);
            auto [it, inserted] = signs.try_emplace(key, a.sign);
            if (!inserted && it->second != a.sign) {
                throw SignConflictError("schedule is not sign consistent at arc (" +
                                        std::to_string(a.tail) + ", " + std::to_string(a.head) +
                                        ")");
            }
            hits[key].push_back(f);
        }
    }
    std::vector<SignedArc> arcs;
    arcs.reserve(signs.size());
    for (const auto& [key, sign] : signs) {
        arcs.push_back(SignedArc{key.first, key.second, sign});
    }
    return TotalGraph{SignedDigraph(sched.node_count(), std::move(arcs)), std::move(hits)};
}

bool check_window_connectivity(const GraphSchedule& sched, int window, ConnectivityMode mode) {
    if (window < 1) {
        throw SemanticError("connectivity window must be >= 1");
    }
    const int n = sched.node_count();
    for (int start = 0; start < sched.period(); ++start) {
        // sign-erased union of the window, restricted per frame to the
        // requested arc sign before taking the union
        std::vector<SignedArc> pairs;
        for (int off = 0; off < window; ++off) {
            const SignedDigraph& f = sched.graph_at(start + off);
            for (const SignedArc& a : f.arcs()) {
                if (mode == ConnectivityMode::PositiveOnly && a.sign != Sign::Positive) continue;
                if (mode == ConnectivityMode::NegativeOnly && a.sign != Sign::Negative) continue;
                pairs.push_back(SignedArc{a.tail, a.head, Sign::Positive});
            }
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        if (!is_strongly_connected(SignedDigraph(n, std::move(pairs)))) return false;
    }
    return true;
}

std::optional<int> minimal_connectivity_window(const GraphSchedule& sched, ConnectivityMode mode) {
    for (int k = 1; k <= sched.period(); ++k) {
        if (check_window_connectivity(sched, k, mode)) return k;
    }
    return std::nullopt;
}

GraphSchedule read_schedule_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open schedule manifest " + path.string());
    }
    const auto base = path.parent_path();
    std::string line;
    int line_no = 0;
    std::optional<int> declared_period;
    std::vector<SignedDigraph> frames;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key)) continue;
        if (key == "period") {
            int p = 0;
            if (!(fields >> p) || p < 1) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                 ": expected 'period <k>' with k >= 1");
            }
            declared_period = p;
        } else if (key == "frame") {
            std::string rel;
            if (!(fields >> rel)) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                 ": expected 'frame <path>'");
            }
            frames.push_back(read_graph_file(base / rel));
        } else {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": unknown manifest key '" + key + "'");
        }
    }
    if (!declared_period) {
        throw ParseError(path.string() + ": missing 'period' line");
    }
    if (static_cast<int>(frames.size()) != *declared_period) {
        throw ParseError(path.string() + ": period " + std::to_string(*declared_period) +
                         " does not match " + std::to_string(frames.size()) + " frame lines");
    }
    return GraphSchedule(std::move(frames));
}

void write_schedule_manifest(const std::filesystem::path& path,
                             const GraphSchedule& sched,
                             const std::string& frame_stem) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open " + path.string() + " for writing");
    }
    out << "period " << sched.period() << "\n";
    const auto base = path.parent_path();
    for (int f = 0; f < sched.period(); ++f) {
        std::string name = frame_stem + "_" + std::to_string(f) + ".graph";
        write_graph_file(base / name, sched.frames()[static_cast<std::size_t>(f)]);
        out << "frame " << name << "\n";
    }
}

} // namespace signet
