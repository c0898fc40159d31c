#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "signet/graph.hpp"

namespace signet {

/// Text format, one arc per line after the header:
///
///     # optional comments
///     n 5
///     0 1 +
///     4 2 -
///
/// The writer emits arcs in canonical (tail, head) order so that a
/// write/read round trip is lossless.
SignedDigraph read_graph(std::istream& in, const std::string& origin = "<stream>");
SignedDigraph read_graph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const SignedDigraph& g);
void write_graph_file(const std::filesystem::path& path, const SignedDigraph& g);

} // namespace signet
