#include "signet/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace signet {

namespace {

std::string where(const std::string& origin, int line) {
    return origin + ":" + std::to_string(line);
}

} // namespace

SignedDigraph read_graph(std::istream& in, const std::string& origin) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<SignedArc> arcs;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue; // blank or comment-only line
        if (n < 0) {
            long count = 0;
            if (first != "n" || !(fields >> count)) {
                throw ParseError(where(origin, line_no) + ": expected header 'n <count>'");
            }
            n = static_cast<int>(count);
            continue;
        }
        long tail = 0, head = 0;
        std::string sign_tok;
        std::istringstream arc_fields(line);
        if (!(arc_fields >> tail >> head >> sign_tok) || (sign_tok != "+" && sign_tok != "-")) {
            throw ParseError(where(origin, line_no) + ": expected '<tail> <head> <+|->', got '" +
                             line + "'");
        }
        std::string extra;
        if (arc_fields >> extra) {
            throw ParseError(where(origin, line_no) + ": trailing tokens after arc");
        }
        arcs.push_back(SignedArc{static_cast<NodeId>(tail), static_cast<NodeId>(head),
                                 sign_tok == "+" ? Sign::Positive : Sign::Negative});
    }
    if (n < 0) {
        throw ParseError(origin + ": missing 'n <count>' header");
    }
    try {
        return SignedDigraph(n, std::move(arcs));
    } catch (const Error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

SignedDigraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file " + path.string());
    }
    return read_graph(in, path.string());
}

void write_graph(std::ostream& out, const SignedDigraph& g) {
    out << "n " << g.node_count() << "\n";
    for (const SignedArc& a : g.arcs()) {
        out << a.tail << " " << a.head << " " << sign_char(a.sign) << "\n";
    }
}

void write_graph_file(const std::filesystem::path& path, const SignedDigraph& g) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open " + path.string() + " for writing");
    }
    write_graph(out, g);
}

} // namespace signet
