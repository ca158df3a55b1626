#include "treecount/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace treecount {

namespace {

bool parse_uint(const std::string& tok, unsigned long& out) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
    try {
        out = std::stoul(tok);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

bool parse_big(const std::string& tok, BigCount& out) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
    out = BigCount(tok);
    return true;
}

}  // namespace

MultiGraph parse_edge_list(std::istream& in, std::ostream* warnings) {
    struct Edge {
        unsigned long u, v;
        BigCount mult;
    };
    std::vector<Edge> edges;
    unsigned long max_id = 0;
    bool saw_vertex = false;
    bool header_seen = false;
    bool data_seen = false;
    unsigned long header_n = 0;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (toks[0] == "vertices") {
            if (data_seen || header_seen)
                throw ParseError(lineno, "'vertices' header must be the first data line");
            if (toks.size() != 2 || !parse_uint(toks[1], header_n))
                throw ParseError(lineno, "expected 'vertices N'");
            header_seen = true;
            continue;
        }

        unsigned long u, v;
        BigCount mult;
        if (toks.size() != 3 || !parse_uint(toks[0], u) || !parse_uint(toks[1], v) ||
            !parse_big(toks[2], mult))
            throw ParseError(lineno, "expected 'u v m' with nonnegative ids and integer m");
        if (mult < 1) throw ParseError(lineno, "multiplicity must be positive");
        if (header_seen && (u >= header_n || v >= header_n))
            throw ParseError(lineno, "vertex id exceeds declared vertex count");
        data_seen = true;
        if (u == v) {
            if (warnings)
                *warnings << "warning: line " << lineno << ": self-loop on vertex " << u
                          << " ignored\n";
            continue;
        }
        max_id = std::max({max_id, u, v});
        saw_vertex = true;
        edges.push_back({u, v, std::move(mult)});
    }

    unsigned long n = header_seen ? header_n : (saw_vertex ? max_id + 1 : 0);
    MultiGraph g(n);
    for (const Edge& e : edges) g = g.add_edges(e.u, e.v, e.mult);
    return g;
}

MultiGraph parse_edge_list_file(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_edge_list(in, warnings);
}

void write_edge_list(const MultiGraph& g, std::ostream& out) {
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& [uv, m] : g.edges())
        out << uv.first << " " << uv.second << " " << m.get_str() << "\n";
}

void write_dot(const MultiGraph& g, std::ostream& out, const std::string& name) {
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [uv, m] : g.edges()) {
        if (!m.fits_ulong_p()) throw Error("multiplicity too large for DOT expansion");
        for (unsigned long i = 0; i < m.get_ui(); ++i)
            out << "  " << uv.first << " -- " << uv.second << ";\n";
    }
    out << "}\n";
}

void write_json(const MultiGraph& g, std::ostream& out) {
    // hand-rolled so multiplicities stay exact arbitrary-precision numbers
    out << "{\"vertices\": " << g.vertex_count() << ", \"edges\": [";
    bool first = true;
    for (const auto& [uv, m] : g.edges()) {
        if (!first) out << ", ";
        first = false;
        out << "{\"u\": " << uv.first << ", \"v\": " << uv.second << ", \"mult\": " << m.get_str()
            << "}";
    }
    out << "]}\n";
}

}  // namespace treecount
