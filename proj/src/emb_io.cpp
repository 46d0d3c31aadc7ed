#include "surfwidth/emb_io.h"

#include <fstream>
#include <sstream>

#include "surfwidth/errors.h"

namespace surfwidth {

namespace {

bool read_int(std::istringstream& ss, int& out) {
    return static_cast<bool>(ss >> out);
}

} // namespace

EmbeddedGraph read_emb(std::istream& in) {
    int n = -1;
    std::vector<EmbEdge> edges;
    std::vector<char> edge_seen;
    std::vector<std::vector<int>> rot;
    std::vector<char> rot_seen;

    std::string line;
    int lineno = 0;
    int vertices_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word) || word[0] == '#') continue;

        if (word == "vertices") {
            if (n >= 0) throw ParseError(lineno, "duplicate vertices line");
            if (!read_int(ss, n) || n < 2)
                throw ParseError(lineno, "vertices needs a count of at least 2");
            rot.assign(n, {});
            rot_seen.assign(n, 0);
            vertices_line = lineno;
        } else if (word == "edge") {
            if (n < 0) throw ParseError(lineno, "edge before vertices line");
            int id, u, v;
            std::string sign;
            if (!read_int(ss, id) || !read_int(ss, u) || !read_int(ss, v) || !(ss >> sign))
                throw ParseError(lineno, "expected: edge <id> <u> <v> <+|->");
            if (sign != "+" && sign != "-")
                throw ParseError(lineno, "edge sign must be + or -");
            if (id < 0) throw ParseError(lineno, "negative edge id");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "loop edge rejected");
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (edge_seen[e] && ((edges[e].u == u && edges[e].v == v) ||
                                     (edges[e].u == v && edges[e].v == u)))
                    throw ParseError(lineno, "duplicate edge between " + std::to_string(u) +
                                                 " and " + std::to_string(v));
            if (id >= static_cast<int>(edges.size())) {
                edges.resize(id + 1, EmbEdge{-1, -1, 1});
                edge_seen.resize(id + 1, 0);
            }
            if (edge_seen[id]) throw ParseError(lineno, "edge id " + std::to_string(id) + " redeclared");
            edges[id] = {u, v, sign == "+" ? 1 : -1};
            edge_seen[id] = 1;
        } else if (word == "rot") {
            if (n < 0) throw ParseError(lineno, "rot before vertices line");
            std::string vtok;
            if (!(ss >> vtok)) throw ParseError(lineno, "expected: rot <v>: <edge ids>");
            if (!vtok.empty() && vtok.back() == ':') vtok.pop_back();
            int v;
            try {
                v = std::stoi(vtok);
            } catch (...) {
                throw ParseError(lineno, "bad vertex id in rot line");
            }
            if (v < 0 || v >= n) throw ParseError(lineno, "rot vertex out of range");
            if (rot_seen[v]) throw ParseError(lineno, "duplicate rot line for vertex " + std::to_string(v));
            rot_seen[v] = 1;
            std::string tok;
            while (ss >> tok) {
                if (tok == ":") continue;
                int e;
                try {
                    e = std::stoi(tok);
                } catch (...) {
                    throw ParseError(lineno, "bad edge id in rot line");
                }
                rot[v].push_back(e);
            }
        } else {
            throw ParseError(lineno, "unknown declaration '" + word + "'");
        }
    }

    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing vertices line");
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!edge_seen[e])
            throw ParseError(vertices_line, "edge ids not contiguous: missing edge " + std::to_string(e));
    for (int v = 0; v < n; ++v)
        if (!rot_seen[v])
            throw ParseError(vertices_line, "missing rot line for vertex " + std::to_string(v));
    for (int v = 0; v < n; ++v)
        for (int e : rot[v])
            if (e < 0 || e >= static_cast<int>(edges.size()))
                throw ParseError(vertices_line, "rot of vertex " + std::to_string(v) +
                                                    " references unknown edge " + std::to_string(e));

    try {
        return EmbeddedGraph(n, std::move(edges), std::move(rot));
    } catch (const StructuralError& e) {
        throw ParseError(vertices_line, e.what());
    }
}

void write_emb(const EmbeddedGraph& g, std::ostream& out) {
    out << "vertices " << g.vertex_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const EmbEdge& ed = g.edge(e);
        out << "edge " << e << " " << ed.u << " " << ed.v << " " << (ed.sign > 0 ? '+' : '-')
            << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v << ":";
        for (int e : g.rotation(v)) out << " " << e;
        out << "\n";
    }
}

EmbeddedGraph load_emb(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    return read_emb(in);
}

void save_emb(const EmbeddedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot open " + path + " for writing");
    write_emb(g, out);
}

} // namespace surfwidth
