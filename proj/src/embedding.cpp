#include "surfwidth/embedding.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "surfwidth/errors.h"

namespace surfwidth {

EmbeddedGraph::EmbeddedGraph(int vertex_count, std::vector<EmbEdge> edges,
                             std::vector<std::vector<int>> rotations)
    : n_(vertex_count), edges_(std::move(edges)), rot_(std::move(rotations)) {
    if (n_ < 2) throw StructuralError("embedding needs at least 2 vertices");
    if (edges_.empty()) throw StructuralError("embedding needs at least 1 edge");
    if (static_cast<int>(rot_.size()) != n_)
        throw StructuralError("one rotation per vertex required");

    std::set<std::pair<int, int>> seen_pairs;
    for (const EmbEdge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw StructuralError("edge endpoint out of range");
        if (e.u == e.v) throw StructuralError("loop edge rejected");
        if (e.sign != 1 && e.sign != -1) throw StructuralError("edge sign must be +1 or -1");
        auto p = std::minmax(e.u, e.v);
        if (!seen_pairs.insert({p.first, p.second}).second)
            throw StructuralError("parallel edge rejected");
    }

    // Each vertex's rotation lists exactly its incident edges, once each.
    std::vector<std::vector<int>> incident(n_);
    for (int e = 0; e < edge_count(); ++e) {
        incident[edges_[e].u].push_back(e);
        incident[edges_[e].v].push_back(e);
    }
    for (int v = 0; v < n_; ++v) {
        std::vector<int> rot_sorted = rot_[v];
        std::sort(rot_sorted.begin(), rot_sorted.end());
        if (std::adjacent_find(rot_sorted.begin(), rot_sorted.end()) != rot_sorted.end())
            throw StructuralError("rotation of vertex " + std::to_string(v) +
                                  " repeats an edge");
        std::sort(incident[v].begin(), incident[v].end());
        if (rot_sorted != incident[v])
            throw StructuralError("rotation of vertex " + std::to_string(v) +
                                  " does not match its incident edges");
    }

    if (!graph().connected()) throw StructuralError("embedded graph must be connected");
}

int EmbeddedGraph::edge_other(int e, int v) const {
    const EmbEdge& ed = edges_[e];
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw ArgumentError("vertex not on edge");
}

int EmbeddedGraph::edge_id(int u, int v) const {
    for (int e = 0; e < edge_count(); ++e) {
        auto& ed = edges_[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
    }
    return -1;
}

int EmbeddedGraph::dart_leaving(int e, int v) const {
    const EmbEdge& ed = edges_[e];
    if (ed.u == v) return dart_id(e, 0);
    if (ed.v == v) return dart_id(e, 1);
    throw ArgumentError("vertex not on edge");
}

Graph EmbeddedGraph::graph() const {
    Graph g(n_);
    for (const EmbEdge& e : edges_) g.add_edge(e.u, e.v);
    return g;
}

std::vector<int> FacialWalk::vertex_seq(const EmbeddedGraph& g) const {
    std::vector<int> vs;
    vs.reserve(darts.size());
    for (int d : darts) vs.push_back(g.dart_from(d));
    return vs;
}

std::vector<int> FacialWalk::edge_seq() const {
    std::vector<int> es;
    es.reserve(darts.size());
    for (int d : darts) es.push_back(dart_edge(d));
    return es;
}

namespace {

// (dart, side) state encoding: positive side gets the even slot so that the
// numeric order is (edge, end, +, -).
inline int state_id(int dart, int side) { return 2 * dart + (side < 0 ? 1 : 0); }
inline int state_dart(int s) { return s >> 1; }
inline int state_side(int s) { return (s & 1) ? -1 : +1; }

struct Tracer {
    const EmbeddedGraph& g;
    std::vector<int> pos; // pos[dart]: index of dart's edge in rot(from(dart))

    explicit Tracer(const EmbeddedGraph& graph) : g(graph), pos(2 * graph.edge_count(), -1) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& rot = g.rotation(v);
            for (int i = 0; i < static_cast<int>(rot.size()); ++i)
                pos[g.dart_leaving(rot[i], v)] = i;
        }
        for (int d = 0; d < 2 * g.edge_count(); ++d)
            if (pos[d] < 0) throw StructuralError("dart missing from rotation");
    }

    // One step of the face-tracing rule: traverse the dart, flip the side on
    // a negative edge, then turn to the rotation successor (positive side)
    // or predecessor (negative side) of the twin at the arrival vertex.
    int next_state(int s) const {
        int d = state_dart(s);
        int side = state_side(s);
        int e = dart_edge(d);
        int v = g.dart_to(d);
        if (g.edge(e).sign < 0) side = -side;
        const auto& rot = g.rotation(v);
        int deg = static_cast<int>(rot.size());
        int j = pos[dart_twin(d)];
        int j2 = side > 0 ? (j + 1) % deg : (j + deg - 1) % deg;
        return state_id(g.dart_leaving(rot[j2], v), side);
    }

    // The state tracing the same edge side in the opposite direction; the
    // orbit of the mirror state is the same face walked backwards.
    int mirror_state(int s) const {
        int d = state_dart(s);
        int side = state_side(s);
        int e = dart_edge(d);
        return state_id(dart_twin(d), -side * g.edge(e).sign);
    }
};

} // namespace

std::vector<FacialWalk> trace_faces(const EmbeddedGraph& g) {
    Tracer tracer(g);
    const int num_states = 4 * g.edge_count();
    std::vector<char> used(num_states, 0);
    std::vector<FacialWalk> faces;

    for (int start = 0; start < num_states; ++start) {
        if (used[start]) continue;
        FacialWalk walk;
        int s = start;
        do {
            used[s] = 1;
            used[tracer.mirror_state(s)] = 1;
            walk.darts.push_back(state_dart(s));
            walk.sides.push_back(state_side(s));
            s = tracer.next_state(s);
        } while (s != start);
        faces.push_back(std::move(walk));
    }
    return faces;
}

SurfaceInfo euler_characteristic(const EmbeddedGraph& g) {
    int f = static_cast<int>(trace_faces(g).size());
    int chi = g.vertex_count() - g.edge_count() + f;

    // Orientable iff the signs are a coboundary: assign +-1 to vertices by
    // BFS so that every tree edge satisfies sign(uv) = x_u * x_v, then check
    // the remaining edges.
    std::vector<int> x(g.vertex_count(), 0);
    std::queue<int> q;
    x[0] = 1;
    q.push(0);
    Graph abs = g.graph();
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : abs.neighbors(v)) {
            if (x[w] != 0) continue;
            x[w] = x[v] * g.edge(g.edge_id(v, w)).sign;
            q.push(w);
        }
    }
    bool orientable = true;
    for (const EmbEdge& e : g.edges())
        if (e.sign != x[e.u] * x[e.v]) {
            orientable = false;
            break;
        }
    return {chi, orientable};
}

PolyhedralReport check_polyhedral(const EmbeddedGraph& g) {
    std::vector<FacialWalk> faces = trace_faces(g);

    std::vector<std::vector<int>> face_vertices(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
        std::vector<int> vs = faces[f].vertex_seq(g);
        std::vector<int> sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return {false, "facial walk " + std::to_string(f) + " is not a cycle (repeats a vertex)"};
        if (vs.size() < 3)
            return {false, "facial walk " + std::to_string(f) + " is not a cycle (length " +
                               std::to_string(vs.size()) + ")"};
        face_vertices[f] = std::move(sorted);
    }

    // Shared edges per face pair; polyhedrality forbids two.
    std::vector<std::vector<int>> edge_faces(g.edge_count());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int e : faces[f].edge_seq()) edge_faces[e].push_back(static_cast<int>(f));

    std::map<std::pair<int, int>, std::vector<int>> shared_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto& fs = edge_faces[e];
        if (fs.size() != 2) // walks are cycles, so this should not happen here
            return {false, "edge " + std::to_string(e) + " does not lie on two faces"};
        auto key = std::minmax(fs[0], fs[1]);
        if (key.first == key.second)
            return {false, "face " + std::to_string(key.first) + " meets itself across edge " +
                               std::to_string(e)};
        shared_edges[{key.first, key.second}].push_back(e);
    }

    for (std::size_t f1 = 0; f1 < faces.size(); ++f1) {
        for (std::size_t f2 = f1 + 1; f2 < faces.size(); ++f2) {
            std::vector<int> common;
            std::set_intersection(face_vertices[f1].begin(), face_vertices[f1].end(),
                                  face_vertices[f2].begin(), face_vertices[f2].end(),
                                  std::back_inserter(common));
            auto it = shared_edges.find({static_cast<int>(f1), static_cast<int>(f2)});
            std::size_t n_edges = it == shared_edges.end() ? 0 : it->second.size();
            bool ok;
            if (common.empty()) {
                ok = n_edges == 0;
            } else if (common.size() == 1) {
                ok = n_edges == 0;
            } else if (common.size() == 2 && n_edges == 1) {
                const EmbEdge& e = g.edge(it->second[0]);
                auto p = std::minmax(e.u, e.v);
                ok = common[0] == p.first && common[1] == p.second;
            } else {
                ok = false;
            }
            if (!ok)
                return {false, "faces " + std::to_string(f1) + " and " + std::to_string(f2) +
                                   " share " + std::to_string(common.size()) + " vertices and " +
                                   std::to_string(n_edges) + " edges"};
        }
    }
    return {true, ""};
}

EmbeddedGraph dual(const EmbeddedGraph& g) {
    PolyhedralReport rep = check_polyhedral(g);
    if (!rep.polyhedral)
        throw PreconditionError("dual requires a polyhedral embedding: " + rep.violation);

    std::vector<FacialWalk> faces = trace_faces(g);
    const int f_count = static_cast<int>(faces.size());

    // For each primal edge, its two (face, dart) incidences.
    struct Incidence {
        int face = -1;
        int dart = -1;
    };
    std::vector<std::pair<Incidence, Incidence>> inc(g.edge_count());
    std::vector<int> seen(g.edge_count(), 0);
    for (int f = 0; f < f_count; ++f) {
        for (int d : faces[f].darts) {
            int e = dart_edge(d);
            if (seen[e] == 0)
                inc[e].first = {f, d};
            else
                inc[e].second = {f, d};
            ++seen[e];
        }
    }

    std::vector<EmbEdge> dual_edges(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        // Sign +1 when the two faces traverse the edge in opposite
        // directions (their local orientations agree across the edge).
        int sign = inc[e].first.dart != inc[e].second.dart ? +1 : -1;
        dual_edges[e] = {inc[e].first.face, inc[e].second.face, sign};
    }

    // Dual rotation at face f: the edges along f's walk, in walk order.
    std::vector<std::vector<int>> dual_rot(f_count);
    for (int f = 0; f < f_count; ++f) dual_rot[f] = faces[f].edge_seq();

    EmbeddedGraph d(f_count, std::move(dual_edges), std::move(dual_rot));

    // Fact check rather than assumption: the dual lives on the same surface.
    SurfaceInfo si_g = euler_characteristic(g);
    SurfaceInfo si_d = euler_characteristic(d);
    if (si_g.chi != si_d.chi || si_g.orientable != si_d.orientable)
        throw StructuralError("dual construction failed to reproduce the surface");
    return d;
}

Graph face_subdivision(const EmbeddedGraph& g) {
    PolyhedralReport rep = check_polyhedral(g);
    if (!rep.polyhedral)
        throw PreconditionError("face subdivision requires a polyhedral embedding: " +
                                rep.violation);
    std::vector<FacialWalk> faces = trace_faces(g);
    Graph fs(g.vertex_count() + static_cast<int>(faces.size()));
    for (const EmbEdge& e : g.edges()) fs.add_edge(e.u, e.v);
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int v : faces[f].vertex_seq(g))
            fs.add_edge(v, g.vertex_count() + static_cast<int>(f));
    return fs;
}

Graph radial_union(const EmbeddedGraph& g) {
    PolyhedralReport rep = check_polyhedral(g);
    if (!rep.polyhedral)
        throw PreconditionError("radial union requires a polyhedral embedding: " + rep.violation);
    EmbeddedGraph d = dual(g);
    Graph h = face_subdivision(g); // E(G) plus the incidence edges
    for (const EmbEdge& e : d.edges())
        h.add_edge(g.vertex_count() + e.u, g.vertex_count() + e.v);
    return h;
}

} // namespace surfwidth
