#pragma once

#include <string>
#include <vector>

#include "surfwidth/graph.h"

namespace surfwidth {

/// Edge of an embedded graph: endpoints plus the embedding sign. Sign -1
/// means traversing the edge reverses the local sense of rotation.
struct EmbEdge {
    int u;
    int v;
    int sign; // +1 or -1
};

/// A dart is one of the two directed versions of an edge, encoded as
/// 2*edge + end. End 0 leaves u. trace_faces walks (dart, side) states.
inline int dart_id(int edge, int end) { return 2 * edge + end; }
inline int dart_edge(int dart) { return dart >> 1; }
inline int dart_end(int dart) { return dart & 1; }
inline int dart_twin(int dart) { return dart ^ 1; }

/// A graph cellularly embedded on a closed surface, as a signed rotation
/// system: per vertex, the cyclic order of incident edges, plus edge signs.
/// The graph must be simple and connected, and every vertex's rotation must
/// list exactly its incident edges.
class EmbeddedGraph {
public:
    EmbeddedGraph(int vertex_count, std::vector<EmbEdge> edges,
                  std::vector<std::vector<int>> rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const EmbEdge& edge(int e) const { return edges_[e]; }
    const std::vector<EmbEdge>& edges() const { return edges_; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int edge_other(int e, int v) const;
    /// Edge id of {u,v}, or -1.
    int edge_id(int u, int v) const;

    int dart_from(int dart) const {
        const EmbEdge& e = edges_[dart_edge(dart)];
        return dart_end(dart) == 0 ? e.u : e.v;
    }
    int dart_to(int dart) const {
        const EmbEdge& e = edges_[dart_edge(dart)];
        return dart_end(dart) == 0 ? e.v : e.u;
    }
    /// Dart of edge e leaving vertex v.
    int dart_leaving(int e, int v) const;

    /// The underlying abstract graph; edge ids are preserved.
    Graph graph() const;

private:
    int n_ = 0;
    std::vector<EmbEdge> edges_;
    std::vector<std::vector<int>> rot_;
};

/// Closed walk bounding one face. darts[i] is traversed with side flag
/// sides[i]; the walk's vertex sequence is dart_from of each dart.
struct FacialWalk {
    std::vector<int> darts;
    std::vector<int> sides;

    int length() const { return static_cast<int>(darts.size()); }
    std::vector<int> vertex_seq(const EmbeddedGraph& g) const;
    std::vector<int> edge_seq() const;
};

struct SurfaceInfo {
    int chi;
    bool orientable;
};

struct PolyhedralReport {
    bool polyhedral;
    std::string violation; // empty when polyhedral
};

/// All facial walks under the signed face-tracing rule. Walk discovery is
/// deterministic: each walk starts at the smallest unused (dart, side)
/// state, positive side first. Sum of walk lengths is 2|E|.
std::vector<FacialWalk> trace_faces(const EmbeddedGraph& g);

SurfaceInfo euler_characteristic(const EmbeddedGraph& g);

/// True iff all facial walks are cycles and any two faces meet in at most
/// one vertex or exactly one shared edge.
PolyhedralReport check_polyhedral(const EmbeddedGraph& g);

/// Geometric dual of a polyhedral embedding. Dual vertex f is face f of g
/// (in trace_faces order) and dual edge i crosses primal edge i, so the
/// face/vertex and edge correspondences are the identity on indices.
EmbeddedGraph dual(const EmbeddedGraph& g);

/// Face subdivision as an abstract graph. Vertices 0..n-1 are the vertices
/// of g; vertex n+f is the new vertex in face f.
Graph face_subdivision(const EmbeddedGraph& g);

/// Union of the face subdivisions of g and its dual, on V(g) plus the face
/// vertices (same numbering as face_subdivision). The vertex-face incidence
/// edges are common to both subdivisions and appear once.
Graph radial_union(const EmbeddedGraph& g);

} // namespace surfwidth
