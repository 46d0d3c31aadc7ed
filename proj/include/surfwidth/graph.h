#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfwidth {

/// Simple undirected graph on vertices 0..n-1. Edges keep their insertion
/// ids, so a graph derived from an embedding shares the embedding's edge
/// numbering.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Adds edge {u,v} and returns its id. Rejects loops and duplicates.
    int add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    /// Edge id of {u,v}, or -1.
    int edge_id(int u, int v) const;
    std::pair<int, int> edge(int e) const;
    int degree(int v) const;
    /// Neighbors in ascending order.
    const std::vector<int>& neighbors(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool connected() const;
    bool acyclic() const;
    bool is_tree() const;
    /// True iff the graph is exactly the chain 0-1-...-(n-1).
    bool is_chain() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// Star K_{1,leaves}; vertex 0 is the center.
Graph star_graph(int leaves);
Graph petersen_graph();
Graph heawood_graph();
/// Circulant graph C_n(d_1,...,d_k).
Graph circulant_graph(int n, const std::vector<int>& dists);

/// Copy of g without `removed` vertices (ids remapped downward, preserving
/// order). If old_of_new is given, it receives the old id of each new vertex.
Graph induced_subgraph(const Graph& g, const std::vector<int>& removed,
                       std::vector<int>* old_of_new = nullptr);

/// Copy of g with vertex v renamed to perm[v].
Graph relabeled(const Graph& g, const std::vector<int>& perm);

/// Exact graph isomorphism for desk-scale graphs: color refinement plus
/// backtracking. Returns a vertex map a -> b if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool isomorphic(const Graph& a, const Graph& b);

} // namespace surfwidth
