#include "surfwidth/graph.h"

#include <algorithm>
#include <queue>

#include "surfwidth/errors.h"

namespace surfwidth {

Graph::Graph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
    if (vertex_count < 0) throw ArgumentError("negative vertex count");
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("loop edge rejected");
    if (has_edge(u, v)) throw ArgumentError("duplicate edge rejected");
    if (u > v) std::swap(u, v);
    int id = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    return id;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e] == std::pair<int, int>(u, v)) return e;
    return -1;
}

std::pair<int, int> Graph::edge(int e) const {
    if (e < 0 || e >= edge_count()) throw ArgumentError("edge id out of range");
    return edges_[e];
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex out of range");
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex out of range");
    return adj_[v];
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n_;
}

bool Graph::acyclic() const {
    // A simple graph is acyclic iff every component has |E| = |V| - 1;
    // equivalently a DFS never meets a visited non-parent vertex.
    std::vector<int> parent(n_, -2);
    for (int s = 0; s < n_; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (w == parent[v]) continue;
                if (parent[w] != -2) return false;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return true;
}

bool Graph::is_tree() const { return connected() && edge_count() == n_ - 1; }

bool Graph::is_chain() const {
    if (n_ == 0) return false;
    if (edge_count() != n_ - 1) return false;
    for (int i = 0; i + 1 < n_; ++i)
        if (!has_edge(i, i + 1)) return false;
    return true;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);     // outer pentagon
        g.add_edge(i, i + 5);           // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

Graph heawood_graph() {
    // Bipartite circulant presentation: vertex i joined to i+1 and, for
    // even i, to i+5 (mod 14).
    Graph g(14);
    for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

Graph circulant_graph(int n, const std::vector<int>& dists) {
    Graph g(n);
    for (int d : dists) {
        if (d <= 0 || 2 * d > n) throw ArgumentError("bad circulant distance");
        for (int i = 0; i < n; ++i) {
            int j = (i + d) % n;
            if (!g.has_edge(i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& removed,
                       std::vector<int>* old_of_new) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.vertex_count()) throw ArgumentError("removed vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> new_id(g.vertex_count(), -1);
    int k = 0;
    if (old_of_new) old_of_new->clear();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) {
            new_id[v] = k++;
            if (old_of_new) old_of_new->push_back(v);
        }
    Graph h(k);
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) h.add_edge(new_id[u], new_id[v]);
    return h;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw ArgumentError("permutation size mismatch");
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

} // namespace surfwidth
