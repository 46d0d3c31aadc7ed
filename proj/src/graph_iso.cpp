#include <algorithm>
#include <map>
#include <numeric>

#include "surfwidth/graph.h"

namespace surfwidth {

namespace {

// Iterated neighborhood-color refinement (1-WL). Returns a stable coloring;
// isomorphic graphs refined together get matching color multisets.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    const int n = g.vertex_count();
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.degree(v));
            for (int w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> index;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = index.find(sig[v]);
            if (it == index.end())
                it = index.emplace(sig[v], static_cast<int>(index.size())).first;
            next[v] = it->second;
        }
        bool stable = true;
        for (int v = 0; v < n && stable; ++v)
            for (int w = v + 1; w < n; ++w)
                if ((color[v] == color[w]) != (next[v] == next[w])) {
                    stable = false;
                    break;
                }
        color = std::move(next);
        if (stable) break;
    }
    return color;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> color_a, color_b;
    std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
    std::vector<char> used_b;
    std::vector<int> order;    // a-vertices, most-constrained first

    bool feasible(int va, int vb) const {
        if (color_a[va] != color_b[vb]) return false;
        // Mapped neighbors of va must land on neighbors of vb; equal counts
        // of mapped/used neighbors then force the correspondence both ways.
        for (int w : a.neighbors(va)) {
            int mw = map_ab[w];
            if (mw >= 0 && !b.has_edge(vb, mw)) return false;
        }
        int mapped_nb_a = 0, mapped_nb_b = 0;
        for (int w : a.neighbors(va))
            if (map_ab[w] >= 0) ++mapped_nb_a;
        for (int w : b.neighbors(vb))
            if (used_b[w]) ++mapped_nb_b;
        return mapped_nb_a == mapped_nb_b;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int va = order[depth];
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            if (used_b[vb] || !feasible(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = 1;
            if (extend(depth + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    std::vector<int> ca = refine_colors(a, std::vector<int>(n, 0));
    std::vector<int> cb = refine_colors(b, std::vector<int>(n, 0));
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    IsoSearch s{a, b, ca, cb, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
    // Order a-vertices: BFS from a vertex of the rarest color, so each new
    // vertex has a mapped neighbor constraining it.
    std::vector<int> class_size(1 + *std::max_element(ca.begin(), ca.end()), 0);
    for (int c : ca) ++class_size[c];
    int root = 0;
    for (int v = 1; v < n; ++v)
        if (class_size[ca[v]] < class_size[ca[root]]) root = v;
    std::vector<char> seen(n, 0);
    std::vector<int> queue = {root};
    seen[root] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        s.order.push_back(v);
        for (int w : a.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    for (int v = 0; v < n; ++v)          // disconnected leftovers
        if (!seen[v]) s.order.push_back(v);

    if (!s.extend(0)) return std::nullopt;
    return s.map_ab;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

} // namespace surfwidth
