#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "surfwidth/embedding.h"
#include "surfwidth/graph.h"

namespace surfwidth {

/// Spherical embedding of one of the five Platonic solids:
/// tetrahedron, cube, octahedron, dodecahedron, icosahedron.
EmbeddedGraph platonic(const std::string& name);

/// C_n x K_2 on the sphere.
EmbeddedGraph prism(int n);

/// C_m x C_n quadrangulation of the torus (m, n >= 3).
EmbeddedGraph toroidal_grid(int m, int n);

/// Quadrangulation of the Klein bottle: an m x n grid closed up with one
/// orientation-reversing identification (the seam column carries sign -1).
EmbeddedGraph klein_grid(int m, int n);

/// The triangular embedding of K6 in the projective plane, built as the
/// antipodal quotient of the icosahedron. Its dual is the Petersen graph.
EmbeddedGraph k6_projective();

/// The triangular embedding of K7 on the torus (Ringel's rotation scheme).
/// Its dual is the Heawood graph.
EmbeddedGraph k7_torus();

struct EmbeddingSearchOptions {
    bool require_polyhedral = true;
    /// Also enumerate edge-sign patterns (non-orientable candidates).
    bool allow_nonorientable = true;
    /// Cap on enumerated candidates (rotation systems x sign patterns).
    std::uint64_t budget = 100000000ULL;
    /// If set, sample candidates at random instead of exhaustively; the
    /// budget then counts sampling attempts.
    std::optional<std::uint64_t> seed;
};

/// Searches the embeddings of g for one with Euler characteristic
/// target_chi. Deterministic: candidates are enumerated in lexicographic
/// order (vertex 0's rotation fixed up to rotation/reflection, signs on
/// co-tree edges only, all-positive pattern first) and the first hit is
/// returned. Throws ResourceExhausted when the candidate budget is blown.
std::optional<EmbeddedGraph> embedding_search(const Graph& g, int target_chi,
                                              const EmbeddingSearchOptions& opts = {});

} // namespace surfwidth
