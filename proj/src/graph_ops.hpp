#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "vertex_set.hpp"

namespace eajr {

/// Edges of G[sub] in lexicographic order by (min, max) endpoint. Directed
/// edges are emitted oriented (u, v) meaning u -> v.
std::vector<Edge> induced_edges(const UndirectedGraph& g, const VertexSet& sub);
std::vector<Edge> induced_edges(const Tournament& t, const VertexSet& sub);

/// Open neighborhood of a set restricted to `within`:
/// (union of N(v) over v in s) intersected with `within`.
VertexSet neighborhood(const UndirectedGraph& g, const VertexSet& s,
                       const VertexSet& within);

struct Bipartition {
    VertexSet left;   // contains the lowest-index vertex of each component
    VertexSet right;
};

/// Proper 2-coloring of G[sub], or absent when G[sub] is not bipartite.
/// Within each connected component the class containing the component's
/// lowest-index vertex goes to `left`.
std::optional<Bipartition> bipartition(const UndirectedGraph& g, const VertexSet& sub);

/// When G[sub] fails to be bipartite, an edge whose endpoints received the
/// same color; absent when bipartite. The edge closes an odd cycle with the
/// BFS-tree paths to its endpoints.
std::optional<Edge> odd_cycle_edge(const UndirectedGraph& g, const VertexSet& sub);

/// True iff T[sub] contains no directed triangle.
bool is_transitive(const Tournament& t, const VertexSet& sub);

/// A directed triangle in T[sub] when one exists (vertices in cycle order).
std::optional<std::array<int, 3>> find_directed_triangle(const Tournament& t,
                                                         const VertexSet& sub);

/// Unique topological order of T[sub \ feedback]; requires the remainder to
/// be transitive, otherwise throws std::logic_error.
VertexSequence sort_tournament(const Tournament& t, const VertexSet& sub,
                               const VertexSet& feedback);

/// Lowest vertex v in sub \ excluded closing a directed triangle with two
/// distinct vertices u, w of anchors (scan order: lowest v, then lowest
/// (u, w) pair); absent when no such triangle exists.
std::optional<int> find_rr_triangle(const Tournament& t, const VertexSet& sub,
                                    const VertexSet& anchors, const VertexSet& excluded);

/// Vertex set of one longest common subsequence of two duplicate-free
/// sequences; backtrace prefers advancing in `a` on ties.
VertexSet longest_common_subsequence(const VertexSequence& a, const VertexSequence& b,
                                     int universe);

/// Minimum vertex cut inside G[sub] separating terminal sets x_side and
/// y_side, restricted to sub \ (x_side | y_side). Returns the minimum cut if
/// its size is <= bound, absent otherwise (including the case where an edge
/// joins the two terminal sets directly). Throws std::invalid_argument when
/// the terminal sets intersect.
std::optional<VertexSet> min_vertex_cut(const UndirectedGraph& g, const VertexSet& sub,
                                        const VertexSet& x_side, const VertexSet& y_side,
                                        int bound);

}  // namespace eajr
