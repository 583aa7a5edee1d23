// Test-only reference implementations: naive enumerations kept deliberately
// independent of the library code paths they cross-check.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"
#include "vertex_set.hpp"

namespace eajr::brute {

// Double-loop edge filter.
inline std::vector<Edge> induced_edges(const UndirectedGraph& g, const VertexSet& sub) {
    std::vector<Edge> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (sub.test(u) && sub.test(v) && g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

// Per-vertex union loop.
inline VertexSet neighborhood(const UndirectedGraph& g, const VertexSet& s,
                              const VertexSet& within) {
    VertexSet out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (!s.test(v)) continue;
        for (int u = 0; u < g.n(); ++u)
            if (u != v && g.has_edge(u, v) && within.test(u)) out.set(u);
    }
    return out;
}

// All-triples directed-triangle scan.
inline bool has_directed_triangle(const Tournament& t, const VertexSet& sub) {
    for (int a = 0; a < t.n(); ++a)
        for (int b = 0; b < t.n(); ++b)
            for (int c = 0; c < t.n(); ++c) {
                if (a == b || b == c || a == c) continue;
                if (!sub.test(a) || !sub.test(b) || !sub.test(c)) continue;
                if (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a)) return true;
            }
    return false;
}

// Triangle with two corners in anchors and the third outside `excluded`.
inline bool has_anchored_triangle(const Tournament& t, const VertexSet& sub,
                                  const VertexSet& anchors, const VertexSet& excluded) {
    for (int v = 0; v < t.n(); ++v) {
        if (!sub.test(v) || excluded.test(v)) continue;
        for (int u = 0; u < t.n(); ++u)
            for (int w = 0; w < t.n(); ++w) {
                if (u == w || u == v || w == v) continue;
                if (!sub.test(u) || !sub.test(w)) continue;
                if (!anchors.test(u) || !anchors.test(w)) continue;
                if (t.has_arc(u, v) && t.has_arc(v, w) && t.has_arc(w, u)) return true;
            }
    }
    return false;
}

// Exhaustive subsequence enumeration (2^|a| masks).
inline int lcs_length(const std::vector<int>& a, const std::vector<int>& b) {
    int best = 0;
    const int la = static_cast<int>(a.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << la); ++mask) {
        std::vector<int> candidate;
        for (int i = 0; i < la; ++i)
            if (mask >> i & 1) candidate.push_back(a[i]);
        // Check candidate is a subsequence of b.
        std::size_t j = 0;
        for (int x : candidate) {
            while (j < b.size() && b[j] != x) ++j;
            if (j == b.size()) {
                j = b.size() + 1;
                break;
            }
            ++j;
        }
        if (j <= b.size()) best = std::max(best, static_cast<int>(candidate.size()));
    }
    return best;
}

inline bool is_subsequence(const std::vector<int>& candidate, const std::vector<int>& seq) {
    std::size_t j = 0;
    for (int x : candidate) {
        while (j < seq.size() && seq[j] != x) ++j;
        if (j == seq.size()) return false;
        ++j;
    }
    return true;
}

inline bool connects(const UndirectedGraph& g, const VertexSet& inside, const VertexSet& from,
                     const VertexSet& to) {
    std::vector<int> stack;
    VertexSet seen(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (from.test(v) && inside.test(v)) {
            stack.push_back(v);
            seen.set(v);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (to.test(u)) return true;
        for (int v = 0; v < g.n(); ++v)
            if (inside.test(v) && !seen.test(v) && g.has_edge(u, v)) {
                seen.set(v);
                stack.push_back(v);
            }
    }
    return false;
}

// Minimum vertex cut size by 2^candidates enumeration; -1 when no cut exists.
inline int min_cut_size(const UndirectedGraph& g, const VertexSet& sub, const VertexSet& x_side,
                        const VertexSet& y_side) {
    std::vector<int> candidates;
    for (int v = 0; v < g.n(); ++v)
        if (sub.test(v) && !x_side.test(v) && !y_side.test(v)) candidates.push_back(v);
    int best = -1;
    const int c = static_cast<int>(candidates.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        VertexSet inside = sub;
        int size = 0;
        for (int i = 0; i < c; ++i)
            if (mask >> i & 1) {
                inside.reset(candidates[i]);
                ++size;
            }
        if (best >= 0 && size >= best) continue;
        if (!connects(g, inside, x_side, y_side)) best = size;
    }
    return best;
}

// Uniform random graph, one Bernoulli(p) per pair.
inline UndirectedGraph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return UndirectedGraph(n, edges);
}

inline Tournament random_tournament(int n, Rng& rng) {
    std::vector<Edge> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            arcs.emplace_back(rng.bernoulli(0.5) ? Edge{u, v} : Edge{v, u});
    return Tournament(n, arcs);
}

inline VertexSet random_subset(int n, double p, Rng& rng) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(p)) s.set(v);
    return s;
}

}  // namespace eajr::brute
