#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace eajr {

using Edge = std::pair<int, int>;

/// Simple undirected graph, immutable after construction. No self-loops,
/// no parallel edges.
class UndirectedGraph {
public:
    explicit UndirectedGraph(int n) : n_(n), adj_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    }

    UndirectedGraph(int n, const std::vector<Edge>& edges) : UndirectedGraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return n_; }
    long long m() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    /// Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

private:
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    int n_;
    long long m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Orientation of a complete graph: for every distinct pair {u,v} exactly one
/// of u->v, v->u. Immutable after construction.
class Tournament {
public:
    explicit Tournament(int n)
        : n_(n), succ_(n, VertexSet(n)), pred_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    }

    /// Builds from a list of directed edges; every unordered pair must be
    /// oriented exactly once.
    Tournament(int n, const std::vector<Edge>& arcs) : Tournament(n) {
        for (auto [u, v] : arcs) orient(u, v);
        long long want = static_cast<long long>(n) * (n - 1) / 2;
        if (oriented_ != want) throw std::invalid_argument("tournament is incomplete");
    }

    /// Transitive tournament whose arcs follow the given order.
    static Tournament transitive_from_order(const VertexSequence& order) {
        Tournament t(static_cast<int>(order.size()));
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                t.orient(order[i], order[j]);
        return t;
    }

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && succ_[u].test(v);
    }

    /// Vertices w with v -> w.
    const VertexSet& successors(int v) const {
        check_vertex(v);
        return succ_[v];
    }
    /// Vertices w with w -> v.
    const VertexSet& predecessors(int v) const {
        check_vertex(v);
        return pred_[v];
    }

    /// Arcs ordered lexicographically by the unordered pair.
    std::vector<Edge> arcs() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m()));
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                out.emplace_back(succ_[u].test(v) ? Edge{u, v} : Edge{v, u});
        return out;
    }

private:
    void orient(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        if (succ_[u].test(v) || succ_[v].test(u)) {
            if (succ_[u].test(v)) return;
            throw std::invalid_argument("pair oriented twice");
        }
        succ_[u].set(v);
        pred_[v].set(u);
        ++oriented_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    int n_;
    long long oriented_ = 0;
    std::vector<VertexSet> succ_;
    std::vector<VertexSet> pred_;
};

}  // namespace eajr
