#include "graph_ops.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace eajr {

std::vector<Edge> induced_edges(const UndirectedGraph& g, const VertexSet& sub) {
    std::vector<Edge> out;
    for (int u = sub.next(0); u >= 0; u = sub.next(u + 1)) {
        VertexSet nb = g.neighbors(u) & sub;
        for (int v = nb.next(u + 1); v >= 0; v = nb.next(v + 1)) out.emplace_back(u, v);
    }
    return out;
}

std::vector<Edge> induced_edges(const Tournament& t, const VertexSet& sub) {
    std::vector<Edge> out;
    for (int u = sub.next(0); u >= 0; u = sub.next(u + 1))
        for (int v = sub.next(u + 1); v >= 0; v = sub.next(v + 1))
            out.emplace_back(t.has_arc(u, v) ? Edge{u, v} : Edge{v, u});
    return out;
}

VertexSet neighborhood(const UndirectedGraph& g, const VertexSet& s, const VertexSet& within) {
    VertexSet out(g.n());
    s.for_each([&](int v) { out |= g.neighbors(v); });
    out &= within;
    return out;
}

namespace {

// BFS 2-coloring; returns colors (-1 outside/unvisited) or the conflicting
// edge through *conflict when non-bipartite.
bool two_color(const UndirectedGraph& g, const VertexSet& sub, std::vector<int>& color,
               Edge* conflict) {
    color.assign(g.n(), -1);
    thread_local std::vector<int> queue;
    for (int root = sub.next(0); root >= 0; root = sub.next(root + 1)) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.clear();
        queue.push_back(root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            const VertexSet& nb = g.neighbors(u);
            for (int v = nb.next_common(sub); v >= 0; v = nb.next_common(sub, v + 1)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    if (conflict) *conflict = {std::min(u, v), std::max(u, v)};
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Bipartition> bipartition(const UndirectedGraph& g, const VertexSet& sub) {
    thread_local std::vector<int> color;
    if (!two_color(g, sub, color, nullptr)) return std::nullopt;
    Bipartition bp{VertexSet(g.n()), VertexSet(g.n())};
    sub.for_each([&](int v) { (color[v] == 0 ? bp.left : bp.right).set(v); });
    return bp;
}

std::optional<Edge> odd_cycle_edge(const UndirectedGraph& g, const VertexSet& sub) {
    thread_local std::vector<int> color;
    Edge conflict;
    if (two_color(g, sub, color, &conflict)) return std::nullopt;
    return conflict;
}

namespace {

// In-degree of each member of sub within T[sub].
std::vector<std::pair<int, int>>& indegree_order(const Tournament& t, const VertexSet& sub) {
    thread_local std::vector<std::pair<int, int>> order;  // (indegree, vertex)
    order.clear();
    sub.for_each([&](int v) { order.emplace_back(t.predecessors(v).count_and(sub), v); });
    std::sort(order.begin(), order.end());
    return order;
}

}  // namespace

bool is_transitive(const Tournament& t, const VertexSet& sub) {
    // A tournament is transitive iff its in-degree sequence is 0,1,...,t-1.
    // A duplicated in-degree shows up as a mismatch with the ramp.
    thread_local std::vector<int> seen;
    int count = 0;
    bool ok = true;
    seen.assign(sub.universe() + 1, 0);
    sub.for_each([&](int v) {
        int d = t.predecessors(v).count_and(sub);
        ++seen[d];
        ++count;
    });
    for (int d = 0; d < count; ++d)
        if (seen[d] != 1) {
            ok = false;
            break;
        }
    return ok;
}

std::optional<std::array<int, 3>> find_directed_triangle(const Tournament& t,
                                                         const VertexSet& sub) {
    // Scan for any arc v -> u where indeg(u) <= indeg(v); such a pair always
    // exists in a non-transitive tournament and closes a triangle with some
    // w in pred(v) \ pred(u).
    const auto& order = indegree_order(t, sub);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            int u = order[i].second;  // indeg(u) <= indeg(v)
            int v = order[j].second;
            if (!t.has_arc(v, u)) continue;
            VertexSet w_candidates = t.predecessors(v);
            w_candidates.subtract(t.predecessors(u));
            w_candidates &= sub;
            int w = w_candidates.next(0);
            if (w < 0) continue;
            // w -> v, u -> w (w not a predecessor of u), v -> u: cycle u,w,v.
            return std::array<int, 3>{u, w, v};
        }
    }
    return std::nullopt;
}

VertexSequence sort_tournament(const Tournament& t, const VertexSet& sub,
                               const VertexSet& feedback) {
    VertexSet kept = difference(sub, feedback);
    const auto& order = indegree_order(t, kept);
    VertexSequence seq;
    seq.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i].first != static_cast<int>(i))
            throw std::logic_error("sort_tournament: remainder is not transitive");
        seq.push_back(order[i].second);
    }
    return seq;
}

std::optional<int> find_rr_triangle(const Tournament& t, const VertexSet& sub,
                                    const VertexSet& anchors, const VertexSet& excluded) {
    VertexSet anchor_set = anchors & sub;
    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1)) {
        if (excluded.test(v)) continue;
        // u -> v candidates and v -> w candidates among the anchors.
        VertexSet into_v = t.predecessors(v) & anchor_set;
        VertexSet from_v = t.successors(v) & anchor_set;
        if (!into_v.any() || !from_v.any()) continue;
        for (int u = into_v.next(0); u >= 0; u = into_v.next(u + 1)) {
            // Need w with v -> w and w -> u.
            VertexSet w_set = from_v & t.predecessors(u);
            int w = w_set.next(0);
            if (w >= 0) return v;
        }
    }
    return std::nullopt;
}

VertexSet longest_common_subsequence(const VertexSequence& a, const VertexSequence& b,
                                     int universe) {
    const std::size_t la = a.size(), lb = b.size();
    std::vector<int> dp((la + 1) * (lb + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> int& { return dp[i * (lb + 1) + j]; };
    for (std::size_t i = 1; i <= la; ++i)
        for (std::size_t j = 1; j <= lb; ++j) {
            if (a[i - 1] == b[j - 1])
                at(i, j) = at(i - 1, j - 1) + 1;
            else
                at(i, j) = std::max(at(i - 1, j), at(i, j - 1));
        }
    VertexSet out(universe);
    std::size_t i = la, j = lb;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            out.set(a[i - 1]);
            --i;
            --j;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    return out;
}

namespace {

// Unit-capacity flow network with vertex splitting for vertex cuts.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNetwork(int nodes) : adj(nodes) {}

    void add(int from, int to, int cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    // One BFS augmentation; returns the pushed amount (0 when t unreachable).
    int augment(int s, int t) {
        std::vector<int> prev_node(adj.size(), -1), prev_arc(adj.size(), -1);
        std::vector<int> queue{s};
        prev_node[s] = s;
        for (std::size_t qi = 0; qi < queue.size() && prev_node[t] == -1; ++qi) {
            int u = queue[qi];
            for (std::size_t ai = 0; ai < adj[u].size(); ++ai) {
                const Arc& arc = adj[u][ai];
                if (arc.cap <= 0 || prev_node[arc.to] != -1) continue;
                prev_node[arc.to] = u;
                prev_arc[arc.to] = static_cast<int>(ai);
                queue.push_back(arc.to);
            }
        }
        if (prev_node[t] == -1) return 0;
        int bottleneck = std::numeric_limits<int>::max();
        for (int v = t; v != s; v = prev_node[v])
            bottleneck = std::min(bottleneck, adj[prev_node[v]][prev_arc[v]].cap);
        for (int v = t; v != s; v = prev_node[v]) {
            Arc& arc = adj[prev_node[v]][prev_arc[v]];
            arc.cap -= bottleneck;
            adj[arc.to][arc.rev].cap += bottleneck;
        }
        return bottleneck;
    }

    std::vector<bool> residual_reachable(int s) {
        std::vector<bool> seen(adj.size(), false);
        std::vector<int> queue{s};
        seen[s] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (const Arc& arc : adj[queue[qi]])
                if (arc.cap > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
        return seen;
    }
};

}  // namespace

std::optional<VertexSet> min_vertex_cut(const UndirectedGraph& g, const VertexSet& sub,
                                        const VertexSet& x_side, const VertexSet& y_side,
                                        int bound) {
    if (x_side.intersects(y_side))
        throw std::invalid_argument("min_vertex_cut: terminal sets intersect");
    if (bound < 0) return std::nullopt;

    const int n = g.n();
    const int inf = n + 1;  // any finite vertex cut has size <= n
    // Node layout: in(v) = 2v, out(v) = 2v + 1, source = 2n, sink = 2n + 1.
    FlowNetwork net(2 * n + 2);
    const int source = 2 * n, sink = 2 * n + 1;

    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1)) {
        bool terminal = x_side.test(v) || y_side.test(v);
        net.add(2 * v, 2 * v + 1, terminal ? inf : 1);
    }
    for (const auto& [u, v] : induced_edges(g, sub)) {
        net.add(2 * u + 1, 2 * v, inf);
        net.add(2 * v + 1, 2 * u, inf);
    }
    for (int v = x_side.next(0); v >= 0; v = x_side.next(v + 1)) net.add(source, 2 * v, inf);
    for (int v = y_side.next(0); v >= 0; v = y_side.next(v + 1)) net.add(2 * v + 1, sink, inf);

    long long flow = 0;
    while (flow <= bound) {
        int pushed = net.augment(source, sink);
        if (pushed == 0) break;
        flow += pushed;
    }
    if (flow > bound) return std::nullopt;

    std::vector<bool> reach = net.residual_reachable(source);
    VertexSet cut(n);
    for (int v = sub.next(0); v >= 0; v = sub.next(v + 1)) {
        if (x_side.test(v) || y_side.test(v)) continue;
        if (reach[2 * v] && !reach[2 * v + 1]) cut.set(v);
    }
    return cut;
}

}  // namespace eajr
