#include "oracle.hpp"

#include <stdexcept>

#include "graph_ops.hpp"

namespace eajr {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap) throw std::invalid_argument(std::string(what) + ": instance exceeds oracle cap");
}

// Branch on an uncovered edge: one endpoint must join the cover.
void vc_branch(const UndirectedGraph& g, VertexSet& kept, VertexSet& cover, int cover_size,
               int& best_size, VertexSet& best) {
    if (cover_size >= best_size) return;
    // kept = complement of cover; find an uncovered edge.
    int u = -1, v = -1;
    for (int a = kept.next(0); a >= 0; a = kept.next(a + 1)) {
        int b = g.neighbors(a).next_common(kept);
        if (b >= 0) {
            u = a;
            v = b;
            break;
        }
    }
    if (u < 0) {
        best_size = cover_size;
        best = cover;
        return;
    }
    for (int pick : {u, v}) {
        cover.set(pick);
        kept.reset(pick);
        vc_branch(g, kept, cover, cover_size + 1, best_size, best);
        cover.reset(pick);
        kept.set(pick);
    }
}

// All size-r subsets of [0, n) in lexicographic order.
template <typename F>
bool for_each_combination(int n, int r, F&& f) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (f(idx)) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

OracleAnswer min_vertex_cover_exact(const UndirectedGraph& g, const OracleLimit& limit) {
    check_cap(g.n(), limit.vertex_cover, "min_vertex_cover_exact");
    VertexSet kept = VertexSet::full(g.n());
    VertexSet cover(g.n());
    VertexSet best = VertexSet::full(g.n());
    int best_size = g.n() + 1;
    vc_branch(g, kept, cover, 0, best_size, best);
    return {best.count(), best};
}

OracleAnswer min_fvst_exact(const Tournament& t, const OracleLimit& limit) {
    check_cap(t.n(), limit.fvst, "min_fvst_exact");
    const int n = t.n();
    VertexSet all = VertexSet::full(n);
    for (int r = 0; r <= n; ++r) {
        OracleAnswer answer;
        bool found = for_each_combination(n, r, [&](const std::vector<int>& ids) {
            VertexSet s(n);
            for (int v : ids) s.set(v);
            if (is_transitive(t, difference(all, s))) {
                answer = {r, s};
                return true;
            }
            return false;
        });
        if (found) return answer;
    }
    return {n, all};
}

OracleAnswer min_oct_exact(const UndirectedGraph& g, const OracleLimit& limit) {
    check_cap(g.n(), limit.oct, "min_oct_exact");
    const int n = g.n();
    VertexSet all = VertexSet::full(n);
    for (int r = 0; r <= n; ++r) {
        OracleAnswer answer;
        bool found = for_each_combination(n, r, [&](const std::vector<int>& ids) {
            VertexSet s(n);
            for (int v : ids) s.set(v);
            if (bipartition(g, difference(all, s)).has_value()) {
                answer = {r, s};
                return true;
            }
            return false;
        });
        if (found) return answer;
    }
    return {n, all};
}

OracleAnswer exact_minimum(const ProblemInstance& inst, const OracleLimit& limit) {
    switch (inst.kind()) {
        case ProblemKind::VertexCover: return min_vertex_cover_exact(inst.undirected(), limit);
        case ProblemKind::Fvst: return min_fvst_exact(inst.tournament(), limit);
        case ProblemKind::Oct: return min_oct_exact(inst.undirected(), limit);
    }
    throw std::logic_error("unknown problem kind");
}

namespace {

bool has_path(const UndirectedGraph& g, const VertexSet& inside, const VertexSet& from,
              const VertexSet& to) {
    VertexSet seen = from & inside;
    std::vector<int> queue = seen.to_vector();
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (to.test(u)) return true;
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.next_common(inside); v >= 0; v = nb.next_common(inside, v + 1))
            if (!seen.test(v)) {
                seen.set(v);
                queue.push_back(v);
            }
    }
    return false;
}

}  // namespace

std::optional<OracleAnswer> min_vertex_cut_exact(const UndirectedGraph& g, const VertexSet& sub,
                                                 const VertexSet& x_side, const VertexSet& y_side,
                                                 const OracleLimit& limit) {
    check_cap(g.n(), limit.vertex_cut, "min_vertex_cut_exact");
    if (x_side.intersects(y_side))
        throw std::invalid_argument("min_vertex_cut_exact: terminal sets intersect");
    VertexSet candidates = difference(difference(sub, x_side), y_side);
    std::vector<int> ids = candidates.to_vector();
    const int c = static_cast<int>(ids.size());
    for (int r = 0; r <= c; ++r) {
        std::optional<OracleAnswer> answer;
        for_each_combination(c, r, [&](const std::vector<int>& pick) {
            VertexSet cut(g.n());
            for (int i : pick) cut.set(ids[i]);
            VertexSet inside = difference(sub, cut);
            if (!has_path(g, inside, x_side, y_side)) {
                answer = OracleAnswer{r, cut};
                return true;
            }
            return false;
        });
        if (answer) return answer;
    }
    return std::nullopt;
}

}  // namespace eajr
