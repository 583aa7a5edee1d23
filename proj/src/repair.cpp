#include "repair.hpp"

#include <algorithm>
#include <stdexcept>

namespace eajr {

namespace {

VertexSet coin_flip_subset(const VertexSet& s, double keep_prob, Rng& rng) {
    VertexSet kept(s.universe());
    s.for_each([&](int v) {
        if (rng.bernoulli(keep_prob)) kept.set(v);
    });
    return kept;
}

}  // namespace

VertexSet repair_vc_with(const ProblemInstance& inst, const VertexSet& solution,
                         const VertexSet& sub, const VertexSet& kept) {
    const UndirectedGraph& g = inst.undirected();
    VertexSet dropped = difference(solution, kept);
    VertexSet patch = neighborhood(g, dropped, sub);
    return kept | patch;
}

JumpOutcome jump_and_repair_vc(const ProblemInstance& inst, const VertexSet& solution,
                               const VertexSet& sub, Rng& rng) {
    VertexSet kept = coin_flip_subset(solution, 0.5, rng);
    if (is_solution_feasible(inst, kept, sub)) return {kept, false, kept};
    return {repair_vc_with(inst, solution, sub, kept), true, kept};
}

VertexSet repair_fvst_with(const ProblemInstance& inst, const VertexSet& solution,
                           const VertexSet& sub, const VertexSet& kept,
                           const VertexSequence& dropped_order) {
    const Tournament& t = inst.tournament();
    const int n = t.n();
    VertexSet dropped = difference(solution, kept);

    // Absorb every triangle third-corner closed by two dropped vertices.
    VertexSet absorbed(n);
    while (auto v = find_rr_triangle(t, sub, dropped, absorbed)) absorbed.set(*v);

    VertexSet feedback = solution | absorbed;
    VertexSequence tournament_order = sort_tournament(t, sub, feedback);

    // Label each remaining vertex with the first dropped vertex it beats.
    const int none_label = static_cast<int>(dropped_order.size()) + 1;
    std::vector<int> label(n, none_label);
    for (int v : tournament_order) {
        for (std::size_t i = 0; i < dropped_order.size(); ++i) {
            if (t.has_arc(v, dropped_order[i])) {
                label[v] = static_cast<int>(i) + 1;
                break;
            }
        }
    }

    // Reorder by ascending label, ties broken by tournament order.
    VertexSequence guess_order = tournament_order;
    std::vector<int> position(n, 0);
    for (std::size_t i = 0; i < tournament_order.size(); ++i) position[tournament_order[i]] = static_cast<int>(i);
    std::stable_sort(guess_order.begin(), guess_order.end(), [&](int a, int b) {
        if (label[a] != label[b]) return label[a] < label[b];
        return position[a] < position[b];
    });

    VertexSet common = longest_common_subsequence(tournament_order, guess_order, n);
    VertexSet evicted = difference(sub, feedback);
    evicted.subtract(common);
    return kept | absorbed | evicted;
}

JumpOutcome jump_and_repair_fvst(const ProblemInstance& inst, const VertexSet& solution,
                                 const VertexSet& sub, Rng& rng) {
    VertexSet kept = coin_flip_subset(solution, 0.5, rng);
    if (is_solution_feasible(inst, kept, sub)) return {kept, false, kept};

    VertexSequence dropped_order = difference(solution, kept).to_vector();
    rng.shuffle(dropped_order);
    VertexSet rebuilt = repair_fvst_with(inst, solution, sub, kept, dropped_order);
    // The reconstruction can miss when the order guess is inconsistent with
    // every optimal arrangement; the parent set is feasible by precondition.
    if (!is_solution_feasible(inst, rebuilt, sub)) return {solution, true, kept};
    return {rebuilt, true, kept};
}

std::optional<VertexSet> oct_cut_repair(const UndirectedGraph& g, const VertexSet& sub,
                                        const VertexSet& transversal, const VertexSet& removed,
                                        const VertexSet& side_a, const VertexSet& side_b,
                                        int bound) {
    VertexSet remainder = difference(sub, transversal);
    auto coloring = bipartition(g, remainder);
    if (!coloring) throw std::logic_error("oct_cut_repair: remainder is not bipartite");
    const VertexSet& c_class = coloring->left;
    const VertexSet& d_class = coloring->right;

    VertexSet nbr_a = neighborhood(g, side_a, remainder);
    VertexSet nbr_b = neighborhood(g, side_b, remainder);
    VertexSet x_side = (c_class & nbr_a) | (d_class & nbr_b);
    VertexSet y_side = (c_class & nbr_b) | (d_class & nbr_a);

    // A vertex adjacent to both sides of the guess belongs to every valid
    // separator; force it into the cut and drop it from the terminals.
    VertexSet forced = x_side & y_side;
    x_side.subtract(forced);
    y_side.subtract(forced);
    int forced_count = forced.count();
    if (forced_count > bound) return std::nullopt;

    VertexSet working = difference(remainder, forced);
    auto cut = min_vertex_cut(g, working, x_side, y_side, bound - forced_count);
    if (!cut) return std::nullopt;
    return forced | *cut;
}

VertexSet repair_oct_with(const ProblemInstance& inst, const VertexSet& solution,
                          const VertexSet& sub, const VertexSet& kept,
                          const VertexSet& side_a, const VertexSet& side_b) {
    const UndirectedGraph& g = inst.undirected();
    VertexSet removed = difference(solution, kept);
    auto cut = oct_cut_repair(g, sub, solution, removed, side_a, side_b, inst.k());
    if (!cut) return solution;
    return kept | *cut;
}

JumpOutcome jump_and_repair_oct(const ProblemInstance& inst, const VertexSet& solution,
                                const VertexSet& sub, Rng& rng) {
    VertexSet kept = coin_flip_subset(solution, 1.0 / 3.0, rng);
    if (is_solution_feasible(inst, kept, sub)) return {kept, false, kept};

    VertexSet removed = difference(solution, kept);
    VertexSet side_a(solution.universe()), side_b(solution.universe());
    removed.for_each([&](int v) { (rng.bernoulli(0.5) ? side_a : side_b).set(v); });

    VertexSet rebuilt = repair_oct_with(inst, solution, sub, kept, side_a, side_b);
    // A wrong bipartition guess can leave an odd cycle through the removed
    // vertices; the parent set is feasible by precondition.
    if (!is_solution_feasible(inst, rebuilt, sub)) return {solution, true, kept};
    return {rebuilt, true, kept};
}

JumpOutcome jump_and_repair(const ProblemInstance& inst, const VertexSet& solution,
                            const VertexSet& sub, Rng& rng) {
    switch (inst.kind()) {
        case ProblemKind::VertexCover: return jump_and_repair_vc(inst, solution, sub, rng);
        case ProblemKind::Fvst: return jump_and_repair_fvst(inst, solution, sub, rng);
        case ProblemKind::Oct: return jump_and_repair_oct(inst, solution, sub, rng);
    }
    throw std::logic_error("unknown problem kind");
}

}  // namespace eajr
