#include "ea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eajr {

int fitness_fk(const ProblemInstance& inst, const Genotype& x) {
    bool feasible = is_cardinality_feasible(inst, x.solution) &&
                    is_solution_feasible(inst, x.solution, x.subgraph);
    if (!feasible) return -(x.solution.count() + x.subgraph.count());
    return x.subgraph.count();
}

namespace {

// Flips bits of the 2n-string in place; positions [0, n) address the
// solution half, [n, 2n) the subgraph half. Geometric skips give each bit an
// independent 1/(2n) flip probability at O(#flips) cost.
void mutate_in_place(Genotype& x, Rng& rng) {
    const int n = x.solution.universe();
    const double p = 1.0 / (2.0 * n);
    long long pos = rng.geometric(p);
    while (pos < 2LL * n) {
        if (pos < n)
            x.solution.flip(static_cast<int>(pos));
        else
            x.subgraph.flip(static_cast<int>(pos - n));
        pos += 1 + rng.geometric(p);
    }
}

Genotype random_genotype(int n, Rng& rng) {
    Genotype x{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        if (rng.bernoulli(0.5)) x.solution.set(v);
        if (rng.bernoulli(0.5)) x.subgraph.set(v);
    }
    return x;
}

}  // namespace

Genotype mutate(const Genotype& x, Rng& rng) {
    Genotype y = x;
    mutate_in_place(y, rng);
    return y;
}

RunResult ea_k_run(const ProblemInstance& inst, Rng& rng, long long budget,
                   const EaOptions& opts) {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    const int n = inst.n();
    const int k = inst.k();

    RunResult out;
    out.seed = rng.seed();

    Genotype x = random_genotype(n, rng);
    VertexSet kept_scratch(n);

    auto evaluate = [&](const Genotype& g, bool& sol_feas, bool& card_feas) -> int {
        kept_scratch.assign_difference(g.subgraph, g.solution);
        sol_feas = is_solution_feasible_kept(inst, kept_scratch);
        card_feas = g.solution.count() <= k;
        if (sol_feas && card_feas) return g.subgraph.count();
        return -(g.solution.count() + g.subgraph.count());
    };

    bool sol_feas, card_feas;
    int fx = evaluate(x, sol_feas, card_feas);
    if (opts.record_improvements) out.improvements.emplace_back(0, fx);

    Genotype y = x;
    while (fx < n) {
        if (out.iterations >= budget) {
            out.final_state = x;
            return out;  // success stays false
        }
        ++out.iterations;

        y = x;
        mutate_in_place(y, rng);
        int fy = evaluate(y, sol_feas, card_feas);
        bool gate = sol_feas && !card_feas;
        if (gate) {
            JumpOutcome jump = jump_and_repair(inst, y.solution, y.subgraph, rng);
            Genotype repaired{std::move(jump.result), y.subgraph};
            bool rs, rc;
            int fr = evaluate(repaired, rs, rc);
            if (fr >= fy) {  // ties go to the repaired point
                y = std::move(repaired);
                fy = fr;
            }
        }

        bool accepted = fy >= fx;
        if (accepted) {
            std::swap(x, y);
            if (fy > fx && opts.record_improvements)
                out.improvements.emplace_back(out.iterations, fy);
            fx = fy;
        }
        if (opts.observer) {
            opts.observer({out.iterations, fy, fx, accepted, gate, sol_feas, card_feas});
        }
    }

    out.success = true;
    out.final_state = x;
    return out;
}

long long fpt_budget(ProblemKind kind, int k, int n, double constant) {
    long double factor = 1.0L;
    switch (kind) {
        case ProblemKind::VertexCover:
            factor = std::pow(2.0L, k);
            break;
        case ProblemKind::Fvst:
            factor = std::pow(2.0L, k);
            for (int i = 2; i <= k; ++i) factor *= i;
            break;
        case ProblemKind::Oct:
            factor = std::pow(3.0L, k);
            break;
    }
    long double budget =
        std::ceil(constant * factor * static_cast<long double>(n) * n * std::log((long double)n));
    const long double cap = 4.0e18L;
    if (budget > cap) return static_cast<long long>(cap);
    return std::max<long long>(1, static_cast<long long>(budget));
}

RestartResult restart_run(const ProblemInstance& inst, Rng& rng, double budget_constant) {
    RestartResult out;
    const int n = inst.n();
    for (int k = 1;; ++k) {
        int k_eff = std::min(k, n);
        ProblemInstance bounded = inst.with_k(k_eff);
        long long budget = fpt_budget(inst.kind(), k_eff, n, budget_constant);
        Rng sub(derive_seed(rng.next_u64(), static_cast<std::uint64_t>(k)));
        RunResult run = ea_k_run(bounded, sub, budget);
        out.total_evaluations += run.iterations;
        if (run.success) {
            out.k_found = k_eff;
            out.solution = run.final_state.solution;
            return out;
        }
    }
}

long long fitness_g(const UndirectedGraph& g, const VertexSet& x) {
    // Edges with both endpoints outside x; each is seen from both sides.
    long long uncovered = 0;
    for (int u = 0; u < g.n(); ++u) {
        if (x.test(u)) continue;
        uncovered += g.neighbors(u).count_minus(x);
    }
    uncovered /= 2;
    return x.count() + static_cast<long long>(g.n()) * uncovered;
}

StandardRunResult standard_ea_run(const UndirectedGraph& g, Rng& rng, long long budget,
                                  int optimum_size) {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    const int n = g.n();
    const double p = 1.0 / n;

    StandardRunResult out;
    out.seed = rng.seed();

    VertexSet x(n);
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(0.5)) x.set(v);
    long long gx = fitness_g(g, x);
    const long long target = optimum_size;

    VertexSet y = x;
    while (gx != target) {
        if (out.iterations >= budget) {
            out.final_state = x;
            return out;
        }
        ++out.iterations;

        y = x;
        long long gy = gx;
        // Flip bits with geometric skips, updating the uncovered-edge count
        // incrementally: toggling v changes |y| by +-1 and shifts the
        // uncovered count by the edges between v and vertices outside y.
        long long pos = rng.geometric(p);
        while (pos < n) {
            int v = static_cast<int>(pos);
            if (y.test(v)) {
                y.reset(v);
                gy += static_cast<long long>(n) * g.neighbors(v).count_minus(y) - 1;
            } else {
                gy -= static_cast<long long>(n) * g.neighbors(v).count_minus(y) - 1;
                y.set(v);
            }
            pos += 1 + rng.geometric(p);
        }
        if (gy <= gx) {
            std::swap(x, y);
            gx = gy;
        }
    }

    out.success = true;
    out.final_state = x;
    return out;
}

namespace {

// Exhausts the compression choices for one (k+1)-sized solution on G[sub];
// returns the first candidate of size <= k, scanning subset masks in
// ascending order (then permutations / bipartitions in deterministic order).
std::optional<VertexSet> compress(const ProblemInstance& inst, const VertexSet& solution,
                                  const VertexSet& sub) {
    const int n = inst.n();
    const int k = inst.k();
    std::vector<int> members = solution.to_vector();
    const int count = static_cast<int>(members.size());

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
        VertexSet kept(n);
        for (int i = 0; i < count; ++i)
            if (mask >> i & 1) kept.set(members[i]);

        switch (inst.kind()) {
            case ProblemKind::VertexCover: {
                VertexSet cand = repair_vc_with(inst, solution, sub, kept);
                if (cand.count() <= k && is_solution_feasible(inst, cand, sub)) return cand;
                break;
            }
            case ProblemKind::Fvst: {
                VertexSequence dropped;
                for (int i = 0; i < count; ++i)
                    if (!(mask >> i & 1)) dropped.push_back(members[i]);
                std::sort(dropped.begin(), dropped.end());
                do {
                    VertexSet cand = repair_fvst_with(inst, solution, sub, kept, dropped);
                    if (cand.count() <= k && is_solution_feasible(inst, cand, sub)) return cand;
                } while (std::next_permutation(dropped.begin(), dropped.end()));
                break;
            }
            case ProblemKind::Oct: {
                std::vector<int> dropped;
                for (int i = 0; i < count; ++i)
                    if (!(mask >> i & 1)) dropped.push_back(members[i]);
                const int r = static_cast<int>(dropped.size());
                for (std::uint64_t split = 0; split < (std::uint64_t{1} << r); ++split) {
                    VertexSet side_a(n), side_b(n);
                    for (int i = 0; i < r; ++i)
                        (split >> i & 1 ? side_a : side_b).set(dropped[i]);
                    VertexSet cand = repair_oct_with(inst, solution, sub, kept, side_a, side_b);
                    if (cand.count() <= k && is_solution_feasible(inst, cand, sub)) return cand;
                }
                break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> iterative_compression(const ProblemInstance& inst) {
    const int n = inst.n();
    const int k = inst.k();
    VertexSet sub(n), solution(n);
    for (int v = 0; v < n; ++v) {
        sub.set(v);
        solution.set(v);
        if (solution.count() <= k) continue;
        auto compressed = compress(inst, solution, sub);
        if (!compressed) return std::nullopt;
        solution = *compressed;
    }
    return solution;
}

}  // namespace eajr
