#pragma once

#include <optional>

#include "problems.hpp"
#include "rng.hpp"

namespace eajr {

struct JumpOutcome {
    VertexSet result;     // replacement solution bits
    bool repaired = false;  // whether the repair branch executed
    VertexSet kept;       // the subset retained by the coin flips
};

/// Focused jump-and-repair for vertex cover: keep each selected vertex with
/// probability 1/2; when the kept set no longer covers G[sub], add the
/// neighborhoods (inside sub) of every dropped vertex. The result is always
/// a vertex cover of G[sub].
JumpOutcome jump_and_repair_vc(const ProblemInstance& inst, const VertexSet& solution,
                               const VertexSet& sub, Rng& rng);

/// Focused jump-and-repair for feedback vertex sets in tournaments: keep each
/// selected vertex with probability 1/2, draw a random order on the dropped
/// vertices, and rebuild feasibility by discarding the vertices outside a
/// longest common subsequence of the tournament order and the order induced
/// by the guess. Falls back to the parent set when the rebuilt set fails the
/// feasibility audit, so the result is always a feedback vertex set of T[sub].
JumpOutcome jump_and_repair_fvst(const ProblemInstance& inst, const VertexSet& solution,
                                 const VertexSet& sub, Rng& rng);

/// Focused jump-and-repair for odd cycle transversals: keep each selected
/// vertex with probability 1/3, guess a bipartition of the dropped vertices,
/// and close the exposed odd cycles with a minimum vertex cut. Falls back to
/// the parent set when no adequate cut exists or the rebuilt set fails the
/// feasibility audit, so the result is always a transversal of G[sub].
JumpOutcome jump_and_repair_oct(const ProblemInstance& inst, const VertexSet& solution,
                                const VertexSet& sub, Rng& rng);

/// Dispatches on the instance kind.
JumpOutcome jump_and_repair(const ProblemInstance& inst, const VertexSet& solution,
                            const VertexSet& sub, Rng& rng);

/// Deterministic cores: the random operators draw (kept [, order] [, split])
/// and delegate here. Exposed so tests can enumerate every random choice.
VertexSet repair_vc_with(const ProblemInstance& inst, const VertexSet& solution,
                         const VertexSet& sub, const VertexSet& kept);
VertexSet repair_fvst_with(const ProblemInstance& inst, const VertexSet& solution,
                           const VertexSet& sub, const VertexSet& kept,
                           const VertexSequence& dropped_order);
VertexSet repair_oct_with(const ProblemInstance& inst, const VertexSet& solution,
                          const VertexSet& sub, const VertexSet& kept,
                          const VertexSet& side_a, const VertexSet& side_b);

/// Cut step of the transversal repair (callable on its own): given an OCT
/// `transversal` of G[sub], a removed part `removed` split into side_a and
/// side_b, computes the bipartition (C, D) of G[sub \ transversal], builds
/// the two terminal sets, forces any vertex landing in both into the cut,
/// and returns a minimum vertex cut of total size <= bound, or absent.
std::optional<VertexSet> oct_cut_repair(const UndirectedGraph& g, const VertexSet& sub,
                                        const VertexSet& transversal, const VertexSet& removed,
                                        const VertexSet& side_a, const VertexSet& side_b,
                                        int bound);

}  // namespace eajr
