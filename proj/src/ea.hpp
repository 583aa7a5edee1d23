#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "problems.hpp"
#include "repair.hpp"
#include "rng.hpp"

namespace eajr {

/// Search point: a candidate solution set paired with an induced-subgraph
/// selection, jointly a 2n-bit string. No structural constraint ties the two
/// halves; infeasible states are representable.
struct Genotype {
    VertexSet solution;
    VertexSet subgraph;
};

/// Fitness of the subgraph-growing EA: -(|solution| + |subgraph|) when the
/// point violates solution or cardinality feasibility, |subgraph| otherwise.
/// Nonnegative iff feasible; equals n exactly at a global success.
int fitness_fk(const ProblemInstance& inst, const Genotype& x);

/// Flips each of the 2n bits independently with probability 1/(2n).
Genotype mutate(const Genotype& x, Rng& rng);

struct RunResult {
    bool success = false;
    long long iterations = 0;  // fitness evaluations consumed (one per generation)
    Genotype final_state;
    std::uint64_t seed = 0;
    std::vector<std::pair<long long, int>> improvements;  // (iteration, fitness)
};

struct GenerationInfo {
    long long iteration;
    int offspring_fitness;  // after any repair replacement
    int accepted_fitness;   // fitness of the survivor
    bool accepted;
    bool repair_fired;
    bool offspring_solution_feasible;     // before repair
    bool offspring_cardinality_feasible;  // before repair
};

struct EaOptions {
    bool record_improvements = false;
    std::function<void(const GenerationInfo&)> observer;  // test instrumentation
};

/// One run of the subgraph-growing (1+1) EA with jump-and-repair. Starts
/// from a uniform 2n-bit string; each generation mutates, routes offspring
/// that are solution feasible but over the cardinality budget through
/// jump-and-repair (keeping the repaired point on fitness ties), and accepts
/// on fitness >= parent. Stops at fitness n or after `budget` generations.
RunResult ea_k_run(const ProblemInstance& inst, Rng& rng, long long budget,
                   const EaOptions& opts = {});

inline constexpr double kDefaultBudgetConstant = 96.05772928609852;  // 13 e^2

/// Per-k cutoff of the restart framework: ceil(constant * factor(k) * n^2 ln n)
/// with factor 2^k for vertex cover, 2^k * k! for FVST, 3^k for OCT.
long long fpt_budget(ProblemKind kind, int k, int n, double constant = kDefaultBudgetConstant);

struct RestartResult {
    int k_found = -1;
    long long total_evaluations = 0;
    VertexSet solution;
};

/// Runs the EA for k = 1, 2, ... with the per-k cutoff until a run succeeds.
RestartResult restart_run(const ProblemInstance& inst, Rng& rng,
                          double budget_constant = kDefaultBudgetConstant);

/// Penalty fitness of the standard (1+1) EA baseline, to be minimized:
/// |x| + n * (number of edges with both endpoints outside x).
long long fitness_g(const UndirectedGraph& g, const VertexSet& x);

struct StandardRunResult {
    bool success = false;
    long long iterations = 0;
    VertexSet final_state;
    std::uint64_t seed = 0;
};

/// Standard (1+1) EA on n-bit cover strings: per-bit flip probability 1/n,
/// accept when g does not increase, success when a cover of the externally
/// supplied optimum size is reached.
StandardRunResult standard_ea_run(const UndirectedGraph& g, Rng& rng, long long budget,
                                  int optimum_size);

/// Deterministic baseline: grows the graph one vertex at a time and, whenever
/// the carried solution reaches k+1 vertices, re-compresses it back to k by
/// exhausting the repair operator's choices. Absent iff no k-solution exists.
std::optional<VertexSet> iterative_compression(const ProblemInstance& inst);

}  // namespace eajr
