#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "graph.hpp"
#include "graph_ops.hpp"

namespace eajr {

enum class ProblemKind { VertexCover, Fvst, Oct };

const char* problem_name(ProblemKind kind);
std::optional<ProblemKind> problem_from_name(const std::string& name);

/// A graph together with the parameter k. FVST instances carry a tournament,
/// the other kinds an undirected graph.
class ProblemInstance {
public:
    ProblemInstance(ProblemKind kind, UndirectedGraph graph, int k);
    ProblemInstance(ProblemKind kind, Tournament graph, int k);

    ProblemKind kind() const { return kind_; }
    int k() const { return k_; }
    int n() const;
    long long m() const;

    bool is_tournament() const { return std::holds_alternative<Tournament>(graph_); }
    const UndirectedGraph& undirected() const { return std::get<UndirectedGraph>(graph_); }
    const Tournament& tournament() const { return std::get<Tournament>(graph_); }

    ProblemInstance with_k(int k) const;

private:
    ProblemKind kind_;
    std::variant<UndirectedGraph, Tournament> graph_;
    int k_;
};

/// Certificate of infeasibility: an uncovered edge (vertex cover), a directed
/// triangle (FVST), or an edge whose endpoints collide in a 2-coloring (OCT).
struct InfeasibilityWitness {
    std::array<int, 3> vertices{-1, -1, -1};
    int size = 0;  // 2 for an edge, 3 for a triangle
};

struct FeasibilityCheck {
    bool feasible = false;
    std::optional<InfeasibilityWitness> witness;
};

/// True iff solution & sub solves the problem on G[sub]; members of
/// `solution` outside `sub` are ignored.
bool is_solution_feasible(const ProblemInstance& inst, const VertexSet& solution,
                          const VertexSet& sub);

/// Same predicate with an infeasibility certificate when it fails.
FeasibilityCheck check_solution(const ProblemInstance& inst, const VertexSet& solution,
                                const VertexSet& sub);

/// Fast path for callers that already hold kept = sub \ solution.
bool is_solution_feasible_kept(const ProblemInstance& inst, const VertexSet& kept);

/// |solution| <= k, counting every selected vertex regardless of sub.
bool is_cardinality_feasible(const ProblemInstance& inst, const VertexSet& solution);

/// Final-answer audit: |s| <= k and s solves the problem on the whole graph.
bool verify_final(const ProblemInstance& inst, const VertexSet& s);

}  // namespace eajr
