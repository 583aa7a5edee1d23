#include "problems.hpp"

#include <stdexcept>

namespace eajr {

const char* problem_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::VertexCover: return "vc";
        case ProblemKind::Fvst: return "fvst";
        case ProblemKind::Oct: return "oct";
    }
    return "?";
}

std::optional<ProblemKind> problem_from_name(const std::string& name) {
    if (name == "vc") return ProblemKind::VertexCover;
    if (name == "fvst") return ProblemKind::Fvst;
    if (name == "oct") return ProblemKind::Oct;
    return std::nullopt;
}

ProblemInstance::ProblemInstance(ProblemKind kind, UndirectedGraph graph, int k)
    : kind_(kind), graph_(std::move(graph)), k_(k) {
    if (kind == ProblemKind::Fvst)
        throw std::invalid_argument("FVST requires a tournament");
    if (k < 0 || k > n()) throw std::invalid_argument("k out of range");
}

ProblemInstance::ProblemInstance(ProblemKind kind, Tournament graph, int k)
    : kind_(kind), graph_(std::move(graph)), k_(k) {
    if (kind != ProblemKind::Fvst)
        throw std::invalid_argument("only FVST instances carry a tournament");
    if (k < 0 || k > n()) throw std::invalid_argument("k out of range");
}

int ProblemInstance::n() const {
    return is_tournament() ? tournament().n() : undirected().n();
}

long long ProblemInstance::m() const {
    return is_tournament() ? tournament().m() : undirected().m();
}

ProblemInstance ProblemInstance::with_k(int k) const {
    ProblemInstance copy = *this;
    if (k < 0 || k > copy.n()) throw std::invalid_argument("k out of range");
    copy.k_ = k;
    return copy;
}

namespace {

bool vc_feasible(const UndirectedGraph& g, const VertexSet& kept,
                 InfeasibilityWitness* witness) {
    // kept = sub \ solution; feasible iff no edge has both endpoints kept.
    for (int u = kept.next(0); u >= 0; u = kept.next(u + 1)) {
        int v = g.neighbors(u).next_common(kept);
        if (v >= 0) {
            if (witness) *witness = {{std::min(u, v), std::max(u, v), -1}, 2};
            return false;
        }
    }
    return true;
}

bool fvst_feasible(const Tournament& t, const VertexSet& kept,
                   InfeasibilityWitness* witness) {
    if (is_transitive(t, kept)) return true;
    if (witness) {
        auto tri = find_directed_triangle(t, kept);
        *witness = {{(*tri)[0], (*tri)[1], (*tri)[2]}, 3};
    }
    return false;
}

bool oct_feasible(const UndirectedGraph& g, const VertexSet& kept,
                  InfeasibilityWitness* witness) {
    auto conflict = odd_cycle_edge(g, kept);
    if (!conflict) return true;
    if (witness) *witness = {{conflict->first, conflict->second, -1}, 2};
    return false;
}

bool dispatch_kept(const ProblemInstance& inst, const VertexSet& kept,
                   InfeasibilityWitness* witness) {
    switch (inst.kind()) {
        case ProblemKind::VertexCover: return vc_feasible(inst.undirected(), kept, witness);
        case ProblemKind::Fvst: return fvst_feasible(inst.tournament(), kept, witness);
        case ProblemKind::Oct: return oct_feasible(inst.undirected(), kept, witness);
    }
    return false;
}

bool dispatch(const ProblemInstance& inst, const VertexSet& solution, const VertexSet& sub,
              InfeasibilityWitness* witness) {
    thread_local VertexSet kept;
    if (kept.universe() != sub.universe()) kept = VertexSet(sub.universe());
    kept.assign_difference(sub, solution);
    return dispatch_kept(inst, kept, witness);
}

}  // namespace

bool is_solution_feasible_kept(const ProblemInstance& inst, const VertexSet& kept) {
    return dispatch_kept(inst, kept, nullptr);
}

bool is_solution_feasible(const ProblemInstance& inst, const VertexSet& solution,
                          const VertexSet& sub) {
    return dispatch(inst, solution, sub, nullptr);
}

FeasibilityCheck check_solution(const ProblemInstance& inst, const VertexSet& solution,
                                const VertexSet& sub) {
    InfeasibilityWitness w;
    FeasibilityCheck out;
    out.feasible = dispatch(inst, solution, sub, &w);
    if (!out.feasible) out.witness = w;
    return out;
}

bool is_cardinality_feasible(const ProblemInstance& inst, const VertexSet& solution) {
    return solution.count() <= inst.k();
}

bool verify_final(const ProblemInstance& inst, const VertexSet& s) {
    if (s.count() > inst.k()) return false;
    return is_solution_feasible(inst, s, VertexSet::full(inst.n()));
}

}  // namespace eajr
