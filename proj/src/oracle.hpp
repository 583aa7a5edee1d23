#pragma once

#include <optional>

#include "problems.hpp"

namespace eajr {

/// Per-problem vertex caps of the exact solvers; requests above a cap are
/// rejected, never silently approximated.
struct OracleLimit {
    int vertex_cover = 30;  // branch and bound
    int fvst = 16;          // subset enumeration
    int oct = 16;           // subset enumeration
    int vertex_cut = 12;    // subset enumeration
};

struct OracleAnswer {
    int size = 0;
    VertexSet witness;
};

/// Exact minimum vertex cover via branching on an uncovered edge.
OracleAnswer min_vertex_cover_exact(const UndirectedGraph& g, const OracleLimit& limit = {});

/// Exact minimum feedback vertex set via ascending-cardinality enumeration.
OracleAnswer min_fvst_exact(const Tournament& t, const OracleLimit& limit = {});

/// Exact minimum odd cycle transversal via ascending-cardinality enumeration.
OracleAnswer min_oct_exact(const UndirectedGraph& g, const OracleLimit& limit = {});

/// Dispatches on the instance kind (k is ignored).
OracleAnswer exact_minimum(const ProblemInstance& inst, const OracleLimit& limit = {});

/// Exact minimum vertex cut separating x_side and y_side inside G[sub]
/// by subset enumeration; absent when even removing all candidate vertices
/// leaves an x-y path (a direct edge between the terminal sets).
std::optional<OracleAnswer> min_vertex_cut_exact(const UndirectedGraph& g, const VertexSet& sub,
                                                 const VertexSet& x_side, const VertexSet& y_side,
                                                 const OracleLimit& limit = {});

}  // namespace eajr
