#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "problems.hpp"

namespace eajr {

struct GeneratedInstance {
    ProblemInstance instance;
    std::optional<int> known_optimum;
    std::optional<VertexSet> planted_solution;
    std::string generator_tag;
    std::uint64_t seed = 0;
};

/// Erdos-Renyi-style graph with a planted k-vertex cover: k cover vertices
/// are chosen at random and every pair touching the cover is included
/// independently with probability p (one draw per unordered pair). The
/// planted set is an upper bound witness; the true optimum may be smaller.
GeneratedInstance gen_random_planted(int n, int k, double p, std::uint64_t seed);

/// k-clique fully connected to an (n-k)-anticlique; the limit case p = 1 of
/// the planted class. Optimum k for n > k.
GeneratedInstance gen_clique_anticlique(int n, int k);

/// Complete bipartite K_{k,n-k} with k <= n - k; optimum k.
GeneratedInstance gen_biclique(int n, int k);

/// K_{l,l+2} plus a pendant vertex on each large-side vertex: 3l+4 vertices,
/// (l+1)(l+2) edges, optimum cover l+2 (the large side).
GeneratedInstance gen_papadimitriou_steiglitz(int l);

/// Chain of `blocks` complete bipartite blocks K_{a,b} with
/// a = round((1-eps)(blocks-1)) and b = round(1+eps(blocks-1)) (half-up),
/// consecutive blocks joined through their lowest-index small-partition
/// vertices. Optimum b * blocks: blocks are vertex-disjoint, so per-block
/// minima add up, and the union of small partitions also covers the chain
/// edges. Requires b <= a.
GeneratedInstance gen_oliveto_he_yao(int blocks, double eps);

/// Random transitive tournament (from a random order) with all arcs incident
/// to a random k-set re-randomized; that set is a feedback vertex set.
GeneratedInstance gen_random_tournament(int n, int k, std::uint64_t seed);

/// Random bipartite graph plus a random k-set wired with odd-cycle-creating
/// edges; that set is an odd cycle transversal.
GeneratedInstance gen_random_oct_instance(int n, int k, std::uint64_t seed);

/// Reads/writes the plain-text instance format:
///   line 1: `p <vc|fvst|oct> <n> <m> <k>`
///   then m lines `e <u> <v>` (directed u -> v for tournaments), 0-based ids;
///   `c ...` comment lines are ignored, except that generated files carry a
///   `c generator=<tag> seed=<s> planted=<ids>` header that is parsed back.
GeneratedInstance read_instance(const std::string& path);
GeneratedInstance read_instance_text(const std::string& text);
void write_instance(const GeneratedInstance& inst, const std::string& path);
std::string instance_to_text(const GeneratedInstance& inst);

}  // namespace eajr
