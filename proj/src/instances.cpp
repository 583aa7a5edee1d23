#include "instances.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rng.hpp"

namespace eajr {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

VertexSet set_from(int n, const std::vector<int>& ids) {
    VertexSet s(n);
    for (int v : ids) s.set(v);
    return s;
}

}  // namespace

GeneratedInstance gen_random_planted(int n, int k, double p, std::uint64_t seed) {
    require(n >= 1 && k >= 1 && k <= n, "random_planted: need 1 <= k <= n");
    require(p > 0.0 && p <= 1.0, "random_planted: need p in (0,1]");
    Rng rng(seed);
    VertexSet cover = set_from(n, rng.sample_without_replacement(n, k));

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!cover.test(u) && !cover.test(v)) continue;
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }

    GeneratedInstance out{
        ProblemInstance(ProblemKind::VertexCover, UndirectedGraph(n, edges), k),
        std::nullopt, cover, "random_planted", seed};
    return out;
}

GeneratedInstance gen_clique_anticlique(int n, int k) {
    require(n >= 1 && k >= 1 && k <= n, "clique_anticlique: need 1 <= k <= n");
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    UndirectedGraph g(n, edges);
    long long want = static_cast<long long>(k) * (k - 1) / 2 + static_cast<long long>(k) * (n - k);
    require(g.m() == want, "clique_anticlique: edge count mismatch");

    VertexSet clique(n);
    for (int v = 0; v < k; ++v) clique.set(v);
    GeneratedInstance out{ProblemInstance(ProblemKind::VertexCover, std::move(g), k),
                          n > k ? k : k - 1, clique, "clique_anticlique", 0};
    return out;
}

GeneratedInstance gen_biclique(int n, int k) {
    require(k >= 1 && k <= n - k, "biclique: need 1 <= k <= n - k");
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = k; v < n; ++v) edges.emplace_back(u, v);
    UndirectedGraph g(n, edges);
    require(g.m() == static_cast<long long>(k) * (n - k), "biclique: edge count mismatch");

    VertexSet small(n);
    for (int v = 0; v < k; ++v) small.set(v);
    GeneratedInstance out{ProblemInstance(ProblemKind::VertexCover, std::move(g), k), k, small,
                          "biclique", 0};
    return out;
}

GeneratedInstance gen_papadimitriou_steiglitz(int l) {
    require(l >= 1, "papadimitriou_steiglitz: need l >= 1");
    const int n = 3 * l + 4;
    // Small side [0, l), large side [l, 2l+2), pendants [2l+2, 3l+4).
    std::vector<Edge> edges;
    for (int u = 0; u < l; ++u)
        for (int j = 0; j < l + 2; ++j) edges.emplace_back(u, l + j);
    for (int j = 0; j < l + 2; ++j) edges.emplace_back(l + j, 2 * l + 2 + j);
    UndirectedGraph g(n, edges);
    require(g.m() == static_cast<long long>(l + 1) * (l + 2),
            "papadimitriou_steiglitz: edge count mismatch");

    VertexSet large(n);
    for (int j = 0; j < l + 2; ++j) large.set(l + j);
    GeneratedInstance out{ProblemInstance(ProblemKind::VertexCover, std::move(g), l + 2), l + 2,
                          large, "papadimitriou_steiglitz", 0};
    return out;
}

GeneratedInstance gen_oliveto_he_yao(int blocks, double eps) {
    require(blocks >= 2, "oliveto_he_yao: need at least 2 blocks");
    require(eps > 0.0 && eps < 0.5, "oliveto_he_yao: need eps in (0, 1/2)");
    const int a = static_cast<int>(std::floor((1.0 - eps) * (blocks - 1) + 0.5));
    const int b = static_cast<int>(std::floor(1.0 + eps * (blocks - 1) + 0.5));
    require(a >= 1 && b >= 1, "oliveto_he_yao: degenerate block");
    require(b <= a, "oliveto_he_yao: rounding left the small partition larger");

    const int block_size = a + b;
    const int n = blocks * block_size;
    std::vector<Edge> edges;
    // Block i: large partition [i*s, i*s+a), small partition [i*s+a, (i+1)*s).
    for (int i = 0; i < blocks; ++i) {
        int base = i * block_size;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) edges.emplace_back(base + u, base + a + v);
    }
    for (int i = 0; i + 1 < blocks; ++i)
        edges.emplace_back(i * block_size + a, (i + 1) * block_size + a);
    UndirectedGraph g(n, edges);
    require(g.m() == static_cast<long long>(blocks) * a * b + (blocks - 1),
            "oliveto_he_yao: edge count mismatch");

    // Blocks are vertex-disjoint, so per-block minima (b each) add up; the
    // union of small partitions covers the chain edges too.
    VertexSet cover(n);
    for (int i = 0; i < blocks; ++i)
        for (int v = 0; v < b; ++v) cover.set(i * block_size + a + v);
    const int optimum = b * blocks;
    GeneratedInstance out{ProblemInstance(ProblemKind::VertexCover, std::move(g), optimum),
                          optimum, cover, "oliveto_he_yao", 0};
    return out;
}

GeneratedInstance gen_random_tournament(int n, int k, std::uint64_t seed) {
    require(n >= 1 && k >= 0 && k <= n, "random_tournament: need 0 <= k <= n");
    Rng rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    VertexSet planted = set_from(n, rng.sample_without_replacement(n, k));

    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    std::vector<Edge> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool forward;
            if (planted.test(u) || planted.test(v))
                forward = rng.bernoulli(0.5);
            else
                forward = rank[u] < rank[v];
            arcs.emplace_back(forward ? Edge{u, v} : Edge{v, u});
        }

    GeneratedInstance out{ProblemInstance(ProblemKind::Fvst, Tournament(n, arcs), k),
                          std::nullopt, planted, "random_tournament", seed};
    if (k == 0) out.known_optimum = 0;
    return out;
}

GeneratedInstance gen_random_oct_instance(int n, int k, std::uint64_t seed) {
    require(n >= 1 && k >= 0 && k <= n, "random_oct: need 0 <= k <= n");
    Rng rng(seed);
    VertexSet planted = set_from(n, rng.sample_without_replacement(n, k));

    // Random 2-coloring of the remaining vertices; cross edges only.
    std::vector<int> side(n, -1);
    for (int v = 0; v < n; ++v)
        if (!planted.test(v)) side[v] = rng.bernoulli(0.5) ? 1 : 0;

    const double p = 0.3;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool touches_planted = planted.test(u) || planted.test(v);
            if (!touches_planted && side[u] == side[v]) continue;  // keep it bipartite
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }

    // Wire each planted vertex across an existing bipartite edge so an odd
    // cycle actually runs through it whenever possible.
    UndirectedGraph probe(n, edges);
    for (int v = planted.next(0); v >= 0; v = planted.next(v + 1)) {
        for (int u = 0; u < n; ++u) {
            if (u == v || planted.test(u)) continue;
            int w = probe.neighbors(u).next(0);
            bool found = false;
            for (; w >= 0; w = probe.neighbors(u).next(w + 1)) {
                if (w == v || planted.test(w)) continue;
                found = true;
                break;
            }
            if (found) {
                edges.emplace_back(std::min(u, v), std::max(u, v));
                edges.emplace_back(std::min(w, v), std::max(w, v));
                break;
            }
        }
    }

    GeneratedInstance out{ProblemInstance(ProblemKind::Oct, UndirectedGraph(n, edges), k),
                          std::nullopt, planted, "random_oct", seed};
    if (k == 0) out.known_optimum = 0;
    return out;
}

std::string instance_to_text(const GeneratedInstance& gen) {
    std::ostringstream out;
    out << "c generator=" << gen.generator_tag << " seed=" << gen.seed;
    if (gen.planted_solution) {
        out << " planted=";
        bool first = true;
        gen.planted_solution->for_each([&](int v) {
            if (!first) out << ",";
            out << v;
            first = false;
        });
    }
    if (gen.known_optimum) out << " optimum=" << *gen.known_optimum;
    out << "\n";

    const ProblemInstance& inst = gen.instance;
    out << "p " << problem_name(inst.kind()) << " " << inst.n() << " " << inst.m() << " "
        << inst.k() << "\n";
    if (inst.is_tournament()) {
        for (const auto& [u, v] : inst.tournament().arcs()) out << "e " << u << " " << v << "\n";
    } else {
        for (const auto& [u, v] : inst.undirected().edges()) out << "e " << u << " " << v << "\n";
    }
    return out.str();
}

void write_instance(const GeneratedInstance& gen, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << instance_to_text(gen);
    if (!out) throw std::runtime_error("write failed: " + path);
}

GeneratedInstance read_instance_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<ProblemKind> kind;
    int n = 0, k = 0;
    long long m = 0, seen_edges = 0;
    std::vector<Edge> edges;
    bool have_header = false;

    std::string tag = "file";
    std::uint64_t seed = 0;
    std::optional<std::vector<int>> planted_ids;
    std::optional<int> optimum;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream cs(line.substr(1));
            std::string token;
            while (cs >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos) continue;
                std::string key = token.substr(0, eq), value = token.substr(eq + 1);
                if (key == "generator") tag = value;
                else if (key == "seed") seed = std::stoull(value);
                else if (key == "optimum") optimum = std::stoi(value);
                else if (key == "planted") {
                    std::vector<int> ids;
                    std::istringstream vs(value);
                    std::string item;
                    while (std::getline(vs, item, ',')) if (!item.empty()) ids.push_back(std::stoi(item));
                    planted_ids = std::move(ids);
                }
            }
            continue;
        }
        std::istringstream ls(line);
        char tagc;
        ls >> tagc;
        if (tagc == 'p') {
            std::string name;
            if (!(ls >> name >> n >> m >> k)) throw std::runtime_error("malformed p line");
            kind = problem_from_name(name);
            if (!kind) throw std::runtime_error("unknown problem kind: " + name);
            have_header = true;
        } else if (tagc == 'e') {
            if (!have_header) throw std::runtime_error("edge before header");
            int u, v;
            if (!(ls >> u >> v)) throw std::runtime_error("malformed e line");
            edges.emplace_back(u, v);
            ++seen_edges;
        } else {
            throw std::runtime_error("unknown line tag in instance file");
        }
    }
    if (!have_header) throw std::runtime_error("missing p line");
    if (seen_edges != m) throw std::runtime_error("edge count does not match header");

    std::optional<VertexSet> planted;
    if (planted_ids) planted = set_from(n, *planted_ids);

    if (*kind == ProblemKind::Fvst) {
        GeneratedInstance out{ProblemInstance(*kind, Tournament(n, edges), k), optimum, planted,
                              tag, seed};
        return out;
    }
    GeneratedInstance out{ProblemInstance(*kind, UndirectedGraph(n, edges), k), optimum, planted,
                          tag, seed};
    return out;
}

GeneratedInstance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_instance_text(buffer.str());
}

}  // namespace eajr
