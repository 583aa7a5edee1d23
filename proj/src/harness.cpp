#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "oracle.hpp"

namespace eajr {

const char* algorithm_tag(Algorithm a) {
    switch (a) {
        case Algorithm::EaK: return "eak";
        case Algorithm::StandardEa: return "ea";
        case Algorithm::IterCompression: return "ic";
        case Algorithm::Restart: return "restart";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_tag(const std::string& tag) {
    if (tag == "eak") return Algorithm::EaK;
    if (tag == "ea") return Algorithm::StandardEa;
    if (tag == "ic") return Algorithm::IterCompression;
    if (tag == "restart") return Algorithm::Restart;
    return std::nullopt;
}

namespace {

constexpr std::uint64_t kInstanceSalt = 0xA11CE5EEDULL;

bool generator_uses_n_grid(const std::string& gen) {
    return gen == "random_planted" || gen == "clique_anticlique" || gen == "biclique" ||
           gen == "random_tournament" || gen == "random_oct";
}

std::vector<CellKey> build_cells(const ExperimentConfig& cfg) {
    std::vector<CellKey> cells;
    const std::string& gen = cfg.generator;
    if (gen == "file") {
        cells.push_back({});
        return cells;
    }
    if (generator_uses_n_grid(gen)) {
        if (cfg.n_values.empty() || cfg.k_values.empty())
            throw std::invalid_argument("generator needs n and k grids");
        std::vector<double> ps = cfg.p_values;
        if (gen != "random_planted") ps = {-1.0};
        if (gen == "random_planted" && ps.empty())
            throw std::invalid_argument("random_planted needs a p grid");
        for (int n : cfg.n_values)
            for (int k : cfg.k_values)
                for (double p : ps) {
                    CellKey c;
                    c.n = n;
                    c.k = k;
                    c.p = p;
                    cells.push_back(c);
                }
        return cells;
    }
    if (gen == "papadimitriou_steiglitz") {
        if (cfg.l_values.empty()) throw std::invalid_argument("ps generator needs an l grid");
        for (int l : cfg.l_values) {
            CellKey c;
            c.l = l;
            cells.push_back(c);
        }
        return cells;
    }
    if (gen == "oliveto_he_yao") {
        if (cfg.l_values.empty() || cfg.eps_values.empty())
            throw std::invalid_argument("ohy generator needs block-count (l) and eps grids");
        for (int l : cfg.l_values)
            for (double eps : cfg.eps_values) {
                CellKey c;
                c.l = l;
                c.eps = eps;
                cells.push_back(c);
            }
        return cells;
    }
    throw std::invalid_argument("unknown generator: " + gen);
}

GeneratedInstance make_instance(const ExperimentConfig& cfg, const CellKey& cell,
                                std::uint64_t seed) {
    const std::string& gen = cfg.generator;
    if (gen == "random_planted") return gen_random_planted(cell.n, cell.k, cell.p, seed);
    if (gen == "clique_anticlique") return gen_clique_anticlique(cell.n, cell.k);
    if (gen == "biclique") return gen_biclique(cell.n, cell.k);
    if (gen == "papadimitriou_steiglitz") return gen_papadimitriou_steiglitz(cell.l);
    if (gen == "oliveto_he_yao") return gen_oliveto_he_yao(cell.l, cell.eps);
    if (gen == "random_tournament") return gen_random_tournament(cell.n, cell.k, seed);
    if (gen == "random_oct") return gen_random_oct_instance(cell.n, cell.k, seed);
    if (gen == "file") return read_instance(cfg.instance_file);
    throw std::invalid_argument("unknown generator: " + gen);
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    if (cfg.instances_per_cell < 1) throw std::invalid_argument("instances must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (cfg.budget_mode == BudgetMode::Explicit && cfg.budget < 1 &&
        cfg.algorithm != Algorithm::IterCompression)
        throw std::invalid_argument("explicit budget must be >= 1");
    if (cfg.generator == "file" && cfg.instance_file.empty())
        throw std::invalid_argument("file generator needs an instance path");
    if (cfg.generator == "random_tournament" && cfg.problem != ProblemKind::Fvst)
        throw std::invalid_argument("random_tournament generates FVST instances");
    if (cfg.generator == "random_oct" && cfg.problem != ProblemKind::Oct)
        throw std::invalid_argument("random_oct generates OCT instances");
}

RunRecord execute_task(const ExperimentConfig& cfg, const CellKey& cell, int cell_idx,
                       int inst_idx, int rep_idx) {
    std::uint64_t inst_seed =
        derive_seed(cfg.master_seed ^ kInstanceSalt, static_cast<std::uint64_t>(cell_idx),
                    static_cast<std::uint64_t>(inst_idx));
    GeneratedInstance gi = make_instance(cfg, cell, inst_seed);
    const ProblemInstance& inst = gi.instance;

    RunRecord rec;
    rec.cell = cell;
    rec.cell.n = inst.n();
    rec.cell.k = inst.k();
    rec.cell_index = cell_idx;
    rec.instance_index = inst_idx;
    rec.replica_index = rep_idx;
    rec.seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(cell_idx),
                           static_cast<std::uint64_t>(inst_idx), static_cast<std::uint64_t>(rep_idx));

    long long budget = cfg.budget_mode == BudgetMode::Explicit
                           ? cfg.budget
                           : fpt_budget(inst.kind(), inst.k(), inst.n(), cfg.budget_constant);
    Rng rng(rec.seed);
    switch (cfg.algorithm) {
        case Algorithm::EaK: {
            RunResult r = ea_k_run(inst, rng, budget);
            rec.success = r.success;
            rec.iterations = r.success ? r.iterations : budget;
            rec.budget = budget;
            break;
        }
        case Algorithm::StandardEa: {
            if (inst.kind() != ProblemKind::VertexCover)
                throw std::invalid_argument("the standard EA baseline targets vertex cover");
            int optimum = gi.known_optimum ? *gi.known_optimum
                                           : min_vertex_cover_exact(inst.undirected()).size;
            StandardRunResult r = standard_ea_run(inst.undirected(), rng, budget, optimum);
            rec.success = r.success;
            rec.iterations = r.success ? r.iterations : budget;
            rec.budget = budget;
            break;
        }
        case Algorithm::Restart: {
            RestartResult r = restart_run(inst, rng, cfg.budget_constant);
            rec.success = true;
            rec.iterations = r.total_evaluations;
            rec.budget = cfg.budget_mode == BudgetMode::Explicit ? cfg.budget : r.total_evaluations;
            break;
        }
        case Algorithm::IterCompression: {
            auto solution = iterative_compression(inst);
            rec.success = solution.has_value();
            rec.iterations = 0;
            rec.budget = 0;
            break;
        }
    }
    return rec;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string group_file_name(const ExperimentConfig& cfg, const CellKey& cell) {
    std::string name = std::string(algorithm_tag(cfg.algorithm)) + "." + cfg.generator;
    if (cell.p >= 0.0) name += ".p" + format_double(cell.p);
    if (cell.eps >= 0.0) name += ".eps" + format_double(cell.eps);
    name += "-by-n-k" + std::to_string(cell.k) + ".dat";
    return name;
}

std::string ecdf_file_name(const ExperimentConfig& cfg, const CellKey& cell) {
    std::string name = std::string(algorithm_tag(cfg.algorithm)) + "." + cfg.generator;
    if (cell.l >= 0) name += "-" + std::to_string(cell.l);
    else name += "-n" + std::to_string(cell.n) + "-k" + std::to_string(cell.k);
    if (cell.p >= 0.0) name += "-p" + format_double(cell.p);
    if (cell.eps >= 0.0) name += "-eps" + format_double(cell.eps);
    return name + "-ecdf.dat";
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<CellKey> cells = build_cells(cfg);

    struct Task {
        int cell, inst, rep;
    };
    std::vector<Task> tasks;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
        for (int i = 0; i < cfg.instances_per_cell; ++i)
            for (int r = 0; r < cfg.replicas; ++r) tasks.push_back({c, i, r});

    ExperimentResult out;
    out.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const Task& t = tasks[i];
                out.records[i] = execute_task(cfg, cells[t.cell], t.cell, t.inst, t.rep);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    int worker_count = std::min<int>(cfg.workers, static_cast<int>(tasks.size()));
    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::filesystem::create_directories(cfg.out_dir);
    auto emit = [&](const std::string& name) {
        std::string path = cfg.out_dir + "/" + name;
        out.files_written.push_back(path);
        return path;
    };

    if (cfg.write_records)
        write_records_file(out.records, emit("records.txt"));

    // One summary file per (k, p, eps) slice, rows over n.
    std::map<std::string, std::vector<RunRecord>> groups;
    for (const RunRecord& r : out.records) groups[group_file_name(cfg, r.cell)].push_back(r);
    for (const auto& [name, records] : groups)
        write_summary_file(summarize(records), emit(name), false);

    if (cfg.write_ecdf) {
        std::map<std::string, std::vector<RunRecord>> ecdf_groups;
        for (const RunRecord& r : out.records) ecdf_groups[ecdf_file_name(cfg, r.cell)].push_back(r);
        for (const auto& [name, records] : ecdf_groups)
            write_ecdf_file(ecdf(records), emit(name));
    }
    return out;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    std::map<std::tuple<int, int, double>, std::vector<long long>> by_cell;
    std::map<std::tuple<int, int, double>, int> failures;
    for (const RunRecord& r : records) {
        auto key = std::make_tuple(r.cell.n, r.cell.k, r.cell.p);
        by_cell[key].push_back(r.iterations);
        failures[key] += r.success ? 0 : 1;
    }
    std::vector<SummaryRow> rows;
    for (const auto& [key, values] : by_cell) {
        SummaryRow row;
        row.n = std::get<0>(key);
        row.k = std::get<1>(key);
        row.p = std::get<2>(key);
        row.runs = static_cast<int>(values.size());
        row.failures = failures[key];
        double sum = 0.0;
        for (long long v : values) sum += static_cast<double>(v);
        row.mean = sum / row.runs;
        double ss = 0.0;
        for (long long v : values) {
            double d = static_cast<double>(v) - row.mean;
            ss += d * d;
        }
        row.sd = row.runs > 1 ? std::sqrt(ss / (row.runs - 1)) : 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<SummaryRow> normalize(std::vector<SummaryRow> rows) {
    for (SummaryRow& row : rows) {
        double divisor = static_cast<double>(row.n) * row.n * std::log(static_cast<double>(row.n));
        row.mean /= divisor;
        row.sd /= divisor;
    }
    return rows;
}

std::vector<EcdfRow> ecdf(const std::vector<RunRecord>& records) {
    std::vector<long long> solved;
    for (const RunRecord& r : records)
        if (r.success) solved.push_back(r.iterations);
    std::sort(solved.begin(), solved.end());
    std::vector<EcdfRow> rows;
    const double total = static_cast<double>(records.size());
    for (std::size_t i = 0; i < solved.size(); ++i) {
        if (i + 1 < solved.size() && solved[i + 1] == solved[i]) continue;
        rows.push_back({solved[i], static_cast<double>(i + 1) / total});
    }
    return rows;
}

void write_records_file(const std::vector<RunRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "# cell instance replica n k p eps l seed success iterations budget\n";
    char buf[256];
    for (const RunRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%d %d %d %d %d %g %g %d %llu %d %lld %lld\n",
                      r.cell_index, r.instance_index, r.replica_index, r.cell.n, r.cell.k,
                      r.cell.p, r.cell.eps, r.cell.l,
                      static_cast<unsigned long long>(r.seed), r.success ? 1 : 0, r.iterations,
                      r.budget);
        out << buf;
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<RunRecord> read_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<RunRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        RunRecord r;
        unsigned long long seed;
        int success;
        if (!(ls >> r.cell_index >> r.instance_index >> r.replica_index >> r.cell.n >> r.cell.k >>
              r.cell.p >> r.cell.eps >> r.cell.l >> seed >> success >> r.iterations >> r.budget))
            throw std::runtime_error("malformed record line: " + line);
        r.seed = seed;
        r.success = success != 0;
        records.push_back(r);
    }
    return records;
}

void write_summary_file(const std::vector<SummaryRow>& rows, const std::string& path,
                        bool normalized) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "# n k p mean sd runs failures\n";
    char buf[256];
    for (const SummaryRow& row : rows) {
        if (normalized)
            std::snprintf(buf, sizeof(buf), "%d %d %g %.8f %.8f %d %d\n", row.n, row.k, row.p,
                          row.mean, row.sd, row.runs, row.failures);
        else
            std::snprintf(buf, sizeof(buf), "%d %d %g %.4f %.4f %d %d\n", row.n, row.k, row.p,
                          row.mean, row.sd, row.runs, row.failures);
        out << buf;
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_ecdf_file(const std::vector<EcdfRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "# runtime freq\n";
    char buf[128];
    for (const EcdfRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%lld %.6f\n", row.runtime, row.freq);
        out << buf;
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace eajr
