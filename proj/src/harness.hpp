#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ea.hpp"
#include "instances.hpp"

namespace eajr {

enum class Algorithm { EaK, StandardEa, IterCompression, Restart };

const char* algorithm_tag(Algorithm a);
std::optional<Algorithm> algorithm_from_tag(const std::string& tag);

enum class BudgetMode { Explicit, FptFormula };

/// Grid-driven experiment description. A cell is one combination of the
/// parameter grids; each cell draws `instances_per_cell` instances and runs
/// `replicas` seeded runs on each. Every per-run seed is a pure function of
/// (master_seed, cell, instance, replica), so outputs do not depend on the
/// worker count.
struct ExperimentConfig {
    Algorithm algorithm = Algorithm::EaK;
    ProblemKind problem = ProblemKind::VertexCover;
    std::string generator;           // random_planted | clique_anticlique | biclique |
                                     // papadimitriou_steiglitz | oliveto_he_yao |
                                     // random_tournament | random_oct | file
    std::vector<int> n_values;
    std::vector<int> k_values;
    std::vector<double> p_values;    // random_planted only
    std::vector<double> eps_values;  // oliveto_he_yao only
    std::vector<int> l_values;       // papadimitriou_steiglitz / oliveto_he_yao block counts
    std::string instance_file;       // generator == "file"
    int instances_per_cell = 1;
    int replicas = 1;
    BudgetMode budget_mode = BudgetMode::FptFormula;
    long long budget = 0;            // Explicit mode
    double budget_constant = kDefaultBudgetConstant;
    std::uint64_t master_seed = 1;
    int workers = 1;
    bool write_records = true;
    bool write_ecdf = false;
    std::string out_dir = ".";
};

/// Parameters identifying one grid cell.
struct CellKey {
    int n = 0;   // actual vertex count of the cell's instances
    int k = 0;
    double p = -1.0;
    double eps = -1.0;
    int l = -1;
};

struct RunRecord {
    CellKey cell;
    int cell_index = 0;
    int instance_index = 0;
    int replica_index = 0;
    std::uint64_t seed = 0;
    bool success = false;
    long long iterations = 0;
    long long budget = 0;
};

struct SummaryRow {
    int n = 0;
    int k = 0;
    double p = -1.0;
    double mean = 0.0;  // capped runs enter at their budget value
    double sd = 0.0;
    int runs = 0;
    int failures = 0;
};

struct EcdfRow {
    long long runtime = 0;
    double freq = 0.0;
};

struct ExperimentResult {
    std::vector<RunRecord> records;
    std::vector<std::string> files_written;
};

/// Executes the full grid and writes record/summary (and optionally ECDF)
/// files under cfg.out_dir. Deterministic for a fixed master seed regardless
/// of worker count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Mean/sd per n (ascending), pooling all records that share a cell's k/p.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

/// Divides mean and sd by n^2 ln n.
std::vector<SummaryRow> normalize(std::vector<SummaryRow> rows);

/// Step function over the distinct success runtimes; capped runs count only
/// in the denominator.
std::vector<EcdfRow> ecdf(const std::vector<RunRecord>& records);

/// Record file round trip (whitespace-separated columns, `#` header line).
void write_records_file(const std::vector<RunRecord>& records, const std::string& path);
std::vector<RunRecord> read_records_file(const std::string& path);

void write_summary_file(const std::vector<SummaryRow>& rows, const std::string& path,
                        bool normalized);
void write_ecdf_file(const std::vector<EcdfRow>& rows, const std::string& path);

}  // namespace eajr
