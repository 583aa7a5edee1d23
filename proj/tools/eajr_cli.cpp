// Command-line front end for the eajr shared library. Talks to the core
// exclusively through the C API in eajr.h.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eajr.h"

namespace {

int fail(eajr_status status, const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(), eajr_status_message(status));
    return 1;
}

uint64_t effective_seed(uint64_t cli_seed) {
    const char* env = std::getenv("EAJR_SEED");
    if (env && *env) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

struct InstanceHandle {
    eajr_instance* ptr = nullptr;
    ~InstanceHandle() { eajr_instance_free(ptr); }
};

eajr_status make_instance(const std::string& gen, const std::string& problem, int n, int k,
                          double p, double eps, int l, uint64_t seed, eajr_instance** out) {
    (void)problem;
    if (gen == "random_planted") return eajr_generate_random_planted(n, k, p, seed, out);
    if (gen == "clique_anticlique") return eajr_generate_clique_anticlique(n, k, out);
    if (gen == "biclique") return eajr_generate_biclique(n, k, out);
    if (gen == "papadimitriou_steiglitz") return eajr_generate_papadimitriou_steiglitz(l, out);
    if (gen == "oliveto_he_yao") return eajr_generate_oliveto_he_yao(l, eps, out);
    if (gen == "random_tournament") return eajr_generate_random_tournament(n, k, seed, out);
    if (gen == "random_oct") return eajr_generate_random_oct(n, k, seed, out);
    return EAJR_ERR_INVALID_ARGUMENT;
}

std::vector<int> parse_solution_ids(const std::string& text) {
    std::vector<int> ids;
    std::string item;
    for (char c : text + ",") {
        if (c == ',') {
            if (!item.empty()) ids.push_back(std::stoi(item));
            item.clear();
        } else {
            item += c;
        }
    }
    return ids;
}

eajr_problem problem_from(const std::string& name) {
    if (name == "fvst") return EAJR_PROBLEM_FVST;
    if (name == "oct") return EAJR_PROBLEM_OCT;
    return EAJR_PROBLEM_VC;
}

eajr_algorithm algorithm_from(const std::string& name) {
    if (name == "ea") return EAJR_ALGO_STANDARD_EA;
    if (name == "ic") return EAJR_ALGO_ITER_COMPRESSION;
    if (name == "restart") return EAJR_ALGO_RESTART;
    return EAJR_ALGO_EA_K;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark harness for jump-and-repair evolutionary search on "
                 "k-VertexCover, k-FVST and k-OddCycleTransversal"};
    app.require_subcommand(1);

    std::string gen = "random_planted", problem = "vc", algo = "eak";
    std::string out_path, in_path, solution_text, records_path;
    std::vector<int> n_values, k_values, l_values;
    std::vector<double> p_values, eps_values;
    int n = 20, k = 3, l = 5, instances = 1, replicas = 1, workers = 1;
    double p = 0.5, eps = 0.25;
    long long budget = 0;
    uint64_t seed = 1;
    bool normalized = false, ecdf_out = false;

    auto* generate = app.add_subcommand("generate", "Write one generated instance file");
    generate->add_option("--gen", gen, "Generator tag")->capture_default_str();
    generate->add_option("--problem", problem, "vc|fvst|oct")->capture_default_str();
    generate->add_option("--n", n, "Vertex count")->capture_default_str();
    generate->add_option("--k", k, "Parameter k")->capture_default_str();
    generate->add_option("--p", p, "Edge probability")->capture_default_str();
    generate->add_option("--eps", eps, "Partition imbalance")->capture_default_str();
    generate->add_option("--l", l, "Order / block count")->capture_default_str();
    generate->add_option("--seed", seed, "Seed")->capture_default_str();
    generate->add_option("--out", out_path, "Output file")->required();

    auto* run = app.add_subcommand("run", "Run an experiment grid and write data files");
    run->add_option("--algo", algo, "eak|ea|ic|restart")->capture_default_str();
    run->add_option("--problem", problem, "vc|fvst|oct")->capture_default_str();
    run->add_option("--gen", gen, "Generator tag or 'file'")->capture_default_str();
    run->add_option("--in", in_path, "Instance file (with --gen file)");
    run->add_option("--n", n_values, "n grid")->delimiter(',');
    run->add_option("--k", k_values, "k grid")->delimiter(',');
    run->add_option("--p", p_values, "p grid")->delimiter(',');
    run->add_option("--eps", eps_values, "eps grid")->delimiter(',');
    run->add_option("--l", l_values, "order / block count grid")->delimiter(',');
    run->add_option("--instances", instances, "Instances per grid cell")->capture_default_str();
    run->add_option("--replicas", replicas, "Runs per instance")->capture_default_str();
    run->add_option("--budget", budget, "Iteration cap (0 = FPT formula)")->capture_default_str();
    run->add_option("--seed", seed, "Master seed")->capture_default_str();
    run->add_option("--workers", workers, "Worker threads")->capture_default_str();
    run->add_flag("--ecdf", ecdf_out, "Also write per-cell ECDF files");
    run->add_option("--out", out_path, "Output directory")->required();

    auto* summarize = app.add_subcommand("summarize", "Aggregate a records file");
    summarize->add_option("--records", records_path, "records.txt path")->required();
    summarize->add_flag("--normalize", normalized, "Divide mean/sd by n^2 ln n");
    summarize->add_option("--out", out_path, "Output file")->required();

    auto* ecdf_cmd = app.add_subcommand("ecdf", "Empirical CDF of a records file");
    ecdf_cmd->add_option("--records", records_path, "records.txt path")->required();
    ecdf_cmd->add_option("--out", out_path, "Output file")->required();

    auto* oracle = app.add_subcommand("oracle", "Exact minimum of an instance file");
    oracle->add_option("--in", in_path, "Instance file")->required();

    auto* verify = app.add_subcommand("verify", "Check a solution against an instance file");
    verify->add_option("--in", in_path, "Instance file")->required();
    verify->add_option("--solution", solution_text, "Comma-separated vertex ids")->required();

    CLI11_PARSE(app, argc, argv);
    seed = effective_seed(seed);

    if (generate->parsed()) {
        InstanceHandle handle;
        eajr_status st = make_instance(gen, problem, n, k, p, eps, l, seed, &handle.ptr);
        if (st != EAJR_OK) return fail(st, "generate");
        st = eajr_instance_write(handle.ptr, out_path.c_str());
        if (st != EAJR_OK) return fail(st, "write " + out_path);
        std::printf("wrote %s: n=%d m=%lld k=%d\n", out_path.c_str(),
                    eajr_instance_vertices(handle.ptr), eajr_instance_edges(handle.ptr),
                    eajr_instance_k(handle.ptr));
        return 0;
    }

    if (run->parsed()) {
        eajr_experiment_config cfg{};
        cfg.algorithm = algorithm_from(algo);
        cfg.problem = problem_from(problem);
        cfg.generator = gen.c_str();
        cfg.instance_file = in_path.empty() ? nullptr : in_path.c_str();
        cfg.n_values = n_values.data();
        cfg.n_count = static_cast<int>(n_values.size());
        cfg.k_values = k_values.data();
        cfg.k_count = static_cast<int>(k_values.size());
        cfg.p_values = p_values.data();
        cfg.p_count = static_cast<int>(p_values.size());
        cfg.eps_values = eps_values.data();
        cfg.eps_count = static_cast<int>(eps_values.size());
        cfg.l_values = l_values.data();
        cfg.l_count = static_cast<int>(l_values.size());
        cfg.instances_per_cell = instances;
        cfg.replicas = replicas;
        cfg.budget = budget;
        cfg.master_seed = seed;
        cfg.workers = workers;
        cfg.write_records = 1;
        cfg.write_ecdf = ecdf_out ? 1 : 0;
        cfg.out_dir = out_path.c_str();
        eajr_status st = eajr_experiment_run(&cfg);
        if (st != EAJR_OK) return fail(st, "run");
        std::printf("experiment written to %s\n", out_path.c_str());
        return 0;
    }

    if (summarize->parsed()) {
        eajr_status st =
            eajr_summarize_records(records_path.c_str(), out_path.c_str(), normalized ? 1 : 0);
        if (st != EAJR_OK) return fail(st, "summarize");
        return 0;
    }

    if (ecdf_cmd->parsed()) {
        eajr_status st = eajr_ecdf_records(records_path.c_str(), out_path.c_str());
        if (st != EAJR_OK) return fail(st, "ecdf");
        return 0;
    }

    if (oracle->parsed()) {
        InstanceHandle handle;
        eajr_status st = eajr_instance_read(in_path.c_str(), &handle.ptr);
        if (st != EAJR_OK) return fail(st, "read " + in_path);
        int size = 0, len = 0;
        std::vector<int> witness(static_cast<std::size_t>(eajr_instance_vertices(handle.ptr)));
        st = eajr_oracle_minimum(handle.ptr, &size, witness.data(),
                                 static_cast<int>(witness.size()), &len);
        if (st != EAJR_OK) return fail(st, "oracle");
        std::printf("minimum %d\nwitness", size);
        for (int i = 0; i < len; ++i) std::printf(" %d", witness[i]);
        std::printf("\n");
        return 0;
    }

    if (verify->parsed()) {
        InstanceHandle handle;
        eajr_status st = eajr_instance_read(in_path.c_str(), &handle.ptr);
        if (st != EAJR_OK) return fail(st, "read " + in_path);
        std::vector<int> ids = parse_solution_ids(solution_text);
        int valid = 0;
        st = eajr_verify_solution(handle.ptr, ids.data(), static_cast<int>(ids.size()), &valid);
        if (st != EAJR_OK) return fail(st, "verify");
        std::printf("%s\n", valid ? "valid" : "invalid");
        return valid ? 0 : 3;
    }

    return 0;
}
