#include "eajr.h"

#include <cstring>
#include <functional>
#include <new>
#include <stdexcept>

#include "ea.hpp"
#include "harness.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace eajr;

struct eajr_instance {
    GeneratedInstance data;
};

namespace {

eajr_status run_guarded(const std::function<eajr_status()>& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        std::string message(e.what());
        if (message.find("oracle cap") != std::string::npos) return EAJR_ERR_LIMIT;
        return EAJR_ERR_INVALID_ARGUMENT;
    } catch (const std::logic_error&) {
        return EAJR_ERR_CONTRACT;
    } catch (const std::runtime_error&) {
        return EAJR_ERR_IO;
    } catch (const std::bad_alloc&) {
        return EAJR_ERR_INTERNAL;
    } catch (...) {
        return EAJR_ERR_INTERNAL;
    }
}

eajr_status fill_ids(const VertexSet& s, int* buf, int capacity, int* out_len) {
    int count = s.count();
    if (out_len) *out_len = count;
    if (count == 0) return EAJR_OK;
    if (!buf || capacity < count) return EAJR_ERR_BUFFER;
    int i = 0;
    s.for_each([&](int v) { buf[i++] = v; });
    return EAJR_OK;
}

eajr_problem to_c_problem(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::VertexCover: return EAJR_PROBLEM_VC;
        case ProblemKind::Fvst: return EAJR_PROBLEM_FVST;
        case ProblemKind::Oct: return EAJR_PROBLEM_OCT;
    }
    return EAJR_PROBLEM_VC;
}

eajr_status make_handle(GeneratedInstance gi, eajr_instance** out) {
    if (!out) return EAJR_ERR_INVALID_ARGUMENT;
    *out = new eajr_instance{std::move(gi)};
    return EAJR_OK;
}

}  // namespace

extern "C" {

const char* eajr_status_message(eajr_status status) {
    switch (status) {
        case EAJR_OK: return "ok";
        case EAJR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case EAJR_ERR_IO: return "i/o or parse error";
        case EAJR_ERR_LIMIT: return "oracle size cap exceeded";
        case EAJR_ERR_CONTRACT: return "precondition violated";
        case EAJR_ERR_BUFFER: return "buffer too small";
        case EAJR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

eajr_status eajr_instance_read(const char* path, eajr_instance** out) {
    if (!path || !out) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] { return make_handle(read_instance(path), out); });
}

eajr_status eajr_instance_write(const eajr_instance* inst, const char* path) {
    if (!inst || !path) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        write_instance(inst->data, path);
        return EAJR_OK;
    });
}

void eajr_instance_free(eajr_instance* inst) { delete inst; }

int eajr_instance_vertices(const eajr_instance* inst) {
    return inst ? inst->data.instance.n() : -1;
}

long long eajr_instance_edges(const eajr_instance* inst) {
    return inst ? inst->data.instance.m() : -1;
}

int eajr_instance_k(const eajr_instance* inst) { return inst ? inst->data.instance.k() : -1; }

eajr_problem eajr_instance_problem(const eajr_instance* inst) {
    return inst ? to_c_problem(inst->data.instance.kind()) : EAJR_PROBLEM_VC;
}

eajr_status eajr_instance_set_k(eajr_instance* inst, int k) {
    if (!inst) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        inst->data.instance = inst->data.instance.with_k(k);
        return EAJR_OK;
    });
}

int eajr_instance_known_optimum(const eajr_instance* inst) {
    if (!inst || !inst->data.known_optimum) return -1;
    return *inst->data.known_optimum;
}

eajr_status eajr_instance_planted(const eajr_instance* inst, int* buf, int capacity,
                                  int* out_len) {
    if (!inst || !out_len) return EAJR_ERR_INVALID_ARGUMENT;
    if (!inst->data.planted_solution) {
        *out_len = 0;
        return EAJR_OK;
    }
    return fill_ids(*inst->data.planted_solution, buf, capacity, out_len);
}

eajr_status eajr_generate_random_planted(int n, int k, double p, uint64_t seed,
                                         eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_random_planted(n, k, p, seed), out); });
}

eajr_status eajr_generate_clique_anticlique(int n, int k, eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_clique_anticlique(n, k), out); });
}

eajr_status eajr_generate_biclique(int n, int k, eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_biclique(n, k), out); });
}

eajr_status eajr_generate_papadimitriou_steiglitz(int order, eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_papadimitriou_steiglitz(order), out); });
}

eajr_status eajr_generate_oliveto_he_yao(int blocks, double eps, eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_oliveto_he_yao(blocks, eps), out); });
}

eajr_status eajr_generate_random_tournament(int n, int k, uint64_t seed, eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_random_tournament(n, k, seed), out); });
}

eajr_status eajr_generate_random_oct(int n, int k, uint64_t seed, eajr_instance** out) {
    return run_guarded([&] { return make_handle(gen_random_oct_instance(n, k, seed), out); });
}

eajr_status eajr_verify_solution(const eajr_instance* inst, const int* ids, int count,
                                 int* out_valid) {
    if (!inst || !out_valid || (count > 0 && !ids)) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        VertexSet s(inst->data.instance.n());
        for (int i = 0; i < count; ++i) {
            if (ids[i] < 0 || ids[i] >= inst->data.instance.n())
                throw std::invalid_argument("vertex id out of range");
            s.set(ids[i]);
        }
        *out_valid = verify_final(inst->data.instance, s) ? 1 : 0;
        return EAJR_OK;
    });
}

eajr_status eajr_oracle_minimum(const eajr_instance* inst, int* out_size, int* witness_buf,
                                int capacity, int* out_len) {
    if (!inst || !out_size) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        OracleAnswer answer = exact_minimum(inst->data.instance);
        *out_size = answer.size;
        if (out_len) return fill_ids(answer.witness, witness_buf, capacity, out_len);
        return EAJR_OK;
    });
}

eajr_status eajr_run(const eajr_instance* inst, eajr_algorithm algorithm, uint64_t seed,
                     long long budget, eajr_run_result* out, int* solution_buf, int capacity,
                     int* out_len) {
    if (!inst || !out) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        const ProblemInstance& pi = inst->data.instance;
        out->success = 0;
        out->iterations = 0;
        out->budget = budget;
        out->seed = seed;
        out->k_found = -1;
        VertexSet solution(pi.n());

        long long effective = budget > 0 ? budget : fpt_budget(pi.kind(), pi.k(), pi.n());
        Rng rng(seed);
        switch (algorithm) {
            case EAJR_ALGO_EA_K: {
                RunResult r = ea_k_run(pi, rng, effective);
                out->success = r.success ? 1 : 0;
                out->iterations = r.iterations;
                out->budget = effective;
                if (r.success) solution = r.final_state.solution;
                break;
            }
            case EAJR_ALGO_STANDARD_EA: {
                if (pi.kind() != ProblemKind::VertexCover)
                    throw std::invalid_argument("standard EA targets vertex cover");
                int optimum = inst->data.known_optimum
                                  ? *inst->data.known_optimum
                                  : min_vertex_cover_exact(pi.undirected()).size;
                StandardRunResult r = standard_ea_run(pi.undirected(), rng, effective, optimum);
                out->success = r.success ? 1 : 0;
                out->iterations = r.iterations;
                out->budget = effective;
                if (r.success) solution = r.final_state;
                break;
            }
            case EAJR_ALGO_ITER_COMPRESSION: {
                auto s = iterative_compression(pi);
                out->success = s.has_value() ? 1 : 0;
                out->budget = 0;
                if (s) solution = *s;
                break;
            }
            case EAJR_ALGO_RESTART: {
                RestartResult r = restart_run(pi, rng);
                out->success = 1;
                out->iterations = r.total_evaluations;
                out->k_found = r.k_found;
                solution = r.solution;
                break;
            }
            default:
                throw std::invalid_argument("unknown algorithm");
        }
        if (out_len) {
            if (!out->success) {
                *out_len = 0;
                return EAJR_OK;
            }
            return fill_ids(solution, solution_buf, capacity, out_len);
        }
        return EAJR_OK;
    });
}

eajr_status eajr_experiment_run(const eajr_experiment_config* config) {
    if (!config || !config->generator || !config->out_dir) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        ExperimentConfig cfg;
        switch (config->algorithm) {
            case EAJR_ALGO_EA_K: cfg.algorithm = Algorithm::EaK; break;
            case EAJR_ALGO_STANDARD_EA: cfg.algorithm = Algorithm::StandardEa; break;
            case EAJR_ALGO_ITER_COMPRESSION: cfg.algorithm = Algorithm::IterCompression; break;
            case EAJR_ALGO_RESTART: cfg.algorithm = Algorithm::Restart; break;
            default: throw std::invalid_argument("unknown algorithm");
        }
        switch (config->problem) {
            case EAJR_PROBLEM_VC: cfg.problem = ProblemKind::VertexCover; break;
            case EAJR_PROBLEM_FVST: cfg.problem = ProblemKind::Fvst; break;
            case EAJR_PROBLEM_OCT: cfg.problem = ProblemKind::Oct; break;
            default: throw std::invalid_argument("unknown problem");
        }
        cfg.generator = config->generator;
        if (config->instance_file) cfg.instance_file = config->instance_file;
        auto copy_ints = [](const int* p, int count, std::vector<int>& dst) {
            if (count > 0 && !p) throw std::invalid_argument("null grid pointer");
            if (count > 0) dst.assign(p, p + count);
        };
        auto copy_doubles = [](const double* p, int count, std::vector<double>& dst) {
            if (count > 0 && !p) throw std::invalid_argument("null grid pointer");
            if (count > 0) dst.assign(p, p + count);
        };
        copy_ints(config->n_values, config->n_count, cfg.n_values);
        copy_ints(config->k_values, config->k_count, cfg.k_values);
        copy_doubles(config->p_values, config->p_count, cfg.p_values);
        copy_doubles(config->eps_values, config->eps_count, cfg.eps_values);
        copy_ints(config->l_values, config->l_count, cfg.l_values);
        cfg.instances_per_cell = config->instances_per_cell;
        cfg.replicas = config->replicas;
        if (config->budget > 0) {
            cfg.budget_mode = BudgetMode::Explicit;
            cfg.budget = config->budget;
        }
        cfg.master_seed = config->master_seed;
        cfg.workers = config->workers;
        cfg.write_records = config->write_records != 0;
        cfg.write_ecdf = config->write_ecdf != 0;
        cfg.out_dir = config->out_dir;
        run_experiment(cfg);
        return EAJR_OK;
    });
}

eajr_status eajr_summarize_records(const char* records_path, const char* out_path,
                                   int normalized) {
    if (!records_path || !out_path) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        auto records = read_records_file(records_path);
        auto rows = summarize(records);
        if (normalized) rows = normalize(std::move(rows));
        write_summary_file(rows, out_path, normalized != 0);
        return EAJR_OK;
    });
}

eajr_status eajr_ecdf_records(const char* records_path, const char* out_path) {
    if (!records_path || !out_path) return EAJR_ERR_INVALID_ARGUMENT;
    return run_guarded([&] {
        write_ecdf_file(ecdf(read_records_file(records_path)), out_path);
        return EAJR_OK;
    });
}

}  // extern "C"
