// sbmtest: goodness-of-fit testing and community-count estimation for
// stochastic block models, plus the simulation harness.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "sbmtest/harness.hpp"
#include "sbmtest/serialize.hpp"
#include "sbmtest/tw1.hpp"

using namespace sbmtest;
using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit_report(const json& report, const std::string& json_path) {
    if (json_path.empty()) return;
    if (json_path == "-") {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot open '" + json_path + "' for writing");
    out << report.dump(2) << '\n';
}

struct GenArgs {
    std::string config;
    std::string out;
    std::string labels_out;
    std::string model = "sbm";
    int n = 0;
    int k = 1;
    double p_diag = -1.0, p_off = -1.0, r = -1.0;
    std::string membership = "iid";
    std::string psi_dist = "uniform01";
    double dir_alpha = 0.5;
    std::uint64_t seed = 1;
    int indexing = 0;
};

int run_gen(const GenArgs& args) {
    ModelSpec model;
    if (!args.config.empty()) {
        model = ModelSpec::from_json(load_json_file(args.config));
        if (load_json_file(args.config).contains("seed")) {
            // seed may live in the config document
        }
    } else {
        model.kind = args.model;
        model.n = args.n;
        model.k = args.k;
        if (args.r >= 0.0) model.r = args.r;
        if (args.p_diag >= 0.0) model.p_diag = args.p_diag;
        if (args.p_off >= 0.0) model.p_off = args.p_off;
        model.membership = args.membership;
        model.psi_dist = args.psi_dist;
        model.dirichlet_alpha = args.dir_alpha;
    }
    std::uint64_t seed = args.seed;
    if (!args.config.empty()) {
        const json j = load_json_file(args.config);
        if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    }
    model.validate();
    SeededRng rng = SeededRng(seed).derive(stream::kReplicate).derive(0);
    const GeneratedInstance instance = generate_instance(model, rng);
    write_edge_list(instance.graph, args.out, args.indexing);
    if (!args.labels_out.empty()) {
        std::ofstream labels(args.labels_out);
        if (!labels) throw IoError("cannot open '" + args.labels_out + "' for writing");
        for (int lab : instance.membership.labels) labels << lab << '\n';
    }
    std::cout << "wrote " << args.out << ": n=" << instance.graph.size()
              << " edges=" << instance.graph.edge_count()
              << " density=" << format_double(instance.graph.density()) << '\n';
    return 0;
}

std::optional<Membership> load_labels_for(const AdjacencyGraph& graph,
                                          const std::string& path, int k0) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open labels file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string token;
        fields >> token;
        tokens.push_back(token);
    }
    if (static_cast<int>(tokens.size()) != graph.size())
        throw ParamError("labels file '" + path + "' has " +
                         std::to_string(tokens.size()) + " labels for a graph with " +
                         std::to_string(graph.size()) + " nodes");
    Membership m;
    m.k = k0;
    std::vector<std::string> seen;
    for (const auto& token : tokens) {
        auto it = std::find(seen.begin(), seen.end(), token);
        if (it == seen.end()) {
            seen.push_back(token);
            it = std::prev(seen.end());
        }
        m.labels.push_back(static_cast<int>(it - seen.begin()) + 1);
    }
    if (static_cast<int>(seen.size()) != k0)
        throw ParamError("labels file has " + std::to_string(seen.size()) +
                         " distinct labels but k0 = " + std::to_string(k0));
    return m;
}

void print_test_summary(const GofTestResult& result) {
    std::cout << "mode=" << result.mode << " k0=" << result.k0
              << " statistic=" << format_double(result.statistic)
              << " threshold=" << format_double(result.threshold)
              << " reject=" << (result.reject ? "yes" : "no")
              << " p_bound=" << format_double(result.p_value_bound) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"goodness-of-fit tests and community-count estimation for block models"};
    app.require_subcommand(1);

    // ---- gen ----
    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
    gen->add_option("--config", gen_args.config, "model config JSON document");
    gen->add_option("--out", gen_args.out, "edge-list output path")->required();
    gen->add_option("--labels-out", gen_args.labels_out, "write true labels here");
    gen->add_option("--model", gen_args.model, "sbm | dcbm | mmbm");
    gen->add_option("--n", gen_args.n, "node count");
    gen->add_option("--k", gen_args.k, "community count");
    gen->add_option("--p-diag", gen_args.p_diag, "within-community probability");
    gen->add_option("--p-off", gen_args.p_off, "between-community probability");
    gen->add_option("--r", gen_args.r, "sparsity pattern: B = r(1 + 2*delta)");
    gen->add_option("--membership", gen_args.membership, "iid | balanced");
    gen->add_option("--psi-dist", gen_args.psi_dist, "dcbm activeness: uniform01 | ones");
    gen->add_option("--dir-alpha", gen_args.dir_alpha, "mmbm Dirichlet concentration");
    gen->add_option("--seed", gen_args.seed, "master seed");
    gen->add_option("--indexing", gen_args.indexing, "edge-list id base (0 or 1)");

    // ---- test ----
    std::string test_in, test_labels, test_json;
    int test_k0 = 2;
    double test_alpha = 0.05;
    bool test_bootstrap = false;
    int test_m = 50;
    std::uint64_t test_seed = 1;
    int test_threads = 0;
    double test_clamp = 1e-6;
    auto* test = app.add_subcommand("test", "goodness-of-fit test on an edge-list graph");
    test->add_option("--in", test_in, "edge-list path")->required();
    test->add_option("--labels", test_labels, "membership file (one label per node line)");
    test->add_option("--k0", test_k0, "hypothesized community count");
    test->add_option("--alpha", test_alpha, "test level");
    test->add_flag("--bootstrap", test_bootstrap, "apply the fused bootstrap correction");
    test->add_option("--m", test_m, "bootstrap replicates (default 50)");
    test->add_option("--seed", test_seed, "master seed");
    test->add_option("--threads", test_threads, "bootstrap worker threads (0 = auto)");
    test->add_option("--clamp-eps", test_clamp, "probability clamp for the rescaling");
    test->add_option("--json", test_json, "write the JSON report here ('-' = stdout)");

    // ---- estimate-k ----
    std::string est_in, est_json, est_mode = "quantile";
    double est_alpha = 1e-4, est_c = 1.0, est_eps = 0.5;
    int est_kmax = 0, est_m = 50, est_threads = 0;
    bool est_plain = false;
    std::uint64_t est_seed = 1;
    auto* est = app.add_subcommand("estimate-k", "sequential community-count estimate");
    est->add_option("--in", est_in, "edge-list path")->required();
    est->add_option("--alpha", est_alpha, "scan level (quantile mode)");
    est->add_option("--mode", est_mode, "quantile | power-law");
    est->add_option("--c", est_c, "power-law threshold constant");
    est->add_option("--eps", est_eps, "power-law exponent in (0, 5/6)");
    est->add_option("--kmax", est_kmax, "scan cap (0 = max(10, n^(1/3)))");
    est->add_flag("--plain", est_plain, "disable the bootstrap correction");
    est->add_option("--m", est_m, "bootstrap replicates");
    est->add_option("--seed", est_seed, "master seed");
    est->add_option("--threads", est_threads, "bootstrap worker threads (0 = auto)");
    est->add_option("--json", est_json, "write the JSON report here ('-' = stdout)");

    // ---- simulate ----
    auto* simulate = app.add_subcommand("simulate", "run a simulation experiment");
    simulate->require_subcommand(1);
    struct SimArgs {
        std::string preset = "smoke";
        std::string config;
        std::string out;
        std::uint64_t seed = 0;
        bool seed_set = false;
        int reps = 0;
        int n = 0;
        int threads = 0;
    };
    SimArgs sim_args[3];
    const char* sim_names[3] = {"null-dist", "errors", "select-k"};
    const char* sim_kinds[3] = {"null-dist", "error-table", "select-k"};
    CLI::App* sim_cmds[3];
    for (int i = 0; i < 3; ++i) {
        auto* cmd = simulate->add_subcommand(sim_names[i]);
        cmd->add_option("--preset", sim_args[i].preset, "paper | smoke");
        cmd->add_option("--config", sim_args[i].config,
                        "experiment spec JSON (replaces the preset)");
        cmd->add_option("--out", sim_args[i].out, "output CSV path");
        cmd->add_option("--seed", sim_args[i].seed, "master seed")
            ->each([&, i](const std::string&) { sim_args[i].seed_set = true; });
        cmd->add_option("--reps", sim_args[i].reps, "replicates");
        cmd->add_option("--n", sim_args[i].n, "node count");
        cmd->add_option("--threads", sim_args[i].threads, "worker threads (0 = auto)");
        sim_cmds[i] = cmd;
    }

    // ---- real-data ----
    std::string real_path, real_labels, real_json = "-";
    int real_k0 = 2, real_m = 50, real_kmax = 0, real_threads = 0;
    double real_alpha = 0.05, real_scan_alpha = 1e-5;
    bool real_plain = false, real_scan = false;
    std::uint64_t real_seed = 1;
    auto* real = app.add_subcommand("real-data",
                                    "largest-component test workflow on a real network");
    real->add_option("edges", real_path, "edge-list path")->required();
    real->add_option("--labels", real_labels, "known membership file");
    real->add_option("--k0", real_k0, "hypothesized community count");
    real->add_option("--alpha", real_alpha, "test level");
    real->add_flag("--plain", real_plain, "skip the bootstrap correction");
    real->add_option("--m", real_m, "bootstrap replicates");
    real->add_flag("--kscan", real_scan, "also run the sequential estimator");
    real->add_option("--kscan-alpha", real_scan_alpha, "scan level");
    real->add_option("--kmax", real_kmax, "scan cap");
    real->add_option("--seed", real_seed, "master seed");
    real->add_option("--threads", real_threads, "bootstrap worker threads (0 = auto)");
    real->add_option("--json", real_json, "JSON report path ('-' = stdout)");

    try {
        app.parse(argc, argv);

        if (*gen) return run_gen(gen_args);

        if (*test) {
            const LoadedGraph loaded = read_edge_list(test_in);
            const auto ghat = load_labels_for(loaded.graph, test_labels, test_k0);
            const SeededRng rng(test_seed);
            GofOptions options;
            options.threads = test_threads;
            options.clamp_eps = test_clamp;
            const GofTestResult result =
                test_bootstrap ? bootstrap_corrected_test(loaded.graph, test_k0, test_alpha,
                                                          test_m, ghat, rng, options)
                               : gof_test(loaded.graph, test_k0, test_alpha, ghat, rng,
                                          options);
            print_test_summary(result);
            emit_report(to_json(result), test_json);
            return 0;
        }

        if (*est) {
            const LoadedGraph loaded = read_edge_list(est_in);
            const SeededRng rng(est_seed);
            KSelectMode mode;
            if (est_mode == "quantile")
                mode = KSelectMode::quantile(est_alpha);
            else if (est_mode == "power-law")
                mode = KSelectMode::power_law(est_c, est_eps);
            else
                throw ParamError("estimate-k: unknown mode '" + est_mode + "'");
            KEstimateOptions options;
            options.bootstrap = !est_plain;
            options.m = est_m;
            options.k_max = est_kmax;
            options.gof.threads = est_threads;
            const KEstimateResult result = estimate_k(loaded.graph, mode, options, rng);
            std::cout << "k_hat=" << result.k_hat << " mode=" << result.mode
                      << " capped=" << (result.capped ? "yes" : "no")
                      << " stages=" << result.trace.size() << '\n';
            emit_report(to_json(result), est_json);
            return 0;
        }

        for (int i = 0; i < 3; ++i) {
            if (!(*sim_cmds[i])) continue;
            const SimArgs& args = sim_args[i];
            ExperimentSpec spec = args.config.empty()
                                      ? ExperimentSpec::preset(sim_kinds[i], args.preset)
                                      : ExperimentSpec::from_json(
                                            load_json_file(args.config));
            if (!args.out.empty()) spec.out = args.out;
            if (args.seed_set) spec.seed = args.seed;
            if (args.reps > 0) spec.reps = args.reps;
            if (args.n > 0) spec.model.n = args.n;
            spec.threads = args.threads;
            spec.validate();
            if (i == 0)
                run_null_distribution(spec);
            else if (i == 1)
                run_error_table(spec);
            else
                run_select_k_table(spec);
            std::cout << "wrote " << spec.out << " and " << spec.out << ".meta.json\n";
            return 0;
        }

        if (*real) {
            RealDataOptions options;
            if (!real_labels.empty()) options.labels_path = real_labels;
            options.k0 = real_k0;
            options.alpha = real_alpha;
            options.bootstrap = !real_plain;
            options.bootstrap_m = real_m;
            options.seed = real_seed;
            options.scan = real_scan;
            options.scan_alpha = real_scan_alpha;
            options.k_max = real_kmax;
            options.threads = real_threads;
            const RealDataReport report = run_real_data(real_path, options);
            std::cout << "component: " << report.component_nodes << " of "
                      << report.total_nodes << " nodes, " << report.component_edges
                      << " edges\n";
            print_test_summary(report.test);
            if (report.scan) std::cout << "k_hat=" << report.scan->k_hat << '\n';
            emit_report(report.to_json(), real_json);
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
