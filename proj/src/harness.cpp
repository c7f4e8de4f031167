#include "sbmtest/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "sbmtest/parallel.hpp"
#include "sbmtest/serialize.hpp"
#include "sbmtest/tw1.hpp"

namespace sbmtest {

const char* const kArtifactVersion = "1.0.0";

using nlohmann::json;

// ---------------------------------------------------------------------------
// formatting and file plumbing

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t file_fnv1a64(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for hashing");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fnv1a64(buffer.str());
}

namespace {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string strip_csv_suffix(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return path.substr(0, path.size() - 4);
    return path;
}

void write_sidecar(const ExperimentSpec& spec) {
    json meta;
    meta["artifact_version"] = kArtifactVersion;
    meta["kind"] = spec.kind;
    meta["master_seed"] = spec.seed;
    meta["spec"] = spec.to_json();
    meta["timestamp"] = timestamp_utc();
    meta["tw1_table_checksum"] = Tw1Distribution::bundled().checksum_hex();
    write_text_file(spec.out + ".meta.json", meta.dump(2) + "\n");
}

}  // namespace

// ---------------------------------------------------------------------------
// model specification

BlockMatrix ModelSpec::block_matrix() const {
    const int given = (b ? 1 : 0) + (r ? 1 : 0) + (p_diag || p_off ? 1 : 0);
    if (given != 1)
        throw ParamError("model: give exactly one of b, r, or p_diag/p_off");
    if (b) {
        if (b->rows() != k || b->cols() != k)
            throw ParamError("model: explicit B has wrong shape");
        return BlockMatrix(*b);
    }
    if (r) return BlockMatrix::two_level(k, 3.0 * *r, *r);
    if (!p_diag || !p_off) throw ParamError("model: p_diag and p_off go together");
    return BlockMatrix::two_level(k, *p_diag, *p_off);
}

void ModelSpec::validate() const {
    if (kind != "sbm" && kind != "dcbm" && kind != "mmbm")
        throw ParamError("model: unknown kind '" + kind + "'");
    if (n < 1) throw ParamError("model: n must be positive");
    if (k < 1) throw ParamError("model: K must be positive");
    if (membership != "iid" && membership != "balanced")
        throw ParamError("model: membership must be 'iid' or 'balanced'");
    if (psi_dist != "uniform01" && psi_dist != "ones")
        throw ParamError("model: psi_dist must be 'uniform01' or 'ones'");
    if (!(dirichlet_alpha > 0.0)) throw ParamError("model: alpha must be positive");
    block_matrix();  // validates the pattern
}

ModelSpec ModelSpec::from_json(const json& j) {
    ModelSpec m;
    m.kind = j.value("model", "sbm");
    m.n = j.value("n", 0);
    m.k = j.value("K", j.value("k", 1));
    if (j.contains("B")) {
        const auto& rows = j.at("B");
        const int k = static_cast<int>(rows.size());
        Eigen::MatrixXd mat(k, k);
        for (int a = 0; a < k; ++a)
            for (int c = 0; c < k; ++c) mat(a, c) = rows.at(a).at(c).get<double>();
        m.b = mat;
    }
    if (j.contains("r")) m.r = j.at("r").get<double>();
    if (j.contains("p_diag")) m.p_diag = j.at("p_diag").get<double>();
    if (j.contains("p_off")) m.p_off = j.at("p_off").get<double>();
    if (j.contains("membership")) m.membership = j.at("membership").get<std::string>();
    if (j.contains("psi_dist")) m.psi_dist = j.at("psi_dist").get<std::string>();
    if (j.contains("alpha")) m.dirichlet_alpha = j.at("alpha").get<double>();
    m.validate();
    return m;
}

json ModelSpec::to_json() const {
    json j;
    j["model"] = kind;
    j["n"] = n;
    j["K"] = k;
    if (b) {
        json rows = json::array();
        for (int a = 0; a < k; ++a) {
            json row = json::array();
            for (int c = 0; c < k; ++c) row.push_back((*b)(a, c));
            rows.push_back(row);
        }
        j["B"] = rows;
    }
    if (r) j["r"] = *r;
    if (p_diag) j["p_diag"] = *p_diag;
    if (p_off) j["p_off"] = *p_off;
    j["membership"] = membership;
    if (kind == "dcbm") j["psi_dist"] = psi_dist;
    if (kind == "mmbm") j["alpha"] = dirichlet_alpha;
    return j;
}

GeneratedInstance generate_instance(const ModelSpec& model, SeededRng& rng) {
    model.validate();
    const BlockMatrix blocks = model.block_matrix();
    GeneratedInstance out;
    // draw order: membership, model latents, pair sweep
    out.membership = model.membership == "iid" ? random_membership(model.n, model.k, rng)
                                               : balanced_membership(model.n, model.k);
    if (model.kind == "sbm") {
        out.graph = generate_sbm(out.membership, blocks, rng);
    } else if (model.kind == "dcbm") {
        DcbmParams params;
        params.membership = out.membership;
        params.blocks = blocks;
        params.activeness.resize(model.n, 1.0);
        if (model.psi_dist == "uniform01")
            for (auto& psi : params.activeness) psi = rng.uniform();
        out.graph = generate_dcbm(params, rng);
    } else {
        MmbmParams params;
        params.blocks = blocks;
        params.mixing = sample_dirichlet_rows(model.n, model.k, model.dirichlet_alpha, rng);
        out.graph = generate_mmbm(params, rng);
    }
    return out;
}

// ---------------------------------------------------------------------------
// experiment specification

void ExperimentSpec::validate() const {
    static const char* kinds[] = {"null-dist", "error-table", "select-k", "single-test",
                                  "estimate-k"};
    if (std::find_if(std::begin(kinds), std::end(kinds), [&](const char* k) {
            return kind == k;
        }) == std::end(kinds))
        throw ParamError("experiment: unknown kind '" + kind + "'");
    if (reps < 1) throw ParamError("experiment: reps must be at least 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ParamError("experiment: alpha not in (0,1)");
    if (bootstrap_m < 2) throw ParamError("experiment: bootstrap M must be at least 2");
    if (kind == "error-table") {
        if (columns.empty()) throw ParamError("experiment: empty column list");
        for (const auto& c : columns)
            if (c != "null" && c != "finer_sbm" && c != "dcbm" && c != "mmbm")
                throw ParamError("experiment: unknown error-table column '" + c + "'");
    }
    if (kind == "select-k") {
        if (design != "r-sweep" && design != "random-b")
            throw ParamError("experiment: design must be 'r-sweep' or 'random-b'");
        if (!(select_alpha > 0.0 && select_alpha < 1.0))
            throw ParamError("experiment: select_alpha not in (0,1)");
        if (r_list.empty() || k_list.empty() || n_list.empty())
            throw ParamError("experiment: empty sweep list");
        if (!(b_low >= 0.0 && b_high <= 1.0 && b_low < b_high))
            throw ParamError("experiment: invalid random-B range");
    } else {
        model.validate();
    }
    if (out.empty()) throw ParamError("experiment: missing output path");
}

ExperimentSpec ExperimentSpec::from_json(const json& j) {
    ExperimentSpec s;
    s.kind = j.value("kind", "");
    if (j.contains("model")) s.model = ModelSpec::from_json(j.at("model"));
    s.reps = j.value("reps", s.reps);
    s.seed = j.value("seed", s.seed);
    s.out = j.value("out", s.out);
    s.threads = j.value("threads", s.threads);
    if (j.contains("k0_list")) s.k0_list = j.at("k0_list").get<std::vector<int>>();
    if (j.contains("columns")) s.columns = j.at("columns").get<std::vector<std::string>>();
    s.alpha = j.value("alpha", s.alpha);
    s.with_plain = j.value("with_plain", s.with_plain);
    s.with_bootstrap = j.value("with_bootstrap", s.with_bootstrap);
    s.bootstrap_m = j.value("bootstrap_m", s.bootstrap_m);
    s.select_alpha = j.value("select_alpha", s.select_alpha);
    s.k_max = j.value("k_max", s.k_max);
    s.design = j.value("design", s.design);
    if (j.contains("r_list")) s.r_list = j.at("r_list").get<std::vector<double>>();
    if (j.contains("k_list")) s.k_list = j.at("k_list").get<std::vector<int>>();
    if (j.contains("n_list")) s.n_list = j.at("n_list").get<std::vector<int>>();
    s.b_low = j.value("b_low", s.b_low);
    s.b_high = j.value("b_high", s.b_high);
    s.sigma_min = j.value("sigma_min", s.sigma_min);
    s.resample_cap = j.value("resample_cap", s.resample_cap);
    s.validate();
    return s;
}

json ExperimentSpec::to_json() const {
    json j;
    j["kind"] = kind;
    j["reps"] = reps;
    j["seed"] = seed;
    j["out"] = out;
    j["alpha"] = alpha;
    j["with_plain"] = with_plain;
    j["with_bootstrap"] = with_bootstrap;
    j["bootstrap_m"] = bootstrap_m;
    if (kind == "select-k") {
        j["design"] = design;
        j["select_alpha"] = select_alpha;
        j["k_max"] = k_max;
        j["k_list"] = k_list;
        if (design == "r-sweep") {
            j["r_list"] = r_list;
            j["model"] = model.to_json();
        } else {
            j["n_list"] = n_list;
            j["b_low"] = b_low;
            j["b_high"] = b_high;
            j["sigma_min"] = sigma_min;
            j["resample_cap"] = resample_cap;
        }
    } else {
        j["model"] = model.to_json();
        if (kind == "error-table") {
            j["k0_list"] = k0_list;
            j["columns"] = columns;
        }
    }
    return j;
}

ExperimentSpec ExperimentSpec::preset(const std::string& kind, const std::string& scale) {
    if (scale != "paper" && scale != "smoke")
        throw ParamError("preset: scale must be 'paper' or 'smoke'");
    const bool paper = scale == "paper";
    ExperimentSpec s;
    s.kind = kind;
    if (kind == "null-dist") {
        s.model.kind = "sbm";
        s.model.k = 2;
        s.model.membership = "balanced";
        s.model.p_diag = 0.7;
        s.model.p_off = 0.3;
        s.model.n = 200;
        s.reps = paper ? 1000 : 100;
        s.k0_list = {2};
        s.out = "null_dist.csv";
    } else if (kind == "error-table") {
        s.model.kind = "sbm";
        s.model.membership = "iid";
        s.model.p_diag = 0.6;
        s.model.p_off = 0.2;
        s.model.n = paper ? 1000 : 500;
        s.reps = paper ? 200 : 50;
        s.k0_list = {2, 3, 4};
        if (!paper) s.columns = {"null"};  // the smoke gate checks the level only
        s.out = "error_table.csv";
    } else if (kind == "select-k") {
        s.design = "r-sweep";
        s.model.kind = "sbm";
        s.model.membership = "balanced";
        s.model.r = 0.1;
        s.model.n = paper ? 1000 : 500;
        s.model.k = 2;
        s.reps = paper ? 200 : 20;
        if (!paper) {
            s.r_list = {0.1};
            s.k_list = {2, 3};
            s.with_plain = false;
        }
        s.out = "select_k.csv";
    } else {
        throw ParamError("preset: no preset for kind '" + kind + "'");
    }
    return s;
}

// ---------------------------------------------------------------------------
// experiments

namespace {

GofOptions worker_gof_options() {
    GofOptions opts;
    opts.threads = 1;  // replicates are the parallel unit
    return opts;
}

}  // namespace

void run_null_distribution(const ExperimentSpec& spec) {
    if (spec.kind != "null-dist") throw ParamError("run_null_distribution: wrong kind");
    spec.validate();
    const int reps = spec.reps;
    const double scale = std::pow(static_cast<double>(spec.model.n), 2.0 / 3.0);

    struct Row {
        double lam1 = 0.0, lamn = 0.0, boot1 = 0.0, bootn = 0.0;
    };
    std::vector<Row> rows(reps);
    const SeededRng root = SeededRng(spec.seed).derive(stream::kReplicate);
    parallel_for(reps, spec.threads, [&](int rep) {
        SeededRng rng = root.derive(static_cast<std::uint64_t>(rep));
        GeneratedInstance instance = generate_instance(spec.model, rng);
        const auto result =
            bootstrap_corrected_test(instance.graph, spec.model.k, spec.alpha,
                                     spec.bootstrap_m, std::nullopt, rng,
                                     worker_gof_options());
        rows[rep].lam1 = scale * (result.lambda_1 - 2.0);
        rows[rep].lamn = scale * (-result.lambda_n - 2.0);
        rows[rep].boot1 = result.bootstrap->corrected_lambda_1;
        rows[rep].bootn = result.bootstrap->corrected_lambda_n;
    });

    std::ostringstream csv;
    csv << "seed,lambda1_scaled,lambdan_scaled,boot_lambda1,boot_lambdan\n";
    for (int rep = 0; rep < reps; ++rep)
        csv << rep << ',' << format_double(rows[rep].lam1) << ','
            << format_double(rows[rep].lamn) << ',' << format_double(rows[rep].boot1)
            << ',' << format_double(rows[rep].bootn) << '\n';
    write_text_file(spec.out, csv.str());

    const std::string stem = strip_csv_suffix(spec.out);
    const char* names[4] = {"lambda1_scaled", "lambdan_scaled", "boot_lambda1",
                            "boot_lambdan"};
    for (int c = 0; c < 4 && reps >= 2; ++c) {  // a KDE needs two samples
        std::vector<double> column(reps);
        for (int rep = 0; rep < reps; ++rep)
            column[rep] = c == 0   ? rows[rep].lam1
                          : c == 1 ? rows[rep].lamn
                          : c == 2 ? rows[rep].boot1
                                   : rows[rep].bootn;
        std::ostringstream dat;
        for (const auto& [x, density] : gaussian_kde(column))
            dat << format_double(x) << ' ' << format_double(density) << '\n';
        write_text_file(stem + "." + names[c] + ".density.dat", dat.str());
    }
    write_sidecar(spec);
}

void run_error_table(const ExperimentSpec& spec) {
    if (spec.kind != "error-table") throw ParamError("run_error_table: wrong kind");
    spec.validate();
    std::vector<std::string> modes;
    if (spec.with_plain) modes.push_back("plain");
    if (spec.with_bootstrap) modes.push_back("bootstrap");
    if (modes.empty()) throw ParamError("error-table: both modes disabled");
    static const char* kAllColumns[4] = {"null", "finer_sbm", "dcbm", "mmbm"};
    std::vector<int> columns;
    for (int c = 0; c < 4; ++c)
        if (std::find(spec.columns.begin(), spec.columns.end(), kAllColumns[c]) !=
            spec.columns.end())
            columns.push_back(c);

    std::ostringstream csv;
    csv << "mode,k0";
    for (int c : columns) csv << ',' << kAllColumns[c];
    csv << '\n';
    const SeededRng master(spec.seed);
    int cell_index = 0;
    for (const auto& mode : modes) {
        for (int k0 : spec.k0_list) {
            std::vector<double> proportions;
            for (int column : columns) {
                ModelSpec model = spec.model;
                model.k = column == 1 ? k0 + 1 : k0;
                model.kind = column == 2 ? "dcbm" : column == 3 ? "mmbm" : "sbm";
                const SeededRng cell = master.derive(static_cast<std::uint64_t>(cell_index));
                ++cell_index;
                std::vector<char> rejected(spec.reps, 0);
                parallel_for(spec.reps, spec.threads, [&](int rep) {
                    SeededRng rng = cell.derive(static_cast<std::uint64_t>(rep));
                    GeneratedInstance instance = generate_instance(model, rng);
                    const auto result =
                        mode == "plain"
                            ? gof_test(instance.graph, k0, spec.alpha, std::nullopt, rng,
                                       worker_gof_options())
                            : bootstrap_corrected_test(instance.graph, k0, spec.alpha,
                                                       spec.bootstrap_m, std::nullopt, rng,
                                                       worker_gof_options());
                    rejected[rep] = result.reject ? 1 : 0;
                });
                int count = 0;
                for (char r : rejected) count += r;
                proportions.push_back(static_cast<double>(count) / spec.reps);
            }
            csv << mode << ',' << k0;
            for (double p : proportions) csv << ',' << format_double(p);
            csv << '\n';
        }
    }
    write_text_file(spec.out, csv.str());
    write_sidecar(spec);
}

namespace {

// random-B design draw: diagonal and upper-diagonal entries iid uniform,
// accepted once the smallest singular value clears the floor
BlockMatrix sample_random_b(int k, double lo, double hi, double sigma_min, int cap,
                            SeededRng& rng) {
    for (int attempt = 0; attempt < cap; ++attempt) {
        Eigen::MatrixXd b(k, k);
        for (int a = 0; a < k; ++a)
            for (int c = a; c < k; ++c) {
                const double v = rng.uniform(lo, hi);
                b(a, c) = v;
                b(c, a) = v;
            }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
        if (svd.singularValues()(k - 1) >= sigma_min) return BlockMatrix(b);
    }
    throw NumericError("random-B design: no acceptable B after " + std::to_string(cap) +
                       " attempts");
}

}  // namespace

void run_select_k_table(const ExperimentSpec& spec) {
    if (spec.kind != "select-k") throw ParamError("run_select_k_table: wrong kind");
    spec.validate();
    std::vector<std::string> modes;
    if (spec.with_bootstrap) modes.push_back("bootstrap");
    if (spec.with_plain) modes.push_back("plain");
    if (modes.empty()) throw ParamError("select-k: both modes disabled");

    const SeededRng master(spec.seed);
    std::ostringstream csv;
    int cell_index = 0;

    auto run_cell = [&](int n, int k_true, std::optional<double> r_value,
                        const std::string& mode) {
        const SeededRng cell = master.derive(static_cast<std::uint64_t>(cell_index));
        ++cell_index;
        std::vector<char> correct(spec.reps, 0);
        parallel_for(spec.reps, spec.threads, [&](int rep) {
            SeededRng rng = cell.derive(static_cast<std::uint64_t>(rep));
            ModelSpec model = spec.model;
            model.kind = "sbm";
            model.n = n;
            model.k = k_true;
            model.b.reset();
            model.r.reset();
            model.p_diag.reset();
            model.p_off.reset();
            if (r_value) {
                model.r = *r_value;
                model.membership = "balanced";  // the r-sweep design
            } else {
                const BlockMatrix b = sample_random_b(
                    k_true, spec.b_low, spec.b_high, spec.sigma_min, spec.resample_cap, rng);
                model.b = b.probs;
                model.membership = "iid";
            }
            GeneratedInstance instance = generate_instance(model, rng);
            KEstimateOptions options;
            options.bootstrap = mode == "bootstrap";
            options.m = spec.bootstrap_m;
            options.k_max = spec.k_max;
            options.gof = worker_gof_options();
            const auto result =
                estimate_k(instance.graph, KSelectMode::quantile(spec.select_alpha),
                           options, rng);
            correct[rep] = result.k_hat == k_true ? 1 : 0;
        });
        int count = 0;
        for (char c : correct) count += c;
        return static_cast<double>(count) / spec.reps;
    };

    if (spec.design == "r-sweep") {
        csv << "k";
        for (const auto& mode : modes)
            for (double r : spec.r_list) csv << ',' << mode << "_r" << format_double(r);
        csv << '\n';
        for (int k_true : spec.k_list) {
            csv << k_true;
            for (const auto& mode : modes)
                for (double r : spec.r_list)
                    csv << ',' << format_double(run_cell(spec.model.n, k_true, r, mode));
            csv << '\n';
        }
    } else {
        csv << "n";
        for (const auto& mode : modes)
            for (int k_true : spec.k_list) csv << ',' << mode << "_k" << k_true;
        csv << '\n';
        for (int n : spec.n_list) {
            csv << n;
            for (const auto& mode : modes)
                for (int k_true : spec.k_list)
                    csv << ','
                        << format_double(run_cell(n, k_true, std::nullopt, mode));
            csv << '\n';
        }
    }
    write_text_file(spec.out, csv.str());
    write_sidecar(spec);
}

// ---------------------------------------------------------------------------
// real data

namespace {

std::vector<std::string> read_label_tokens(const std::string& path) {
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
    return tokens;
}

}  // namespace

RealDataReport run_real_data(const std::string& edge_path, const RealDataOptions& options) {
    const LoadedGraph loaded = read_edge_list(edge_path);
    const ComponentResult component = largest_connected_component(loaded.graph);

    RealDataReport report;
    report.total_nodes = loaded.graph.size();
    report.component_nodes = component.graph.size();
    report.component_edges = component.graph.edge_count();

    std::optional<Membership> ghat;
    if (options.labels_path) {
        const auto tokens = read_label_tokens(*options.labels_path);
        std::vector<std::string> component_tokens;
        if (static_cast<int>(tokens.size()) == component.graph.size()) {
            component_tokens = tokens;
        } else if (static_cast<int>(tokens.size()) == loaded.graph.size()) {
            component_tokens.reserve(component.graph.size());
            for (int v : component.index_map) component_tokens.push_back(tokens[v]);
        } else {
            throw ParamError("labels file '" + *options.labels_path + "' has " +
                             std::to_string(tokens.size()) +
                             " labels; the component has " +
                             std::to_string(component.graph.size()) +
                             " nodes (the full graph has " +
                             std::to_string(loaded.graph.size()) + ")");
        }
        Membership m;
        m.k = options.k0;
        m.labels.reserve(component_tokens.size());
        std::vector<std::string> seen;
        for (const auto& token : component_tokens) {
            auto it = std::find(seen.begin(), seen.end(), token);
            if (it == seen.end()) {
                seen.push_back(token);
                it = std::prev(seen.end());
            }
            m.labels.push_back(static_cast<int>(it - seen.begin()) + 1);
        }
        if (static_cast<int>(seen.size()) != options.k0)
            throw ParamError("labels file has " + std::to_string(seen.size()) +
                             " distinct labels but k0 = " + std::to_string(options.k0));
        ghat = std::move(m);
    }

    const SeededRng rng(options.seed);
    GofOptions gof_options;
    gof_options.threads = options.threads;
    gof_options.clamp_eps = options.clamp_eps;
    report.test = options.bootstrap
                      ? bootstrap_corrected_test(component.graph, options.k0, options.alpha,
                                                 options.bootstrap_m, ghat, rng, gof_options)
                      : gof_test(component.graph, options.k0, options.alpha, ghat, rng,
                                 gof_options);

    if (options.scan) {
        KEstimateOptions scan_options;
        scan_options.bootstrap = options.bootstrap;
        scan_options.m = options.bootstrap_m;
        scan_options.k_max = options.k_max;
        scan_options.gof = gof_options;
        report.scan = estimate_k(component.graph, KSelectMode::quantile(options.scan_alpha),
                                 scan_options, rng);
        // the partition the accepted stage used: replay its clustering stream
        const SeededRng stage_rng = rng.derive(stream::kSelectStage)
                                        .derive(static_cast<std::uint64_t>(report.scan->k_hat));
        const Membership partition = spectral_clustering(
            component.graph, report.scan->k_hat, stage_rng.derive(stream::kClustering),
            gof_options.kmeans);
        report.scan_partition = partition.labels;
    }
    return report;
}

json RealDataReport::to_json() const {
    json j;
    j["total_nodes"] = total_nodes;
    j["component_nodes"] = component_nodes;
    j["component_edges"] = component_edges;
    j["test"] = sbmtest::to_json(test);
    if (scan) {
        j["scan"] = sbmtest::to_json(*scan);
        j["scan_partition"] = scan_partition;
    }
    return j;
}

// ---------------------------------------------------------------------------
// density estimate

std::vector<std::pair<double, double>> gaussian_kde(const std::vector<double>& samples,
                                                    int grid_points) {
    if (samples.size() < 2) throw ParamError("gaussian_kde: need at least two samples");
    if (grid_points < 2) throw ParamError("gaussian_kde: need at least two grid points");
    const std::size_t n = samples.size();
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : samples) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / (n - 1.0));

    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&](double p) {
        const double pos = p * (n - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const double frac = pos - lo;
        return lo + 1 < n ? sorted[lo] * (1 - frac) + sorted[lo + 1] * frac : sorted[lo];
    };
    const double iqr = quantile(0.75) - quantile(0.25);
    // Silverman's rule of thumb
    double spread = std::min(sd, iqr / 1.34);
    if (spread <= 0.0) spread = std::max(sd, 1e-12);
    const double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);

    const double lo = sorted.front() - 3.0 * h;
    const double hi = sorted.back() + 3.0 * h;
    std::vector<std::pair<double, double>> out(grid_points);
    const double inv = 1.0 / (n * h * std::sqrt(2.0 * 3.14159265358979323846));
    for (int g = 0; g < grid_points; ++g) {
        const double x = lo + (hi - lo) * g / (grid_points - 1);
        double density = 0.0;
        for (double v : samples) {
            const double z = (x - v) / h;
            density += std::exp(-0.5 * z * z);
        }
        out[g] = {x, density * inv};
    }
    return out;
}

// ---------------------------------------------------------------------------
// serialization

json to_json(const GofTestResult& result) {
    json j;
    j["k0"] = result.k0;
    j["mode"] = result.mode;
    j["statistic"] = result.statistic;
    j["lambda_1"] = result.lambda_1;
    j["lambda_n"] = result.lambda_n;
    j["threshold"] = result.threshold;
    j["alpha"] = result.alpha;
    j["reject"] = result.reject;
    j["p_value_bound"] = result.p_value_bound;
    j["clamp_count"] = result.clamp_count;
    j["degenerate_clusters"] = result.degenerate_clusters;
    if (result.bootstrap) {
        j["bootstrap"] = {{"m", result.bootstrap->m},
                          {"mu_1", result.bootstrap->mu_1},
                          {"s_1", result.bootstrap->s_1},
                          {"mu_n", result.bootstrap->mu_n},
                          {"s_n", result.bootstrap->s_n},
                          {"corrected_lambda_1", result.bootstrap->corrected_lambda_1},
                          {"corrected_lambda_n", result.bootstrap->corrected_lambda_n}};
    }
    return j;
}

json to_json(const KEstimateResult& result) {
    json j;
    j["k_hat"] = result.k_hat;
    j["mode"] = result.mode;
    j["capped"] = result.capped;
    json trace = json::array();
    for (const auto& stage : result.trace) {
        trace.push_back({{"k0", stage.k0},
                         {"statistic", stage.statistic},
                         {"threshold", stage.threshold},
                         {"rejected", stage.rejected},
                         {"degenerate_clusters", stage.degenerate_clusters},
                         {"clamp_count", stage.clamp_count}});
    }
    j["trace"] = trace;
    return j;
}

}  // namespace sbmtest
