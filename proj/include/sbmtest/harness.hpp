#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sbmtest/gof.hpp"
#include "sbmtest/netgen.hpp"
#include "sbmtest/select.hpp"

namespace sbmtest {

extern const char* const kArtifactVersion;

/// Model description for the experiment runner and the `gen` command.
/// The block matrix comes from exactly one of: an explicit matrix `b`,
/// the sparsity pattern `r` (off-diagonal r, diagonal 3r), or the
/// `p_diag`/`p_off` pattern.
struct ModelSpec {
    std::string kind = "sbm";  // sbm | dcbm | mmbm
    int n = 0;
    int k = 1;
    std::optional<Eigen::MatrixXd> b;
    std::optional<double> r;
    std::optional<double> p_diag;
    std::optional<double> p_off;
    std::string membership = "iid";     // iid | balanced
    std::string psi_dist = "uniform01"; // dcbm: uniform01 | ones
    double dirichlet_alpha = 0.5;       // mmbm mixing concentration

    BlockMatrix block_matrix() const;
    void validate() const;
    static ModelSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct GeneratedInstance {
    Membership membership;
    AdjacencyGraph graph;
};

/// One model draw on the given stream: membership (iid or balanced), the
/// model-specific latents (psi or mixing rows), then the pair sweep.
GeneratedInstance generate_instance(const ModelSpec& model, SeededRng& rng);

struct ExperimentSpec {
    std::string kind;  // null-dist | error-table | select-k | single-test | estimate-k
    ModelSpec model;
    int reps = 200;
    std::uint64_t seed = 1;
    std::string out = "experiment.csv";
    int threads = 0;  // workers; 0 = hardware. Never echoed into metadata.

    // test settings
    std::vector<int> k0_list = {2, 3, 4};
    /// error-table model columns to run (subset of null, finer_sbm, dcbm, mmbm)
    std::vector<std::string> columns = {"null", "finer_sbm", "dcbm", "mmbm"};
    double alpha = 0.05;
    bool with_plain = true;
    bool with_bootstrap = true;
    int bootstrap_m = 50;

    // select-k settings
    double select_alpha = 1e-4;
    int k_max = 0;
    std::string design = "r-sweep";  // r-sweep | random-b
    std::vector<double> r_list = {0.01, 0.02, 0.05, 0.1, 0.2};
    std::vector<int> k_list = {2, 3, 4, 5, 6, 7, 8};
    std::vector<int> n_list = {500, 1000};
    double b_low = 0.0;
    double b_high = 0.5;
    double sigma_min = 0.1;
    int resample_cap = 1000;

    void validate() const;
    static ExperimentSpec from_json(const nlohmann::json& j);
    /// Canonical echo written to the metadata sidecar (threads excluded so
    /// outputs are byte-identical regardless of worker count).
    nlohmann::json to_json() const;

    /// Named presets documented in the README: "paper" reproduces the
    /// published scale, "smoke" finishes in seconds to minutes.
    static ExperimentSpec preset(const std::string& kind, const std::string& scale);
};

/// Per-replicate scaled extreme eigenvalues, with and without the fused
/// bootstrap correction. Writes <out> (CSV), density curves next to it,
/// and <out>.meta.json.
void run_null_distribution(const ExperimentSpec& spec);

/// Rejection proportions for K0 x {null, finer SBM, DCBM, MMBM} x
/// {plain, bootstrap}. CSV in the wide table shape plus sidecar.
void run_error_table(const ExperimentSpec& spec);

/// Proportion of correct community-count estimates for the r-sweep or
/// random-B design. CSV plus sidecar.
void run_select_k_table(const ExperimentSpec& spec);

struct RealDataOptions {
    std::optional<std::string> labels_path;
    int k0 = 2;
    double alpha = 0.05;
    bool bootstrap = true;
    int bootstrap_m = 50;
    std::uint64_t seed = 1;
    bool scan = false;         // also run the sequential estimator
    double scan_alpha = 1e-5;
    int k_max = 0;
    int threads = 0;
    double clamp_eps = 1e-6;
};

struct RealDataReport {
    int total_nodes = 0;
    int component_nodes = 0;
    std::size_t component_edges = 0;
    GofTestResult test;
    std::optional<KEstimateResult> scan;
    std::vector<int> scan_partition;  // component-local labels when scanned
    nlohmann::json to_json() const;
};

/// Largest-connected-component workflow on an edge-list file. A labels file
/// (one token per line) may cover either the whole file's nodes or exactly
/// the component; labels become ghat in first-appearance order.
RealDataReport run_real_data(const std::string& edge_path, const RealDataOptions& options);

/// Two-column kernel density estimate (Gaussian kernel, Silverman's
/// rule-of-thumb bandwidth), for redrawing the sample densities.
std::vector<std::pair<double, double>> gaussian_kde(const std::vector<double>& samples,
                                                    int grid_points = 512);

/// "%.12g" formatting used for every floating-point field in CSV output.
std::string format_double(double v);

std::uint64_t file_fnv1a64(const std::string& path);

}  // namespace sbmtest
