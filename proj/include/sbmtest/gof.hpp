#pragma once

#include <optional>
#include <string>

#include "sbmtest/spectral.hpp"
#include "sbmtest/types.hpp"

namespace sbmtest {

/// Empirically centered and rescaled adjacency matrix with its provenance.
struct ResidualMatrix {
    int n = 0;
    Eigen::MatrixXd values;  // symmetric, zero diagonal
    Eigen::MatrixXd phat;    // clamped probability matrix actually used
    Membership ghat;
    BlockMatrix bhat;        // clamped copy matching phat
    int clamp_count = 0;     // clamped upper-triangle block cells (k <= l)
};

/// Plug-in block probability estimator: off-diagonal blocks averaged over
/// n_k * n_l ordered cross pairs, diagonal blocks over n_k (n_k - 1) / 2
/// unordered pairs. A size-one cluster raises DegenerateClusterError.
BlockMatrix estimate_block_matrix(const AdjacencyGraph& graph, const Membership& ghat);

struct BlockEstimate {
    BlockMatrix bhat;
    std::vector<int> degenerate_clusters;  // size-one clusters patched to 0.5
};

/// Pipeline variant: instead of failing, sets the undefined diagonal entry
/// to 0.5 and records which clusters were patched.
BlockEstimate estimate_block_matrix_with_fallback(const AdjacencyGraph& graph,
                                                  const Membership& ghat);

/// (A_ij - p) / sqrt((n-1) p (1-p)) with p = B[g_i][g_j] clamped into
/// [clamp_eps, 1 - clamp_eps]; zero diagonal.
ResidualMatrix residual_matrix(const AdjacencyGraph& graph, const Membership& ghat,
                               const BlockMatrix& bhat, double clamp_eps = 1e-6);

/// Residual under the true parameters; every B entry must lie strictly
/// inside (0, 1). Used for the random-matrix validation experiments.
ResidualMatrix oracle_residual_matrix(const AdjacencyGraph& graph, const Membership& g,
                                      const BlockMatrix& blocks);

struct BootstrapDiagnostics {
    int m = 0;
    double mu_1 = 0.0;
    double s_1 = 0.0;
    double mu_n = 0.0;
    double s_n = 0.0;
    double corrected_lambda_1 = 0.0;  // mu_tw + s_tw (lambda_1 - mu_1) / s_1
    double corrected_lambda_n = 0.0;  // mu_tw + s_tw (mu_n - lambda_n) / s_n
};

struct GofTestResult {
    int k0 = 0;
    double statistic = 0.0;
    double lambda_1 = 0.0;
    double lambda_n = 0.0;
    double threshold = 0.0;
    double alpha = 0.0;
    bool reject = false;
    std::string mode;  // "plain" | "bootstrap"
    double p_value_bound = 1.0;  // min(1, 2 (1 - cdf(statistic)))
    int clamp_count = 0;
    std::vector<int> degenerate_clusters;
    std::optional<BootstrapDiagnostics> bootstrap;
};

struct GofOptions {
    double clamp_eps = 1e-6;
    KMeansOpts kmeans;
    ExtremeOpts eig;
    int threads = 1;  // bootstrap replicate workers
};

/// Upper rejection threshold t(alpha/2) = quantile(1 - alpha/2) of TW1.
double gof_threshold(double alpha);

/// T = n^(2/3) (sigma_1 - 2) = max over both spectrum ends.
double plain_statistic(int n, const EigenExtremes& extremes);

/// Decision rule on a precomputed statistic: reject iff T >= t(alpha/2).
bool gof_decision(double statistic, double alpha);

/// Fused correction: mu_tw + s_tw max((l1 - mu_1)/s_1, -(ln - mu_n)/s_n).
double bootstrap_statistic(const EigenExtremes& observed, const BootstrapDiagnostics& diag);

/// Goodness-of-fit test of "K = k0". When ghat is absent the membership is
/// recovered by spectral clustering seeded from a stream derived off `rng`.
/// Pure: `rng` is only forked, never drawn from.
GofTestResult gof_test(const AdjacencyGraph& graph, int k0, double alpha,
                       const std::optional<Membership>& ghat, const SeededRng& rng,
                       const GofOptions& options = {});

/// Same test with the fused bootstrap correction: m replicate graphs are
/// drawn from (ghat, bhat), centered and rescaled by the parent phat, and
/// the observed extreme eigenvalues are standardized per side by the
/// replicate sample moments (variance denominator m - 1).
GofTestResult bootstrap_corrected_test(const AdjacencyGraph& graph, int k0, double alpha,
                                       int m, const std::optional<Membership>& ghat,
                                       const SeededRng& rng, const GofOptions& options = {});

/// Extreme eigenvalues of the residual without materializing it (CSR-based
/// matvec plus a rank-K block correction). Exposed for the harness.
EigenExtremes residual_extreme_eigenvalues(const AdjacencyGraph& graph,
                                           const Membership& ghat, const BlockMatrix& bhat,
                                           double clamp_eps, const ExtremeOpts& opts = {});

namespace stream {
// derive() tags reserved by the library; callers forking their own streams
// off an rng handed to gof/select should avoid these.
inline constexpr std::uint64_t kClustering = 0x5B00;
inline constexpr std::uint64_t kBootstrap = 0x5B01;
inline constexpr std::uint64_t kSelectStage = 0x5B02;
inline constexpr std::uint64_t kReplicate = 0x5B03;
}  // namespace stream

}  // namespace sbmtest
