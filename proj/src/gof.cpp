#include "sbmtest/gof.hpp"

#include <algorithm>
#include <cmath>

#include "sbmtest/netgen.hpp"
#include "sbmtest/parallel.hpp"
#include "sbmtest/tw1.hpp"

namespace sbmtest {

namespace {

void check_dimensions(const AdjacencyGraph& graph, const Membership& ghat) {
    if (ghat.size() != graph.size())
        throw ParamError("gof: membership length " + std::to_string(ghat.size()) +
                         " != node count " + std::to_string(graph.size()));
}

BlockMatrix clamp_blocks(const BlockMatrix& bhat, double eps, int* clamp_count) {
    BlockMatrix clamped = bhat;
    int count = 0;
    for (int a = 0; a < bhat.k; ++a) {
        for (int b = a; b < bhat.k; ++b) {
            const double p = bhat(a, b);
            const double c = std::clamp(p, eps, 1.0 - eps);
            if (c != p) ++count;
            clamped.probs(a, b) = c;
            clamped.probs(b, a) = c;
        }
    }
    if (clamp_count) *clamp_count = count;
    return clamped;
}

// Residual matvec without materializing the n x n matrix:
//   R = (A o W) - U + diag(u_gg), with W, U block-constant lookups.
struct ResidualOp {
    int n = 0;
    int k = 0;
    AdjacencyCsr csr;
    std::vector<double> edge_scale;  // w[g_i][g_j] per stored edge
    std::vector<int> labels0;
    Eigen::MatrixXd w;  // 1 / sqrt((n-1) p (1-p))
    Eigen::MatrixXd u;  // p * w

    void build(const AdjacencyGraph& graph, const Membership& ghat,
               const BlockMatrix& clamped) {
        n = graph.size();
        k = clamped.k;
        csr = AdjacencyCsr::build(graph);
        labels0.resize(n);
        for (int i = 0; i < n; ++i) labels0[i] = ghat.labels[i] - 1;
        w.resize(k, k);
        u.resize(k, k);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                const double p = clamped(a, b);
                const double variance = (n - 1) * p * (1.0 - p);
                if (!(variance > 0.0))
                    throw NumericError("residual: zero variance block entry");
                w(a, b) = 1.0 / std::sqrt(variance);
                u(a, b) = p * w(a, b);
            }
        }
        edge_scale.resize(csr.cols.size());
        for (int i = 0; i < n; ++i)
            for (int p = csr.row_start[i]; p < csr.row_start[i + 1]; ++p)
                edge_scale[p] = w(labels0[i], labels0[csr.cols[p]]);
    }

    void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
        Eigen::VectorXd cluster_sum = Eigen::VectorXd::Zero(k);
        for (int i = 0; i < n; ++i) cluster_sum[labels0[i]] += x[i];
        const Eigen::VectorXd row_corr = u * cluster_sum;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int p = csr.row_start[i]; p < csr.row_start[i + 1]; ++p)
                acc += edge_scale[p] * x[csr.cols[p]];
            const int g = labels0[i];
            y[i] = acc - row_corr[g] + u(g, g) * x[i];
        }
    }

    Eigen::MatrixXd materialize() const {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double p_u = u(labels0[i], labels0[j]);
                m(i, j) = -p_u;
            }
            for (int p = csr.row_start[i]; p < csr.row_start[i + 1]; ++p)
                m(i, csr.cols[p]) += edge_scale[p];
        }
        return m;
    }

    SymmetricOperator as_operator() const {
        SymmetricOperator op;
        op.n = n;
        op.apply = [this](const Eigen::VectorXd& x, Eigen::VectorXd& y) { apply(x, y); };
        op.materialize = [this]() { return materialize(); };
        return op;
    }
};

struct PipelineContext {
    Membership ghat;
    BlockMatrix bhat_raw;      // plug-in estimate with 0.5 fallback patches
    BlockMatrix bhat_clamped;  // used for centering and rescaling
    std::vector<int> degenerate_clusters;
    int clamp_count = 0;
    EigenExtremes observed;
};

PipelineContext run_pipeline(const AdjacencyGraph& graph, int k0,
                             const std::optional<Membership>& ghat_opt,
                             const SeededRng& rng, const GofOptions& options) {
    if (k0 < 1) throw ParamError("gof: k0 must be positive");
    if (k0 > graph.size()) throw ParamError("gof: k0 exceeds node count");
    if (!(options.clamp_eps > 0.0 && options.clamp_eps < 0.5))
        throw ParamError("gof: clamp_eps must lie in (0, 0.5)");

    PipelineContext ctx;
    if (ghat_opt) {
        ctx.ghat = *ghat_opt;
        ctx.ghat.validate();
        check_dimensions(graph, ctx.ghat);
        if (ctx.ghat.k != k0)
            throw ParamError("gof: provided membership has K=" +
                             std::to_string(ctx.ghat.k) + ", expected k0=" +
                             std::to_string(k0));
        if (!ctx.ghat.is_proper())
            throw ParamError("gof: provided membership is not proper");
    } else {
        ctx.ghat = spectral_clustering(graph, k0, rng.derive(stream::kClustering),
                                       options.kmeans);
    }

    const BlockEstimate est = estimate_block_matrix_with_fallback(graph, ctx.ghat);
    ctx.bhat_raw = est.bhat;
    ctx.degenerate_clusters = est.degenerate_clusters;
    ctx.bhat_clamped = clamp_blocks(est.bhat, options.clamp_eps, &ctx.clamp_count);

    ResidualOp op;
    op.build(graph, ctx.ghat, ctx.bhat_clamped);
    ctx.observed = operator_extreme_eigenvalues(op.as_operator(), options.eig);
    return ctx;
}

double p_value_bound(double statistic) {
    return std::min(1.0, 2.0 * (1.0 - tw1_cdf(statistic)));
}

}  // namespace

BlockMatrix estimate_block_matrix(const AdjacencyGraph& graph, const Membership& ghat) {
    const BlockEstimate est = estimate_block_matrix_with_fallback(graph, ghat);
    if (!est.degenerate_clusters.empty())
        throw DegenerateClusterError(
            "estimate_block_matrix: cluster " +
                std::to_string(est.degenerate_clusters.front()) +
                " has a single node; its diagonal block average is undefined",
            est.degenerate_clusters.front());
    return est.bhat;
}

BlockEstimate estimate_block_matrix_with_fallback(const AdjacencyGraph& graph,
                                                  const Membership& ghat) {
    ghat.validate();
    check_dimensions(graph, ghat);
    if (!ghat.is_proper())
        throw ParamError("estimate_block_matrix: membership is not proper");
    const int n = graph.size();
    const int k = ghat.k;
    const auto sizes = ghat.cluster_sizes();

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < n; ++i) {
        const int a = ghat.labels[i] - 1;
        for (int j = i + 1; j < n; ++j) {
            if (!graph(i, j)) continue;
            const int b = ghat.labels[j] - 1;
            sums(std::min(a, b), std::max(a, b)) += 1.0;
        }
    }

    BlockEstimate out;
    out.bhat.k = k;
    out.bhat.probs.resize(k, k);
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            double value;
            if (a == b) {
                if (sizes[a] < 2) {
                    out.degenerate_clusters.push_back(a + 1);
                    value = 0.5;
                } else {
                    value = sums(a, a) / (0.5 * sizes[a] * (sizes[a] - 1.0));
                }
            } else {
                value = sums(a, b) / (static_cast<double>(sizes[a]) * sizes[b]);
            }
            out.bhat.probs(a, b) = value;
            out.bhat.probs(b, a) = value;
        }
    }
    return out;
}

ResidualMatrix residual_matrix(const AdjacencyGraph& graph, const Membership& ghat,
                               const BlockMatrix& bhat, double clamp_eps) {
    ghat.validate();
    check_dimensions(graph, ghat);
    bhat.validate();
    if (ghat.k != bhat.k)
        throw ParamError("residual_matrix: membership K != block matrix K");
    if (!(clamp_eps > 0.0 && clamp_eps < 0.5))
        throw ParamError("residual_matrix: clamp_eps must lie in (0, 0.5)");

    ResidualMatrix out;
    out.n = graph.size();
    out.ghat = ghat;
    out.bhat = clamp_blocks(bhat, clamp_eps, &out.clamp_count);
    out.values = Eigen::MatrixXd::Zero(out.n, out.n);
    out.phat = Eigen::MatrixXd::Zero(out.n, out.n);
    for (int i = 0; i < out.n; ++i) {
        const int a = ghat.labels[i] - 1;
        for (int j = 0; j < out.n; ++j) {
            const int b = ghat.labels[j] - 1;
            const double p = out.bhat(a, b);
            out.phat(i, j) = p;
            if (i != j)
                out.values(i, j) =
                    (graph(i, j) - p) / std::sqrt((out.n - 1) * p * (1.0 - p));
        }
    }
    return out;
}

ResidualMatrix oracle_residual_matrix(const AdjacencyGraph& graph, const Membership& g,
                                      const BlockMatrix& blocks) {
    g.validate();
    check_dimensions(graph, g);
    blocks.validate();
    if (g.k != blocks.k)
        throw ParamError("oracle_residual_matrix: membership K != block matrix K");
    for (int a = 0; a < blocks.k; ++a)
        for (int b = 0; b < blocks.k; ++b)
            if (!(blocks(a, b) > 0.0 && blocks(a, b) < 1.0))
                throw ParamError(
                    "oracle_residual_matrix: B entries must lie strictly in (0,1)");

    ResidualMatrix out;
    out.n = graph.size();
    out.ghat = g;
    out.bhat = blocks;
    out.clamp_count = 0;
    out.values = Eigen::MatrixXd::Zero(out.n, out.n);
    out.phat = Eigen::MatrixXd::Zero(out.n, out.n);
    for (int i = 0; i < out.n; ++i) {
        const int a = g.labels[i] - 1;
        for (int j = 0; j < out.n; ++j) {
            const double p = blocks(a, g.labels[j] - 1);
            out.phat(i, j) = p;
            if (i != j)
                out.values(i, j) =
                    (graph(i, j) - p) / std::sqrt((out.n - 1) * p * (1.0 - p));
        }
    }
    return out;
}

EigenExtremes residual_extreme_eigenvalues(const AdjacencyGraph& graph,
                                           const Membership& ghat, const BlockMatrix& bhat,
                                           double clamp_eps, const ExtremeOpts& opts) {
    ghat.validate();
    check_dimensions(graph, ghat);
    BlockMatrix effective = bhat;
    if (clamp_eps > 0.0) effective = clamp_blocks(bhat, clamp_eps, nullptr);
    ResidualOp op;
    op.build(graph, ghat, effective);
    return operator_extreme_eigenvalues(op.as_operator(), opts);
}

double gof_threshold(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ParamError("gof: alpha must lie in (0,1)");
    return tw1_quantile(1.0 - alpha / 2.0);
}

double plain_statistic(int n, const EigenExtremes& extremes) {
    return std::pow(static_cast<double>(n), 2.0 / 3.0) * (extremes.sigma_1 - 2.0);
}

bool gof_decision(double statistic, double alpha) {
    return statistic >= gof_threshold(alpha);
}

double bootstrap_statistic(const EigenExtremes& observed, const BootstrapDiagnostics& diag) {
    if (!(diag.s_1 > 0.0) || !(diag.s_n > 0.0))
        throw NumericError("bootstrap_statistic: degenerate bootstrap spread");
    const auto [mu_tw, s_tw] = tw1_moments();
    const double upper = (observed.lambda_1 - diag.mu_1) / diag.s_1;
    const double lower = -(observed.lambda_n - diag.mu_n) / diag.s_n;
    return mu_tw + s_tw * std::max(upper, lower);
}

GofTestResult gof_test(const AdjacencyGraph& graph, int k0, double alpha,
                       const std::optional<Membership>& ghat, const SeededRng& rng,
                       const GofOptions& options) {
    const double threshold = gof_threshold(alpha);
    const PipelineContext ctx = run_pipeline(graph, k0, ghat, rng, options);

    GofTestResult result;
    result.k0 = k0;
    result.lambda_1 = ctx.observed.lambda_1;
    result.lambda_n = ctx.observed.lambda_n;
    result.statistic = plain_statistic(graph.size(), ctx.observed);
    result.threshold = threshold;
    result.alpha = alpha;
    result.reject = result.statistic >= threshold;
    result.mode = "plain";
    result.p_value_bound = p_value_bound(result.statistic);
    result.clamp_count = ctx.clamp_count;
    result.degenerate_clusters = ctx.degenerate_clusters;
    return result;
}

GofTestResult bootstrap_corrected_test(const AdjacencyGraph& graph, int k0, double alpha,
                                       int m, const std::optional<Membership>& ghat,
                                       const SeededRng& rng, const GofOptions& options) {
    if (m < 2) throw ParamError("bootstrap_corrected_test: m must be at least 2");
    const double threshold = gof_threshold(alpha);
    const PipelineContext ctx = run_pipeline(graph, k0, ghat, rng, options);

    // replicate graphs from (ghat, bhat), centered by the parent phat
    std::vector<double> lam1(m), lamn(m);
    const SeededRng boot_root = rng.derive(stream::kBootstrap);
    parallel_for(m, options.threads, [&](int rep) {
        SeededRng rep_rng = boot_root.derive(static_cast<std::uint64_t>(rep));
        AdjacencyGraph replica = generate_sbm(ctx.ghat, ctx.bhat_raw, rep_rng);
        ResidualOp op;
        op.build(replica, ctx.ghat, ctx.bhat_clamped);
        const EigenExtremes ext = operator_extreme_eigenvalues(op.as_operator(), options.eig);
        lam1[rep] = ext.lambda_1;
        lamn[rep] = ext.lambda_n;
    });

    BootstrapDiagnostics diag;
    diag.m = m;
    double sum1 = 0.0, sumn = 0.0;
    for (int i = 0; i < m; ++i) {
        sum1 += lam1[i];
        sumn += lamn[i];
    }
    diag.mu_1 = sum1 / m;
    diag.mu_n = sumn / m;
    double var1 = 0.0, varn = 0.0;
    for (int i = 0; i < m; ++i) {
        var1 += (lam1[i] - diag.mu_1) * (lam1[i] - diag.mu_1);
        varn += (lamn[i] - diag.mu_n) * (lamn[i] - diag.mu_n);
    }
    diag.s_1 = std::sqrt(var1 / (m - 1));  // unbiased sample variance
    diag.s_n = std::sqrt(varn / (m - 1));
    if (!(diag.s_1 > 0.0) || !(diag.s_n > 0.0))
        throw NumericError("bootstrap_corrected_test: zero bootstrap spread");
    const auto [mu_tw, s_tw] = tw1_moments();
    diag.corrected_lambda_1 =
        mu_tw + s_tw * (ctx.observed.lambda_1 - diag.mu_1) / diag.s_1;
    diag.corrected_lambda_n =
        mu_tw + s_tw * (diag.mu_n - ctx.observed.lambda_n) / diag.s_n;

    GofTestResult result;
    result.k0 = k0;
    result.lambda_1 = ctx.observed.lambda_1;
    result.lambda_n = ctx.observed.lambda_n;
    result.statistic = bootstrap_statistic(ctx.observed, diag);
    result.threshold = threshold;
    result.alpha = alpha;
    result.reject = result.statistic >= threshold;
    result.mode = "bootstrap";
    result.p_value_bound = p_value_bound(result.statistic);
    result.clamp_count = ctx.clamp_count;
    result.degenerate_clusters = ctx.degenerate_clusters;
    result.bootstrap = diag;
    return result;
}

}  // namespace sbmtest
