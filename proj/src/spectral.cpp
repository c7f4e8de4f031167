#include "sbmtest/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lanczos.hpp"

namespace sbmtest {

namespace {

bool is_symmetric(const Eigen::MatrixXd& m, double tol) {
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

EigenExtremes dense_extremes(const Eigen::MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return EigenExtremes::from_pair(ev(ev.size() - 1), ev(0));
}

detail::MatVec dense_matvec(const Eigen::MatrixXd& sym) {
    return [&sym](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y.noalias() = sym * x; };
}

// k0 leading-by-modulus eigenvectors from a full decomposition.
Eigen::MatrixXd dense_modulus_subspace(const Eigen::MatrixXd& sym, int k0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    const int n = static_cast<int>(sym.rows());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& ev = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(ev(a)) > std::abs(ev(b));
    });
    Eigen::MatrixXd basis(n, k0);
    for (int c = 0; c < k0; ++c) basis.col(c) = solver.eigenvectors().col(order[c]);
    return basis;
}

}  // namespace

EigenExtremes symmetric_extreme_eigenvalues(const Eigen::MatrixXd& m, double tol) {
    ExtremeOpts opts;
    opts.tol = tol;
    return symmetric_extreme_eigenvalues(m, opts);
}

EigenExtremes symmetric_extreme_eigenvalues(const Eigen::MatrixXd& m,
                                            const ExtremeOpts& opts) {
    if (m.rows() != m.cols())
        throw ParamError("symmetric_extreme_eigenvalues: matrix not square");
    if (m.size() == 0) throw ParamError("symmetric_extreme_eigenvalues: empty matrix");
    if (!m.allFinite())
        throw NumericError("symmetric_extreme_eigenvalues: non-finite entries");
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    const int n = static_cast<int>(sym.rows());
    if (!opts.force_iterative && (opts.force_dense || n <= opts.dense_cutoff))
        return dense_extremes(sym);
    const auto outcome =
        detail::lanczos_extremes(dense_matvec(sym), n, opts.tol, opts.max_iterations);
    if (!outcome.converged) return dense_extremes(sym);
    return EigenExtremes::from_pair(outcome.lambda_hi, outcome.lambda_lo);
}

EigenExtremes operator_extreme_eigenvalues(const SymmetricOperator& op,
                                           const ExtremeOpts& opts) {
    if (op.n <= 0) throw ParamError("operator_extreme_eigenvalues: empty operator");
    if (!opts.force_iterative && (opts.force_dense || op.n <= opts.dense_cutoff) &&
        op.materialize)
        return dense_extremes(op.materialize());
    const auto outcome = detail::lanczos_extremes(
        [&op](const Eigen::VectorXd& x, Eigen::VectorXd& y) { op.apply(x, y); }, op.n,
        opts.tol, opts.max_iterations);
    if (outcome.converged)
        return EigenExtremes::from_pair(outcome.lambda_hi, outcome.lambda_lo);
    if (!op.materialize)
        throw NumericError(
            "operator_extreme_eigenvalues: Lanczos stalled and no dense fallback");
    return dense_extremes(op.materialize());
}

Eigen::MatrixXd leading_singular_subspace(const Eigen::MatrixXd& m, int k0) {
    if (m.rows() != m.cols()) throw ParamError("leading_singular_subspace: not square");
    const int n = static_cast<int>(m.rows());
    if (k0 < 1 || k0 > n)
        throw ParamError("leading_singular_subspace: k0 must lie in [1, n]");
    if (!m.allFinite()) throw NumericError("leading_singular_subspace: non-finite entries");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (is_symmetric(m, 1e-12 * scale)) {
        const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
        if (n <= 256 || k0 > n / 4) return dense_modulus_subspace(sym, k0);
        const auto outcome =
            detail::lanczos_leading_by_modulus(dense_matvec(sym), n, k0, 1e-10, 400);
        if (outcome.converged) return outcome.vectors;
        return dense_modulus_subspace(sym, k0);
    }
    // general square input: left singular vectors from a dense SVD
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(k0);
}

Eigen::MatrixXd leading_singular_subspace(const SymmetricOperator& op, int k0,
                                          const ExtremeOpts& opts) {
    if (op.n <= 0) throw ParamError("leading_singular_subspace: empty operator");
    if (k0 < 1 || k0 > op.n)
        throw ParamError("leading_singular_subspace: k0 must lie in [1, n]");
    const bool dense_ok = static_cast<bool>(op.materialize);
    if (dense_ok && (op.n <= opts.dense_cutoff || k0 > op.n / 4))
        return dense_modulus_subspace(op.materialize(), k0);
    const auto outcome = detail::lanczos_leading_by_modulus(
        [&op](const Eigen::VectorXd& x, Eigen::VectorXd& y) { op.apply(x, y); }, op.n, k0,
        std::max(opts.tol, 1e-10), opts.max_iterations);
    if (outcome.converged) return outcome.vectors;
    if (!dense_ok)
        throw NumericError("leading_singular_subspace: Lanczos stalled, no dense fallback");
    return dense_modulus_subspace(op.materialize(), k0);
}

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, const SeededRng& rng,
                    const KMeansOpts& opts) {
    const int n = static_cast<int>(points.rows());
    const int dim = static_cast<int>(points.cols());
    if (k < 1) throw ParamError("kmeans: k must be positive");
    if (k > n) throw ParamError("kmeans: k exceeds the number of points");
    if (opts.restarts < 1 || opts.max_iter < 1)
        throw ParamError("kmeans: restarts and max_iter must be positive");

    KMeansResult best;
    best.objective = std::numeric_limits<double>::infinity();

    std::vector<int> labels(n);
    std::vector<double> dist2(n);
    Eigen::MatrixXd centers(k, dim);
    std::vector<int> counts(k);

    for (int restart = 0; restart < opts.restarts; ++restart) {
        SeededRng restart_rng = rng.derive(static_cast<std::uint64_t>(restart));

        // greedy farthest-point seeding, random first pick
        const int first = static_cast<int>(restart_rng.below(static_cast<std::uint64_t>(n)));
        centers.row(0) = points.row(first);
        for (int i = 0; i < n; ++i)
            dist2[i] = (points.row(i) - centers.row(0)).squaredNorm();
        for (int c = 1; c < k; ++c) {
            int far = 0;
            for (int i = 1; i < n; ++i)
                if (dist2[i] > dist2[far]) far = i;
            centers.row(c) = points.row(far);
            for (int i = 0; i < n; ++i)
                dist2[i] = std::min(dist2[i],
                                    (points.row(i) - centers.row(c)).squaredNorm());
        }

        std::vector<double> trace;
        bool changed = true;
        std::fill(labels.begin(), labels.end(), -1);
        for (int iter = 0; iter < opts.max_iter && changed; ++iter) {
            changed = false;
            // assignment, ties to the lowest cluster index
            for (int i = 0; i < n; ++i) {
                int pick = 0;
                double best_d = (points.row(i) - centers.row(0)).squaredNorm();
                for (int c = 1; c < k; ++c) {
                    const double d = (points.row(i) - centers.row(c)).squaredNorm();
                    if (d < best_d) {
                        best_d = d;
                        pick = c;
                    }
                }
                if (labels[i] != pick) {
                    labels[i] = pick;
                    changed = true;
                }
            }
            // empty-cluster repair: steal the point farthest from its centroid
            std::fill(counts.begin(), counts.end(), 0);
            for (int i = 0; i < n; ++i) ++counts[labels[i]];
            for (int c = 0; c < k; ++c) {
                while (counts[c] == 0) {
                    int worst = -1;
                    double worst_d = -1.0;
                    for (int i = 0; i < n; ++i) {
                        if (counts[labels[i]] < 2) continue;
                        const double d =
                            (points.row(i) - centers.row(labels[i])).squaredNorm();
                        if (d > worst_d) {
                            worst_d = d;
                            worst = i;
                        }
                    }
                    if (worst < 0) break;  // all donors exhausted (k > distinct points)
                    --counts[labels[worst]];
                    labels[worst] = c;
                    ++counts[c];
                    centers.row(c) = points.row(worst);
                    changed = true;
                }
            }
            // update step
            centers.setZero();
            for (int i = 0; i < n; ++i) centers.row(labels[i]) += points.row(i);
            for (int c = 0; c < k; ++c)
                if (counts[c] > 0) centers.row(c) /= counts[c];
            double objective = 0.0;
            for (int i = 0; i < n; ++i)
                objective += (points.row(i) - centers.row(labels[i])).squaredNorm();
            trace.push_back(objective);
        }

        const double objective = trace.empty() ? 0.0 : trace.back();
        if (objective < best.objective) {
            best.objective = objective;
            best.labels = labels;
            best.objective_trace = std::move(trace);
            best.best_restart = restart;
        }
    }
    return best;
}

Membership spectral_clustering(const AdjacencyGraph& graph, int k0, const SeededRng& rng,
                               const KMeansOpts& opts) {
    const int n = graph.size();
    if (k0 < 1) throw ParamError("spectral_clustering: k0 must be positive");
    if (k0 > n) throw ParamError("spectral_clustering: k0 exceeds node count");

    Membership m;
    m.k = k0;
    if (k0 == 1) {
        m.labels.assign(n, 1);
        return m;
    }

    const AdjacencyCsr csr = AdjacencyCsr::build(graph);
    const Eigen::MatrixXd embedding = leading_singular_subspace(adjacency_operator(csr), k0);
    const KMeansResult km = kmeans(embedding, k0, rng, opts);
    m.labels.resize(n);
    for (int i = 0; i < n; ++i) m.labels[i] = km.labels[i] + 1;
    return m;
}

AdjacencyCsr AdjacencyCsr::build(const AdjacencyGraph& graph) {
    AdjacencyCsr csr;
    const int n = graph.size();
    csr.n = n;
    csr.row_start.assign(n + 1, 0);
    std::size_t nnz = 0;
    for (int i = 0; i < n; ++i) {
        nnz += graph.degree(i);
        csr.row_start[i + 1] = static_cast<int>(nnz);
    }
    csr.cols.resize(nnz);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (graph(i, j)) csr.cols[pos++] = j;
    return csr;
}

SymmetricOperator adjacency_operator(const AdjacencyCsr& csr) {
    SymmetricOperator op;
    op.n = csr.n;
    op.apply = [&csr](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        y.setZero();
        for (int i = 0; i < csr.n; ++i) {
            double acc = 0.0;
            for (int p = csr.row_start[i]; p < csr.row_start[i + 1]; ++p)
                acc += x[csr.cols[p]];
            y[i] = acc;
        }
    };
    op.materialize = [&csr]() {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(csr.n, csr.n);
        for (int i = 0; i < csr.n; ++i)
            for (int p = csr.row_start[i]; p < csr.row_start[i + 1]; ++p)
                m(i, csr.cols[p]) = 1.0;
        return m;
    };
    return op;
}

}  // namespace sbmtest
