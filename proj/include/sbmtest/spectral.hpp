#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "sbmtest/rng.hpp"
#include "sbmtest/types.hpp"

namespace sbmtest {

/// Extreme eigenvalues of a symmetric matrix. sigma_1 is always derived
/// from the pair, never computed separately.
struct EigenExtremes {
    double lambda_1 = 0.0;  // largest eigenvalue
    double lambda_n = 0.0;  // smallest eigenvalue
    double sigma_1 = 0.0;   // max(lambda_1, -lambda_n)

    static EigenExtremes from_pair(double lambda_1, double lambda_n) {
        return {lambda_1, lambda_n, std::max(lambda_1, -lambda_n)};
    }
};

struct ExtremeOpts {
    double tol = 1e-10;       // relative to max(1, ||M||)
    int max_iterations = 400; // Lanczos budget before dense fallback
    int dense_cutoff = 64;    // below this order always solve densely
    bool force_iterative = false;
    bool force_dense = false;
};

/// Matrix-free symmetric operator: apply(x, y) computes y = M x.
struct SymmetricOperator {
    int n = 0;
    std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)> apply;
    /// Optional: materializes M for the dense fallback path. When absent
    /// and Lanczos stalls, a NumericError is raised instead.
    std::function<Eigen::MatrixXd()> materialize;
};

/// Extremes of a dense symmetric matrix (symmetrized defensively as
/// (M + M')/2). Non-finite entries raise NumericError.
EigenExtremes symmetric_extreme_eigenvalues(const Eigen::MatrixXd& m,
                                            const ExtremeOpts& opts = {});
EigenExtremes symmetric_extreme_eigenvalues(const Eigen::MatrixXd& m, double tol);

/// Extremes of a matrix-free operator (Lanczos with full
/// reorthogonalization, dense fallback through op.materialize).
EigenExtremes operator_extreme_eigenvalues(const SymmetricOperator& op,
                                           const ExtremeOpts& opts = {});

/// Orthonormal basis (n x k0) of the invariant subspace belonging to the
/// k0 largest singular values. Symmetric inputs go through the
/// eigendecomposition (singular values = |eigenvalues|); general square
/// inputs fall back to a dense SVD.
Eigen::MatrixXd leading_singular_subspace(const Eigen::MatrixXd& m, int k0);

/// Same subspace for a symmetric operator; used by spectral_clustering.
Eigen::MatrixXd leading_singular_subspace(const SymmetricOperator& op, int k0,
                                          const ExtremeOpts& opts = {});

struct KMeansOpts {
    int restarts = 20;
    int max_iter = 100;
};

struct KMeansResult {
    std::vector<int> labels;             // 0-based cluster ids, all k nonempty
    double objective = 0.0;              // within-cluster sum of squares
    std::vector<double> objective_trace; // per-iteration objective of the winner
    int best_restart = 0;
};

/// Lloyd iterations with greedy farthest-point seeding. Restart r draws its
/// first center from rng.derive(r); the remaining centers are the points
/// farthest from the chosen set (ties to the lowest index). Nearest-centroid
/// ties resolve to the lowest cluster index; an empty cluster steals the
/// point farthest from its current centroid. Winner: lowest objective, ties
/// to the lowest restart index.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, const SeededRng& rng,
                    const KMeansOpts& opts = {});

/// k-means on the rows of the k0 leading singular vectors of A.
/// Returns a proper membership with exactly k0 nonempty communities.
Membership spectral_clustering(const AdjacencyGraph& graph, int k0, const SeededRng& rng,
                               const KMeansOpts& opts = {});

/// CSR view of an adjacency matrix for matrix-free products.
struct AdjacencyCsr {
    int n = 0;
    std::vector<int> row_start;
    std::vector<int> cols;

    static AdjacencyCsr build(const AdjacencyGraph& graph);
};

SymmetricOperator adjacency_operator(const AdjacencyCsr& csr);

}  // namespace sbmtest
