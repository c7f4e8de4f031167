#pragma once

// Internal Lanczos solver with full reorthogonalization. Deterministic:
// the start vector comes from a fixed-key SeededRng, restarts (on happy
// breakdown) continue from the same stream.

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace sbmtest::detail {

using MatVec = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct RitzPair {
    double value = 0.0;
    double residual = -1.0;  // |beta_k * last eigvec component|; -1 = not computed
    int index = 0;           // column in the ascending eigen order of T_k
};

struct LanczosState {
    bool exhausted = false;  // Krylov space reached the full dimension
    int iterations = 0;
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::MatrixXd basis;        // n x k orthonormal
    std::vector<RitzPair> ritz;   // sorted by value descending
};

/// Runs Lanczos until `stop(state)` returns true or the budget is spent.
/// Ritz data refreshes every `check_stride` steps; `wanted(k)` names the
/// positions (descending order) whose residual bounds are required.
void lanczos_run(const MatVec& op, int n, int max_iterations, int check_stride,
                 const std::function<bool(const LanczosState&)>& stop,
                 const std::function<std::vector<int>(int)>& wanted, LanczosState& state);

/// Ritz vectors for the given descending-order positions (one full
/// tridiagonal eigendecomposition; call once at the end).
Eigen::MatrixXd lanczos_ritz_vectors(const LanczosState& state,
                                     const std::vector<int>& positions);

struct ExtremeOutcome {
    bool converged = false;
    double lambda_hi = 0.0;
    double lambda_lo = 0.0;
    int iterations = 0;
};

/// Both spectrum ends to |error| <= tol * max(1, spectral radius estimate).
ExtremeOutcome lanczos_extremes(const MatVec& op, int n, double tol, int max_iterations);

struct SubspaceOutcome {
    bool converged = false;
    std::vector<double> values;  // k0 values, sorted by |value| descending
    Eigen::MatrixXd vectors;     // n x k0 orthonormal
    int iterations = 0;
};

/// The k0 eigenpairs of largest modulus (both spectrum ends considered).
SubspaceOutcome lanczos_leading_by_modulus(const MatVec& op, int n, int k0, double tol,
                                           int max_iterations);

}  // namespace sbmtest::detail
