#include "lanczos.hpp"

#include <algorithm>
#include <cmath>

#include "sbmtest/rng.hpp"

namespace sbmtest::detail {

namespace {

void fill_start_vector(Eigen::VectorXd& v, SeededRng& rng) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform() - 0.5;
    const double norm = v.norm();
    if (norm > 0.0) v /= norm;
}

// Last component of the unit eigenvector of the symmetric tridiagonal
// (diag, sub) for eigenvalue theta. Two rounds of inverse iteration with a
// partial-pivoting tridiagonal LU (dgttrf/dgtts2 scheme).
double tridiag_last_component(const std::vector<double>& diag,
                              const std::vector<double>& sub, double theta) {
    const int k = static_cast<int>(diag.size());
    if (k == 1) return 1.0;
    double scale = std::abs(theta);
    for (double v : diag) scale = std::max(scale, std::abs(v));
    for (double v : sub) scale = std::max(scale, std::abs(v));
    scale = std::max(scale, 1.0);
    const double pivot_floor = scale * 1e-280;

    std::vector<double> dd(k), dl(k - 1), du(k - 1), du2(std::max(k - 2, 0), 0.0);
    std::vector<char> swapped(k - 1, 0);
    for (int i = 0; i < k; ++i) dd[i] = diag[i] - theta;
    for (int i = 0; i < k - 1; ++i) dl[i] = du[i] = sub[i];

    for (int i = 0; i < k - 1; ++i) {
        if (std::abs(dd[i]) >= std::abs(dl[i])) {
            if (std::abs(dd[i]) < pivot_floor)
                dd[i] = (std::signbit(dd[i]) ? -pivot_floor : pivot_floor);
            const double fact = dl[i] / dd[i];
            dl[i] = fact;
            dd[i + 1] -= fact * du[i];
        } else {
            swapped[i] = 1;
            const double fact = dd[i] / dl[i];
            dd[i] = dl[i];
            dl[i] = fact;
            const double temp = du[i];
            du[i] = dd[i + 1];
            dd[i + 1] = temp - fact * dd[i + 1];
            if (i < k - 2) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
        }
    }
    if (std::abs(dd[k - 1]) < pivot_floor)
        dd[k - 1] = (std::signbit(dd[k - 1]) ? -pivot_floor : pivot_floor);

    Eigen::VectorXd x = Eigen::VectorXd::Constant(k, 1.0 / std::sqrt(double(k)));
    for (int round = 0; round < 2; ++round) {
        Eigen::VectorXd b = x;
        for (int i = 0; i < k - 1; ++i) {
            if (!swapped[i]) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const double temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl[i] * b[i];
            }
        }
        b[k - 1] /= dd[k - 1];
        if (k >= 2) b[k - 2] = (b[k - 2] - du[k - 2] * b[k - 1]) / dd[k - 2];
        for (int i = k - 3; i >= 0; --i)
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / dd[i];
        const double norm = b.norm();
        if (!(norm > 0.0) || !b.allFinite()) return 1.0;  // conservative bound
        x = b / norm;
    }
    return std::abs(x[k - 1]);
}

// Eigenvalues of T_k (cheap, no vectors) plus residual bounds for the
// requested positions in the descending order.
void update_ritz(LanczosState& state, const std::vector<int>& wanted_positions) {
    const int k = state.iterations;
    Eigen::VectorXd diag(k), sub(std::max(k - 1, 0));
    for (int i = 0; i < k; ++i) diag[i] = state.alpha[i];
    for (int i = 0; i + 1 < k; ++i) sub[i] = state.beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    const double edge = state.exhausted ? 0.0 : state.beta[k - 1];
    state.ritz.assign(k, RitzPair{});
    for (int i = 0; i < k; ++i) {
        const int src = k - 1 - i;  // Eigen sorts ascending; we store descending
        state.ritz[i].value = solver.eigenvalues()(src);
        state.ritz[i].index = src;
    }
    std::vector<double> d(state.alpha.begin(), state.alpha.begin() + k);
    std::vector<double> e(state.beta.begin(), state.beta.begin() + std::max(k - 1, 0));
    for (int pos : wanted_positions) {
        if (pos < 0 || pos >= k || state.ritz[pos].residual >= 0.0) continue;
        state.ritz[pos].residual =
            (edge == 0.0)
                ? 0.0
                : std::abs(edge) * tridiag_last_component(d, e, state.ritz[pos].value);
    }
}

}  // namespace

void lanczos_run(const MatVec& op, int n, int max_iterations, int check_stride,
                 const std::function<bool(const LanczosState&)>& stop,
                 const std::function<std::vector<int>(int)>& wanted, LanczosState& state) {
    max_iterations = std::min(max_iterations, n);
    state = LanczosState{};
    state.alpha.reserve(max_iterations);
    state.beta.reserve(max_iterations);
    state.basis.resize(n, max_iterations);

    SeededRng start_rng(0x53424D544C414EULL);  // fixed: solver determinism
    Eigen::VectorXd v(n);
    fill_start_vector(v, start_rng);
    Eigen::VectorXd w(n);
    double beta_prev = 0.0;

    for (int k = 0; k < max_iterations; ++k) {
        state.basis.col(k) = v;
        op(v, w);
        if (!w.allFinite()) throw NumericError("lanczos: non-finite matvec output");
        if (k > 0) w -= beta_prev * state.basis.col(k - 1);
        const double a = v.dot(w);
        state.alpha.push_back(a);
        w -= a * v;
        auto active = state.basis.leftCols(k + 1);
        // full reorthogonalization, classical Gram-Schmidt applied twice
        w -= active * (active.transpose() * w).eval();
        w -= active * (active.transpose() * w).eval();
        double b = w.norm();
        state.iterations = k + 1;

        if (b < 1e-13 * std::max(1.0, std::abs(a))) {
            // invariant subspace reached
            if (k + 1 >= max_iterations) {
                state.exhausted = (k + 1 >= n);
                state.beta.push_back(0.0);
                update_ritz(state, wanted(k + 1));
                return;
            }
            Eigen::VectorXd fresh(n);
            double norm = 0.0;
            for (int attempt = 0; attempt < 16; ++attempt) {
                fill_start_vector(fresh, start_rng);
                fresh -= active * (active.transpose() * fresh).eval();
                fresh -= active * (active.transpose() * fresh).eval();
                norm = fresh.norm();
                if (norm > 1e-8) break;
            }
            if (norm <= 1e-8) {
                state.exhausted = (k + 1 >= n);
                state.beta.push_back(0.0);
                update_ritz(state, wanted(k + 1));
                return;
            }
            state.beta.push_back(0.0);  // exact decoupling of the new block
            v = fresh / norm;
            beta_prev = 0.0;
            update_ritz(state, wanted(k + 1));
            if (stop(state)) return;
            continue;
        }

        state.beta.push_back(b);
        v = w / b;
        beta_prev = b;

        if ((k + 1) % check_stride == 0 || k + 1 == max_iterations) {
            update_ritz(state, wanted(k + 1));
            if (stop(state)) return;
        }
    }
}

Eigen::MatrixXd lanczos_ritz_vectors(const LanczosState& state,
                                     const std::vector<int>& positions) {
    const int k = state.iterations;
    Eigen::VectorXd diag(k), sub(std::max(k - 1, 0));
    for (int i = 0; i < k; ++i) diag[i] = state.alpha[i];
    for (int i = 0; i + 1 < k; ++i) sub[i] = state.beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

    Eigen::MatrixXd raw(state.basis.rows(), static_cast<Eigen::Index>(positions.size()));
    const auto basis = state.basis.leftCols(k);
    for (std::size_t c = 0; c < positions.size(); ++c) {
        const int src = k - 1 - positions[c];
        raw.col(static_cast<Eigen::Index>(c)) = basis * solver.eigenvectors().col(src);
    }
    return raw;
}

ExtremeOutcome lanczos_extremes(const MatVec& op, int n, double tol, int max_iterations) {
    ExtremeOutcome out;
    if (n == 1) {
        Eigen::VectorXd e = Eigen::VectorXd::Ones(1);
        Eigen::VectorXd y(1);
        op(e, y);
        out.converged = true;
        out.lambda_hi = out.lambda_lo = y[0];
        out.iterations = 1;
        return out;
    }

    auto wanted = [](int k) { return std::vector<int>{0, k - 1}; };
    auto converged = [&](const LanczosState& state) {
        if (state.ritz.size() < 2) return false;
        const double radius =
            std::max(std::abs(state.ritz.front().value), std::abs(state.ritz.back().value));
        const double limit = tol * std::max(1.0, radius);
        const double r_hi = state.ritz.front().residual;
        const double r_lo = state.ritz.back().residual;
        return r_hi >= 0.0 && r_lo >= 0.0 && r_hi <= limit && r_lo <= limit;
    };
    auto stop = [&](const LanczosState& state) {
        return state.exhausted || converged(state);
    };

    LanczosState state;
    lanczos_run(op, n, max_iterations, 8, stop, wanted, state);
    out.iterations = state.iterations;
    if (state.ritz.empty()) return out;
    out.lambda_hi = state.ritz.front().value;
    out.lambda_lo = state.ritz.back().value;
    out.converged = state.exhausted || converged(state);
    return out;
}

SubspaceOutcome lanczos_leading_by_modulus(const MatVec& op, int n, int k0, double tol,
                                           int max_iterations) {
    SubspaceOutcome out;

    auto by_modulus = [](const std::vector<RitzPair>& ritz, int count) {
        std::vector<int> order(ritz.size());
        for (std::size_t i = 0; i < ritz.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(ritz[a].value) > std::abs(ritz[b].value);
        });
        order.resize(std::min(order.size(), static_cast<std::size_t>(count)));
        return order;
    };

    // By-modulus candidates always sit at the two ends of the descending
    // value order, so only those residuals are needed.
    const int margin = k0 + 1;
    auto wanted = [&](int k) {
        std::vector<int> pos;
        for (int i = 0; i < std::min(margin, k); ++i) pos.push_back(i);
        for (int i = std::max(0, k - margin); i < k; ++i) pos.push_back(i);
        return pos;
    };
    auto converged = [&](const LanczosState& state) {
        const int k = static_cast<int>(state.ritz.size());
        const int need = std::min(n, k0 + 1);
        if (k < need) return false;
        const double radius =
            std::max(std::abs(state.ritz.front().value), std::abs(state.ritz.back().value));
        const double limit = tol * std::max(1.0, radius);
        for (int idx : by_modulus(state.ritz, need)) {
            const double r = state.ritz[idx].residual;
            if (r < 0.0 || r > limit) return false;
        }
        return true;
    };
    auto stop = [&](const LanczosState& state) {
        return state.exhausted || converged(state);
    };

    LanczosState state;
    lanczos_run(op, n, max_iterations, 8, stop, wanted, state);
    out.iterations = state.iterations;
    if (static_cast<int>(state.ritz.size()) < k0) return out;
    out.converged = state.exhausted || converged(state);
    if (!out.converged) return out;

    std::vector<int> selected = by_modulus(state.ritz, k0);
    out.values.reserve(selected.size());
    for (int idx : selected) out.values.push_back(state.ritz[idx].value);
    Eigen::MatrixXd raw = lanczos_ritz_vectors(state, selected);
    // Ritz vectors are near-orthonormal already; QR cleans up the remainder.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
    out.vectors =
        qr.householderQ() *
        Eigen::MatrixXd::Identity(raw.rows(), static_cast<Eigen::Index>(selected.size()));
    return out;
}

}  // namespace sbmtest::detail
