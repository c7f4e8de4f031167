#include "sbmtest/types.hpp"

#include <cmath>
#include <string>

namespace sbmtest {

AdjacencyGraph AdjacencyGraph::from_dense(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw ParamError("AdjacencyGraph: matrix not square");
    const int n = static_cast<int>(m.rows());
    AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 0.0) throw ParamError("AdjacencyGraph: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v != 0.0 && v != 1.0) throw ParamError("AdjacencyGraph: entry not 0/1");
            if (v != m(j, i)) throw ParamError("AdjacencyGraph: matrix not symmetric");
            if (v == 1.0 && i < j) g.set_edge(i, j);
        }
    }
    return g;
}

std::size_t AdjacencyGraph::edge_count() const {
    std::size_t count = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) count += (*this)(i, j);
    return count;
}

double AdjacencyGraph::density() const {
    if (n_ < 2) return 0.0;
    const double pairs = 0.5 * n_ * (n_ - 1);
    return static_cast<double>(edge_count()) / pairs;
}

int AdjacencyGraph::degree(int i) const {
    int d = 0;
    const std::uint8_t* row = entries_.data() + static_cast<std::size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) d += row[j];
    return d;
}

void AdjacencyGraph::validate() const {
    for (int i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0)
            throw ParamError("AdjacencyGraph: diagonal entry at " + std::to_string(i));
        for (int j = 0; j < n_; ++j) {
            const std::uint8_t v = (*this)(i, j);
            if (v > 1) throw ParamError("AdjacencyGraph: entry not 0/1");
            if (v != (*this)(j, i)) throw ParamError("AdjacencyGraph: not symmetric");
        }
    }
}

Eigen::MatrixXd AdjacencyGraph::to_dense() const {
    Eigen::MatrixXd m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

void Membership::validate() const {
    if (k < 1) throw ParamError("Membership: K must be at least 1");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 1 || labels[i] > k)
            throw ParamError("Membership: label out of {1.." + std::to_string(k) +
                             "} at node " + std::to_string(i));
    }
}

bool Membership::is_proper() const {
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    for (int lab : labels) {
        if (lab < 1 || lab > k) return false;
        seen[lab] = 1;
    }
    for (int c = 1; c <= k; ++c)
        if (!seen[c]) return false;
    return true;
}

std::vector<int> Membership::cluster_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int lab : labels) ++sizes[lab - 1];
    return sizes;
}

std::vector<int> Membership::community(int c) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (labels[i] == c) out.push_back(i);
    return out;
}

BlockMatrix::BlockMatrix(const Eigen::MatrixXd& p) : k(static_cast<int>(p.rows())), probs(p) {
    validate();
}

BlockMatrix BlockMatrix::constant(int k, double value) {
    BlockMatrix b;
    b.k = k;
    b.probs = Eigen::MatrixXd::Constant(k, k, value);
    b.validate();
    return b;
}

BlockMatrix BlockMatrix::two_level(int k, double diag, double off) {
    BlockMatrix b;
    b.k = k;
    b.probs = Eigen::MatrixXd::Constant(k, k, off);
    b.probs.diagonal().setConstant(diag);
    b.validate();
    return b;
}

void BlockMatrix::validate() const {
    if (k < 1) throw ParamError("BlockMatrix: K must be at least 1");
    if (probs.rows() != k || probs.cols() != k)
        throw ParamError("BlockMatrix: shape mismatch");
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            const double v = probs(a, b);
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw ParamError("BlockMatrix: entry outside [0,1]");
            if (v != probs(b, a)) throw ParamError("BlockMatrix: not symmetric");
        }
    }
}

bool BlockMatrix::has_distinct_rows(double tol) const {
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if ((probs.row(a) - probs.row(b)).cwiseAbs().maxCoeff() <= tol) return false;
    return true;
}

void DcbmParams::validate() const {
    membership.validate();
    blocks.validate();
    if (membership.k != blocks.k)
        throw ParamError("DcbmParams: membership K != block matrix K");
    if (static_cast<int>(activeness.size()) != membership.size())
        throw ParamError("DcbmParams: activeness length " +
                         std::to_string(activeness.size()) + " != node count " +
                         std::to_string(membership.size()));
    for (double psi : activeness)
        if (!std::isfinite(psi) || psi < 0.0 || psi > 1.0)
            throw ParamError("DcbmParams: activeness entry outside [0,1]");
}

void MmbmParams::validate() const {
    blocks.validate();
    if (mixing.cols() != blocks.k)
        throw ParamError("MmbmParams: mixing columns != block matrix K");
    for (Eigen::Index i = 0; i < mixing.rows(); ++i) {
        double sum = 0.0;
        for (Eigen::Index c = 0; c < mixing.cols(); ++c) {
            const double v = mixing(i, c);
            if (!std::isfinite(v) || v < 0.0)
                throw ParamError("MmbmParams: negative mixing weight at row " +
                                 std::to_string(i));
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ParamError("MmbmParams: mixing row " + std::to_string(i) +
                             " sums to " + std::to_string(sum));
    }
}

}  // namespace sbmtest
