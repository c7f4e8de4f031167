#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sbmtest/errors.hpp"

namespace sbmtest {

/// Simple undirected graph as a symmetric 0/1 matrix with zero diagonal.
/// Treat instances as immutable once filled; sharing across threads is safe.
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;

    explicit AdjacencyGraph(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw ParamError("AdjacencyGraph: negative size");
    }

    /// Validating constructor from a dense 0/1 matrix.
    static AdjacencyGraph from_dense(const Eigen::MatrixXd& m);

    int size() const { return n_; }

    std::uint8_t operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    /// Sets the undirected edge {i, j}; i == j is rejected.
    void set_edge(int i, int j) {
        if (i == j) throw ParamError("AdjacencyGraph::set_edge: self-loop");
        entries_[static_cast<std::size_t>(i) * n_ + j] = 1;
        entries_[static_cast<std::size_t>(j) * n_ + i] = 1;
    }

    std::size_t edge_count() const;
    double density() const;
    int degree(int i) const;

    /// Checks symmetry, zero diagonal and 0/1 entries; throws ParamError.
    void validate() const;

    Eigen::MatrixXd to_dense() const;

    const std::vector<std::uint8_t>& raw() const { return entries_; }

    bool operator==(const AdjacencyGraph& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> entries_;
};

/// Community assignment: labels[i] in {1..K}.
struct Membership {
    std::vector<int> labels;
    int k = 0;

    Membership() = default;
    Membership(std::vector<int> labels_in, int k_in) : labels(std::move(labels_in)), k(k_in) {}

    int size() const { return static_cast<int>(labels.size()); }

    /// Every label in range. Throws ParamError otherwise.
    void validate() const;

    /// True when every value in {1..K} appears at least once.
    bool is_proper() const;

    std::vector<int> cluster_sizes() const;

    /// Node indices of community c (1-based community id).
    std::vector<int> community(int c) const;
};

/// Symmetric K x K matrix of edge probabilities.
struct BlockMatrix {
    int k = 0;
    Eigen::MatrixXd probs;

    BlockMatrix() = default;
    explicit BlockMatrix(const Eigen::MatrixXd& p);
    static BlockMatrix constant(int k, double value);
    /// diag on the diagonal, off elsewhere.
    static BlockMatrix two_level(int k, double diag, double off);

    double operator()(int a, int b) const { return probs(a, b); }

    void validate() const;

    /// Predicate for the identifiability class: all rows pairwise distinct.
    bool has_distinct_rows(double tol = 0.0) const;
};

/// Degree-corrected block model parameters.
struct DcbmParams {
    Membership membership;
    BlockMatrix blocks;
    std::vector<double> activeness;  // psi, entries in [0,1]

    void validate() const;
};

/// Mixed-membership block model parameters.
struct MmbmParams {
    BlockMatrix blocks;
    Eigen::MatrixXd mixing;  // n x K, rows nonnegative summing to 1

    void validate() const;
};

}  // namespace sbmtest
