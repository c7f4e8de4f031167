#pragma once

#include <string>
#include <vector>

#include "sbmtest/rng.hpp"
#include "sbmtest/types.hpp"

namespace sbmtest {

/// SBM sample: upper-diagonal pairs visited row-major (i < j), one uniform
/// draw per pair, mirrored below, zero diagonal. The fixed visiting order
/// makes the psi==1 and pure-mixing reductions of the richer models
/// bit-identical to this generator, not merely equal in distribution.
AdjacencyGraph generate_sbm(const Membership& membership, const BlockMatrix& blocks,
                            SeededRng& rng);

/// Degree-corrected SBM: edge probability psi_i * psi_j * B[g_i][g_j].
AdjacencyGraph generate_dcbm(const DcbmParams& params, SeededRng& rng);

/// Mixed-membership model: edge probability phi_i' B phi_j.
AdjacencyGraph generate_mmbm(const MmbmParams& params, SeededRng& rng);

/// n independent Dirichlet(alpha * ones(K)) rows.
Eigen::MatrixXd sample_dirichlet_rows(int n, int k, double alpha, SeededRng& rng);

/// Labels drawn iid uniform over {1..K}, resampled until proper.
Membership random_membership(int n, int k, SeededRng& rng);

/// Equal-sized communities in contiguous blocks; the first n mod K
/// communities get one extra node.
Membership balanced_membership(int n, int k);

struct EdgeListOptions {
    int indexing = 0;              // smallest admissible node id (0 or 1)
    bool ignore_self_loops = true; // drop i--i lines instead of failing
};

struct LoadedGraph {
    AdjacencyGraph graph;
    /// original_ids[v] is the file id compacted to vertex v (ascending
    /// numeric order, so dense 0..n-1 files map to themselves).
    std::vector<long long> original_ids;
};

/// Whitespace-separated "u v" pairs, one edge per line; '#' starts a comment.
/// Duplicate edges collapse; sparse ids are compacted in ascending numeric
/// order. Malformed lines and empty inputs raise IoError with line context.
LoadedGraph read_edge_list(const std::string& path, const EdgeListOptions& options = {});

/// Inverse of read_edge_list for simple graphs: one "u v" line per edge
/// (u < v, row-major), ids offset by `indexing`.
void write_edge_list(const AdjacencyGraph& graph, const std::string& path, int indexing = 0);

struct ComponentResult {
    AdjacencyGraph graph;
    /// index_map[v] = vertex id in the parent graph (injective).
    std::vector<int> index_map;
};

/// Induced subgraph on the largest connected component; ties broken by the
/// smallest original vertex index contained in the component.
ComponentResult largest_connected_component(const AdjacencyGraph& graph);

}  // namespace sbmtest
