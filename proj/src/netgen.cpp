#include "sbmtest/netgen.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sbmtest {

namespace {

// Shared pair loop: row-major over i < j, exactly one uniform per pair.
template <typename PairProb>
AdjacencyGraph sample_pairs(int n, SeededRng& rng, PairProb&& prob) {
    AdjacencyGraph graph(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.uniform() < prob(i, j)) graph.set_edge(i, j);
        }
    }
    return graph;
}

}  // namespace

AdjacencyGraph generate_sbm(const Membership& membership, const BlockMatrix& blocks,
                            SeededRng& rng) {
    membership.validate();
    blocks.validate();
    if (membership.k != blocks.k)
        throw ParamError("generate_sbm: membership K=" + std::to_string(membership.k) +
                         " but block matrix K=" + std::to_string(blocks.k));
    if (!membership.is_proper())
        throw ParamError("generate_sbm: membership is not proper (some community empty)");
    const auto& g = membership.labels;
    return sample_pairs(membership.size(), rng, [&](int i, int j) {
        return blocks(g[i] - 1, g[j] - 1);
    });
}

AdjacencyGraph generate_dcbm(const DcbmParams& params, SeededRng& rng) {
    params.validate();
    const auto& g = params.membership.labels;
    const auto& psi = params.activeness;
    return sample_pairs(params.membership.size(), rng, [&](int i, int j) {
        return psi[i] * psi[j] * params.blocks(g[i] - 1, g[j] - 1);
    });
}

AdjacencyGraph generate_mmbm(const MmbmParams& params, SeededRng& rng) {
    params.validate();
    const int n = static_cast<int>(params.mixing.rows());
    // Precompute B phi_j once per node.
    const Eigen::MatrixXd bphi = params.mixing * params.blocks.probs;  // n x K
    return sample_pairs(n, rng, [&](int i, int j) {
        return params.mixing.row(i).dot(bphi.row(j));
    });
}

Eigen::MatrixXd sample_dirichlet_rows(int n, int k, double alpha, SeededRng& rng) {
    if (n < 0 || k < 1) throw ParamError("sample_dirichlet_rows: bad dimensions");
    if (!(alpha > 0.0)) throw ParamError("sample_dirichlet_rows: alpha must be positive");
    Eigen::MatrixXd rows(n, k);
    for (int i = 0; i < n; ++i) {
        const auto row = rng.dirichlet(static_cast<std::size_t>(k), alpha);
        for (int c = 0; c < k; ++c) rows(i, c) = row[c];
    }
    return rows;
}

Membership random_membership(int n, int k, SeededRng& rng) {
    if (k < 1 || n < k)
        throw ParamError("random_membership: need n >= K >= 1");
    Membership m;
    m.k = k;
    m.labels.resize(n);
    do {
        for (int i = 0; i < n; ++i)
            m.labels[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
    } while (!m.is_proper());
    return m;
}

Membership balanced_membership(int n, int k) {
    if (k < 1 || n < k)
        throw ParamError("balanced_membership: need n >= K >= 1");
    Membership m;
    m.k = k;
    m.labels.reserve(n);
    const int base = n / k;
    const int extra = n % k;
    for (int c = 1; c <= k; ++c) {
        const int size = base + (c <= extra ? 1 : 0);
        m.labels.insert(m.labels.end(), size, c);
    }
    return m;
}

LoadedGraph read_edge_list(const std::string& path, const EdgeListOptions& options) {
    if (options.indexing != 0 && options.indexing != 1)
        throw ParamError("read_edge_list: indexing must be 0 or 1");
    std::ifstream in(path);
    if (!in) throw IoError("read_edge_list: cannot open '" + path + "'");

    std::set<long long> ids;
    std::vector<std::pair<long long, long long>> edges;

    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u >> v))
            throw IoError("read_edge_list: malformed line " + std::to_string(line_no) +
                          " in '" + path + "': '" + line + "'");
        std::string rest;
        if (fields >> rest)
            throw IoError("read_edge_list: trailing tokens on line " +
                          std::to_string(line_no) + " in '" + path + "'");
        if (u < options.indexing || v < options.indexing)
            throw IoError("read_edge_list: node id below indexing base on line " +
                          std::to_string(line_no) + " in '" + path + "'");
        if (u == v) {
            if (!options.ignore_self_loops)
                throw IoError("read_edge_list: self-loop on line " +
                              std::to_string(line_no) + " in '" + path + "'");
            ids.insert(u);  // the node still exists
            continue;
        }
        ids.insert(u);
        ids.insert(v);
        edges.emplace_back(u, v);
    }
    if (ids.empty()) throw IoError("read_edge_list: no edges or nodes in '" + path + "'");

    // Sparse ids compact in ascending numeric order, so dense files map to
    // themselves and per-line label files stay aligned with the vertices.
    LoadedGraph out;
    out.original_ids.assign(ids.begin(), ids.end());
    std::unordered_map<long long, int> compact;
    compact.reserve(out.original_ids.size());
    for (std::size_t v = 0; v < out.original_ids.size(); ++v)
        compact[out.original_ids[v]] = static_cast<int>(v);
    out.graph = AdjacencyGraph(static_cast<int>(out.original_ids.size()));
    for (auto [u, v] : edges) out.graph.set_edge(compact[u], compact[v]);  // dupes collapse
    return out;
}

void write_edge_list(const AdjacencyGraph& graph, const std::string& path, int indexing) {
    std::ofstream out(path);
    if (!out) throw IoError("write_edge_list: cannot open '" + path + "' for writing");
    const int n = graph.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (graph(i, j)) out << (i + indexing) << ' ' << (j + indexing) << '\n';
    if (!out) throw IoError("write_edge_list: write failed for '" + path + "'");
}

ComponentResult largest_connected_component(const AdjacencyGraph& graph) {
    const int n = graph.size();
    std::vector<int> component(n, -1);
    std::vector<int> stack;
    int best_root = -1;
    int best_size = 0;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] != -1) continue;
        const int id = components++;
        int size = 0;
        stack.push_back(start);
        component[start] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w = 0; w < n; ++w) {
                if (graph(v, w) && component[w] == -1) {
                    component[w] = id;
                    stack.push_back(w);
                }
            }
        }
        // strict: ties keep the earlier root, which has the smaller
        // minimum original index by scan order
        if (size > best_size) {
            best_size = size;
            best_root = id;
        }
    }

    ComponentResult out;
    if (n == 0) {
        out.graph = AdjacencyGraph(0);
        return out;
    }
    out.index_map.reserve(best_size);
    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v) {
        if (component[v] == best_root) {
            new_id[v] = static_cast<int>(out.index_map.size());
            out.index_map.push_back(v);
        }
    }
    out.graph = AdjacencyGraph(best_size);
    for (int a = 0; a < best_size; ++a) {
        const int v = out.index_map[a];
        for (int b = a + 1; b < best_size; ++b)
            if (graph(v, out.index_map[b])) out.graph.set_edge(a, b);
    }
    return out;
}

}  // namespace sbmtest
