#pragma once

#include <string>
#include <vector>

#include "sbmtest/gof.hpp"

namespace sbmtest {

/// Threshold rule for the sequential scan.
struct KSelectMode {
    enum class Kind { Quantile, PowerLaw };
    Kind kind = Kind::Quantile;
    double alpha = 1e-4;  // Quantile: threshold = tw1_quantile(1 - alpha/2)
    double c = 1.0;       // PowerLaw: threshold = c * n^eps
    double eps = 0.5;     // must lie in (0, 5/6)

    static KSelectMode quantile(double alpha) { return {Kind::Quantile, alpha, 0.0, 0.0}; }
    static KSelectMode power_law(double c, double eps) {
        return {Kind::PowerLaw, 0.0, c, eps};
    }

    std::string describe() const;
};

struct KStageRecord {
    int k0 = 0;
    double statistic = 0.0;
    double threshold = 0.0;
    bool rejected = false;
    std::vector<int> degenerate_clusters;
    int clamp_count = 0;
};

struct KEstimateResult {
    int k_hat = 0;
    std::vector<KStageRecord> trace;  // consecutive K0 = 1 .. last stage
    std::string mode;
    bool capped = false;  // every K0 <= k_max rejected
};

struct KEstimateOptions {
    bool bootstrap = true;
    int m = 50;
    int k_max = 0;  // 0 selects max(10, floor(n^(1/3)))
    GofOptions gof;
};

int default_k_max(int n);

/// Sequential scan: k_hat is the smallest K0 with statistic < threshold.
/// Stage K0 runs on the stream rng.derive(kSelectStage).derive(K0), so the
/// stages are independent of each other and of scan order.
KEstimateResult estimate_k(const AdjacencyGraph& graph, const KSelectMode& mode,
                           const KEstimateOptions& options, const SeededRng& rng);

}  // namespace sbmtest
