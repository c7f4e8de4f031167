#include "sbmtest/select.hpp"

#include <cmath>
#include <sstream>

#include "sbmtest/tw1.hpp"

namespace sbmtest {

std::string KSelectMode::describe() const {
    std::ostringstream out;
    if (kind == Kind::Quantile)
        out << "quantile(alpha=" << alpha << ")";
    else
        out << "power-law(c=" << c << ",eps=" << eps << ")";
    return out.str();
}

int default_k_max(int n) {
    return std::max(10, static_cast<int>(std::floor(std::cbrt(static_cast<double>(n)))));
}

KEstimateResult estimate_k(const AdjacencyGraph& graph, const KSelectMode& mode,
                           const KEstimateOptions& options, const SeededRng& rng) {
    const int n = graph.size();
    if (n < 1) throw ParamError("estimate_k: empty graph");
    int k_max = options.k_max > 0 ? options.k_max : default_k_max(n);
    if (options.k_max < 0) throw ParamError("estimate_k: k_max must be at least 1");
    k_max = std::min(k_max, n);

    double threshold = 0.0;
    if (mode.kind == KSelectMode::Kind::Quantile) {
        if (!(mode.alpha > 0.0 && mode.alpha < 1.0))
            throw ParamError("estimate_k: quantile mode needs alpha in (0,1)");
        threshold = tw1_quantile(1.0 - mode.alpha / 2.0);
    } else {
        if (!(mode.eps > 0.0 && mode.eps < 5.0 / 6.0))
            throw ParamError("estimate_k: power-law mode needs eps in (0, 5/6)");
        if (!(mode.c > 0.0)) throw ParamError("estimate_k: power-law mode needs c > 0");
        threshold = mode.c * std::pow(static_cast<double>(n), mode.eps);
    }

    KEstimateResult result;
    result.mode = mode.describe();
    const SeededRng stage_root = rng.derive(stream::kSelectStage);

    for (int k0 = 1; k0 <= k_max; ++k0) {
        const SeededRng stage_rng = stage_root.derive(static_cast<std::uint64_t>(k0));
        // alpha is only used for the internal threshold field; the scan
        // decision below always compares against the mode threshold
        const double stage_alpha =
            mode.kind == KSelectMode::Kind::Quantile ? mode.alpha : 0.05;
        GofTestResult test =
            options.bootstrap
                ? bootstrap_corrected_test(graph, k0, stage_alpha, options.m, std::nullopt,
                                           stage_rng, options.gof)
                : gof_test(graph, k0, stage_alpha, std::nullopt, stage_rng, options.gof);

        KStageRecord record;
        record.k0 = k0;
        record.statistic = test.statistic;
        record.threshold = threshold;
        record.rejected = test.statistic >= threshold;
        record.degenerate_clusters = test.degenerate_clusters;
        record.clamp_count = test.clamp_count;
        result.trace.push_back(record);

        if (!record.rejected) {
            result.k_hat = k0;
            result.capped = false;
            return result;
        }
    }
    result.k_hat = k_max;
    result.capped = true;
    return result;
}

}  // namespace sbmtest
