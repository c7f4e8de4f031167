#pragma once

// Test-side Kolmogorov-Smirnov utilities.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sbmtest/tw1.hpp"

inline double ks_distance_tw1(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = sbmtest::tw1_cdf(samples[i]);
        d = std::max(d, (i + 1) / n - f);
        d = std::max(d, f - i / n);
    }
    return d;
}

// Asymptotic Kolmogorov critical value: D_crit = sqrt(-ln(alpha/2) / (2n)).
inline double ks_critical(double alpha, std::size_t n) {
    return std::sqrt(-std::log(alpha / 2.0) / (2.0 * static_cast<double>(n)));
}
