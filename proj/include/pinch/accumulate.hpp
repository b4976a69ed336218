#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace pinch {

/// Pairwise (cascade) summation; error grows O(log n) instead of O(n),
/// and the result is independent of how the inputs were produced.
inline double pairwise_sum(const double* data, size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

/// Sample mean and standard error of the mean.
inline std::pair<double, double> mean_stderr(const std::vector<double>& v) {
    const size_t n = v.size();
    if (n == 0) return {0.0, 0.0};
    const double mean = pairwise_sum(v) / static_cast<double>(n);
    if (n == 1) return {mean, 0.0};
    std::vector<double> sq(n);
    for (size_t i = 0; i < n; ++i) {
        const double dlt = v[i] - mean;
        sq[i] = dlt * dlt;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace pinch
