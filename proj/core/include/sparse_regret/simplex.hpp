#pragma once

#include <cstddef>
#include <vector>

namespace sparse_regret {

inline constexpr double kSimplexSumTolerance = 1e-9;

// Probability distribution over d arms. Validated on construction:
// weights finite, nonnegative, summing to 1 within 1e-9.
class SimplexDistribution {
public:
    explicit SimplexDistribution(std::vector<double> weights);

    static SimplexDistribution uniform(std::size_t d);

    std::size_t dim() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    double operator[](std::size_t i) const { return weights_[i]; }

private:
    std::vector<double> weights_;
};

// Scales nonnegative weights so they sum to exactly 1. Entries below
// `floor` are raised to it first; floor = 0 keeps exact zeros.
SimplexDistribution normalize_to_simplex(std::vector<double> weights, double floor = 0.0);

} // namespace sparse_regret
