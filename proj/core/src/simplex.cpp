#include "sparse_regret/simplex.hpp"

#include <cmath>
#include <stdexcept>

#include "sparse_regret/errors.hpp"

namespace sparse_regret {

SimplexDistribution::SimplexDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty())
        throw std::invalid_argument("SimplexDistribution: dimension must be positive");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("SimplexDistribution: weights must be finite and nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kSimplexSumTolerance)
        throw std::invalid_argument("SimplexDistribution: weights sum to " + std::to_string(sum) +
                                    ", outside the 1e-9 tolerance");
}

SimplexDistribution SimplexDistribution::uniform(std::size_t d) {
    if (d == 0) throw std::invalid_argument("SimplexDistribution::uniform: dimension must be positive");
    return SimplexDistribution(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

SimplexDistribution normalize_to_simplex(std::vector<double> weights, double floor) {
    if (weights.empty())
        throw std::invalid_argument("normalize_to_simplex: dimension must be positive");
    double sum = 0.0;
    for (double& w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw NumericalError("normalize_to_simplex: weights must be finite and nonnegative");
        if (w < floor) w = floor;
        sum += w;
    }
    if (!(sum > 0.0) || !std::isfinite(sum))
        throw NumericalError("normalize_to_simplex: weight sum is not positive and finite");
    for (double& w : weights) w /= sum;
    return SimplexDistribution(std::move(weights));
}

} // namespace sparse_regret
