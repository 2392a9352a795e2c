#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparse_regret/outcome.hpp"
#include "sparse_regret/simplex.hpp"

namespace sparse_regret {

// Running regret accounting. Tracks per-arm cumulative outcomes, the
// cumulative expected outcome of the played distributions and, for
// bandit runs, the cumulative outcome of the sampled arms.
class RegretLedger {
public:
    RegretLedger(std::size_t dim, Direction direction);

    void update(const SparseOutcome& outcome, const SimplexDistribution& action,
                std::optional<std::size_t> realized_arm = std::nullopt);

    // Pseudo-regret: gains give max_i cum_i - expected, losses give
    // expected - min_i cum_i. Zero before any stage.
    double regret() const;

    // Same gap with the sampled arms' cumulative outcome in place of the
    // expected one. Meaningful only if realized arms were recorded.
    double realized_regret() const;

    std::size_t dim() const { return per_arm_.size(); }
    Direction direction() const { return direction_; }
    const std::vector<double>& per_arm_cumulative() const { return per_arm_; }
    double cumulative_expected() const { return expected_; }
    double cumulative_realized() const { return realized_; }
    std::size_t stage_count() const { return stages_; }

private:
    double best_arm_value() const;

    Direction direction_;
    std::vector<double> per_arm_;
    double expected_ = 0.0;
    double realized_ = 0.0;
    std::size_t stages_ = 0;
};

} // namespace sparse_regret
