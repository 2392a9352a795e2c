#include "sparse_regret/ledger.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparse_regret {

RegretLedger::RegretLedger(std::size_t dim, Direction direction)
    : direction_(direction), per_arm_(dim, 0.0) {
    if (dim == 0) throw std::invalid_argument("RegretLedger: dimension must be positive");
}

void RegretLedger::update(const SparseOutcome& outcome, const SimplexDistribution& action,
                          std::optional<std::size_t> realized_arm) {
    if (outcome.dim() != per_arm_.size() || action.dim() != per_arm_.size())
        throw std::invalid_argument("RegretLedger::update: dimension mismatch");
    if (outcome.direction() != direction_)
        throw std::invalid_argument("RegretLedger::update: outcome direction mismatch");
    for (const auto& e : outcome.entries()) per_arm_[e.index] += e.value;
    expected_ += outcome.dot(action.weights());
    if (realized_arm) {
        if (*realized_arm >= per_arm_.size())
            throw std::invalid_argument("RegretLedger::update: realized arm out of range");
        realized_ += outcome.value_at(*realized_arm);
    }
    ++stages_;
}

double RegretLedger::best_arm_value() const {
    return direction_ == Direction::Gain
               ? *std::max_element(per_arm_.begin(), per_arm_.end())
               : *std::min_element(per_arm_.begin(), per_arm_.end());
}

double RegretLedger::regret() const {
    return direction_ == Direction::Gain ? best_arm_value() - expected_
                                         : expected_ - best_arm_value();
}

double RegretLedger::realized_regret() const {
    return direction_ == Direction::Gain ? best_arm_value() - realized_
                                         : realized_ - best_arm_value();
}

} // namespace sparse_regret
