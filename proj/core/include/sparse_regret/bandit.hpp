#pragma once

#include <cstddef>

#include "sparse_regret/regularizers.hpp"
#include "sparse_regret/rng.hpp"
#include "sparse_regret/simplex.hpp"

namespace sparse_regret {

// Two published arrangements of the tuned learning rate. Balanced
// equalizes the two terms of the regret bound and is the default;
// Reciprocal swaps the d and s factors.
enum class BanditEtaVariant { Balanced, Reciprocal };

struct BanditTuning {
    double q;
    double eta;
};

// q = ln(d/s); requires d/s >= e^2 so that q >= 2. Balanced eta is
// sqrt(2 d^(1/q) / ((q-1) T s^(1-1/q))).
BanditTuning tune_bandit(std::size_t s, std::size_t d, std::size_t T,
                         BanditEtaVariant variant = BanditEtaVariant::Balanced);

struct BanditState {
    std::size_t d = 0;
    double q = 2.0;
    double eta = 0.0;
    SimplexDistribution x; // current iterate, strictly positive

    BanditState(std::size_t dim, double q_value, double eta_value);

    static BanditState tuned(std::size_t d, std::size_t s, std::size_t T,
                             BanditEtaVariant variant = BanditEtaVariant::Balanced);
};

// Importance weighted estimate of a loss vector from one observation:
// value = observed / x[arm] at the sampled arm, zero elsewhere.
struct LossEstimate {
    std::size_t dim = 0;
    std::size_t arm = 0;
    double value = 0.0;
};

// Draws an arm index with probability x[i]; deterministic given the
// stream position.
std::size_t sample_arm(const SimplexDistribution& x, RngStream& rng);

LossEstimate estimate_loss(double observed, std::size_t arm, const SimplexDistribution& x);

// One greedy mirror descent step against the estimate: gradient, walk,
// invert, Bregman-project back onto the simplex. Iterates are floored
// at 1e-300 before inverting so the gradient stays finite.
void bandit_step(BanditState& state, const LossEstimate& estimate);

} // namespace sparse_regret
