#include "sparse_regret/bandit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sparse_regret/errors.hpp"

namespace sparse_regret {

BanditTuning tune_bandit(std::size_t s, std::size_t d, std::size_t T, BanditEtaVariant variant) {
    if (s == 0) throw std::invalid_argument("tune_bandit: s must be positive");
    if (d == 0) throw std::invalid_argument("tune_bandit: d must be positive");
    if (T == 0) throw std::invalid_argument("tune_bandit: T must be positive");
    const double ratio = static_cast<double>(d) / static_cast<double>(s);
    if (!(ratio >= std::exp(2.0) * (1.0 - 1e-12)))
        throw std::invalid_argument("tune_bandit: requires d/s >= e^2");
    const double q = std::log(ratio);
    const double d_pow = std::exp(std::log(static_cast<double>(d)) / q);          // d^(1/q)
    const double s_pow = std::exp((1.0 - 1.0 / q) * std::log(static_cast<double>(s))); // s^(1-1/q)
    const double Td = static_cast<double>(T);
    const double eta = variant == BanditEtaVariant::Balanced
                           ? std::sqrt(2.0 * d_pow / ((q - 1.0) * Td * s_pow))
                           : std::sqrt(2.0 * s_pow / ((q - 1.0) * Td * d_pow));
    return {q, eta};
}

BanditState::BanditState(std::size_t dim, double q_value, double eta_value)
    : d(dim), q(q_value), eta(eta_value), x(SimplexDistribution::uniform(dim)) {
    TsallisPotential check(q); // validates q > 1
    if (!(eta > 0.0) || !std::isfinite(eta))
        throw std::invalid_argument("BanditState: eta must be positive and finite");
}

BanditState BanditState::tuned(std::size_t d, std::size_t s, std::size_t T,
                               BanditEtaVariant variant) {
    const BanditTuning t = tune_bandit(s, d, T, variant);
    return BanditState(d, t.q, t.eta);
}

std::size_t sample_arm(const SimplexDistribution& x, RngStream& rng) {
    const double u = rng.uniform01();
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] > 0.0) last_positive = i;
        acc += x[i];
        if (u < acc) return i;
    }
    return last_positive; // u landed in the rounding gap below 1
}

LossEstimate estimate_loss(double observed, std::size_t arm, const SimplexDistribution& x) {
    if (arm >= x.dim()) throw std::invalid_argument("estimate_loss: arm out of range");
    if (!(observed >= 0.0 && observed <= 1.0))
        throw std::invalid_argument("estimate_loss: observed loss must lie in [0, 1]");
    if (!(x[arm] > 0.0))
        throw std::invalid_argument("estimate_loss: sampled arm has zero probability");
    return {x.dim(), arm, observed / x[arm]};
}

void bandit_step(BanditState& state, const LossEstimate& estimate) {
    if (estimate.dim != state.d) throw std::invalid_argument("bandit_step: dimension mismatch");
    if (estimate.arm >= state.d) throw std::invalid_argument("bandit_step: arm out of range");
    if (!(estimate.value >= 0.0) || !std::isfinite(estimate.value))
        throw std::invalid_argument("bandit_step: estimate value must be finite and nonnegative");
    const TsallisPotential pot(state.q);
    std::vector<double> xv = state.x.weights();
    for (double& v : xv)
        if (v < 1e-300) v = 1e-300;
    std::vector<double> y = tsallis_gradient(xv, pot);
    y[estimate.arm] -= state.eta * estimate.value;
    const std::vector<double> z = tsallis_gradient_inverse(y, pot);
    state.x = bregman_project(z, pot);
}

} // namespace sparse_regret
