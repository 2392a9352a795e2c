#include "sparse_regret/full_info.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sparse_regret/errors.hpp"

namespace sparse_regret {

int ceil_log2(std::size_t k) {
    if (k == 0) throw std::invalid_argument("ceil_log2: k must be positive");
    return static_cast<int>(std::bit_width(k - 1));
}

GainsTuning tune_gains(std::size_t s, std::size_t T) {
    if (s == 0) throw std::invalid_argument("tune_gains: s must be positive");
    if (T == 0) throw std::invalid_argument("tune_gains: T must be positive");
    if (s < 3) {
        // p = 2 makes q = 2 and s^(2/q) = s
        const double eta = std::sqrt(1.0 / (static_cast<double>(T) * static_cast<double>(s)));
        return {2.0, eta};
    }
    const double lns = std::log(static_cast<double>(s));
    const double p = 1.0 + 1.0 / (2.0 * lns - 1.0);
    const double q = 2.0 * lns;
    const double s_2q = std::exp((2.0 / q) * lns); // equals e up to rounding
    return {p, std::sqrt((p - 1.0) / (static_cast<double>(T) * s_2q))};
}

double tune_losses(std::size_t s, std::size_t d, std::size_t T) {
    if (s == 0) throw std::invalid_argument("tune_losses: s must be positive");
    if (d < 2) throw std::invalid_argument("tune_losses: d must be at least 2");
    if (T == 0) throw std::invalid_argument("tune_losses: T must be positive");
    const double lnd = std::log(static_cast<double>(d));
    return std::log1p(std::sqrt(2.0 * static_cast<double>(d) * lnd /
                                (static_cast<double>(s) * static_cast<double>(T))));
}

OmdGainsConfig OmdGainsConfig::tuned(std::size_t d, std::size_t s, std::size_t T) {
    if (d == 0) throw std::invalid_argument("OmdGainsConfig: d must be positive");
    if (s > d) throw std::invalid_argument("OmdGainsConfig: s cannot exceed d");
    const GainsTuning t = tune_gains(s, T);
    return {d, s, T, t.p, t.eta};
}

OmdGainsState::OmdGainsState(OmdGainsConfig cfg)
    : config(cfg), cumulative(cfg.d, 0.0) {
    if (cfg.d == 0) throw std::invalid_argument("OmdGainsState: d must be positive");
    PNormRegularizer check(cfg.p); // validates the exponent
    if (!(cfg.eta > 0.0)) throw std::invalid_argument("OmdGainsState: eta must be positive");
}

SimplexDistribution omd_gains_step(OmdGainsState& state, const SparseOutcome& g) {
    if (g.dim() != state.config.d)
        throw std::invalid_argument("omd_gains_step: dimension mismatch");
    if (g.direction() != Direction::Gain)
        throw std::invalid_argument("omd_gains_step: expected a gain vector");
    std::vector<double> y(state.cumulative);
    for (double& v : y) v *= state.config.eta;
    SimplexDistribution x = lp_mirror_map(y, PNormRegularizer(state.config.p));
    for (const auto& e : g.entries()) state.cumulative[e.index] += e.value;
    return x;
}

EwaState::EwaState(std::size_t dim, double signed_eta_value)
    : d(dim), signed_eta(signed_eta_value), cumulative(dim, 0.0) {
    if (d == 0) throw std::invalid_argument("EwaState: d must be positive");
    if (!std::isfinite(signed_eta)) throw std::invalid_argument("EwaState: eta must be finite");
}

SimplexDistribution ewa_step(EwaState& state, const SparseOutcome& outcome) {
    if (outcome.dim() != state.d) throw std::invalid_argument("ewa_step: dimension mismatch");
    SimplexDistribution x = logit_map(state.cumulative, state.signed_eta);
    for (const auto& e : outcome.entries()) state.cumulative[e.index] += e.value;
    return x;
}

double adaptive_losses_constant() {
    return std::pow(2.0, 0.75) * std::sqrt(std::sqrt(2.0) + 1.0);
}

double adaptive_losses_eta(std::size_t d, std::size_t T, int m) {
    if (d < 2) throw std::invalid_argument("adaptive_losses_eta: d must be at least 2");
    if (T == 0) throw std::invalid_argument("adaptive_losses_eta: T must be positive");
    if (m < 1) throw std::invalid_argument("adaptive_losses_eta: m must be at least 1");
    const double lnd = std::log(static_cast<double>(d));
    return std::log1p(adaptive_losses_constant() *
                      std::sqrt(static_cast<double>(d) * lnd /
                                (std::ldexp(1.0, m) * static_cast<double>(T))));
}

AdaptiveLossState::AdaptiveLossState(std::size_t dim, std::size_t horizon)
    : d(dim), T(horizon), C(adaptive_losses_constant()), m(1),
      weights(dim, dim > 0 ? 1.0 / static_cast<double>(dim) : 0.0) {
    if (d < 2) throw std::invalid_argument("AdaptiveLossState: d must be at least 2");
    if (T == 0) throw std::invalid_argument("AdaptiveLossState: T must be positive");
    eta_m = adaptive_losses_eta(d, T, m);
}

SimplexDistribution adaptive_losses_step(AdaptiveLossState& state, const SparseOutcome& l) {
    if (l.dim() != state.d)
        throw std::invalid_argument("adaptive_losses_step: dimension mismatch");
    if (l.direction() != Direction::Loss)
        throw std::invalid_argument("adaptive_losses_step: expected a loss vector");
    SimplexDistribution x = normalize_to_simplex(state.weights);
    const std::size_t k = l.sparsity();
    const std::size_t threshold = state.m >= 64 ? std::numeric_limits<std::size_t>::max()
                                                : (std::size_t(1) << state.m);
    if (k <= threshold) {
        for (const auto& e : l.entries())
            state.weights[e.index] *= std::exp(-state.eta_m * e.value);
        double sum = 0.0;
        for (double w : state.weights) sum += w;
        if (!(sum > 0.0) || !std::isfinite(sum))
            throw NumericalError("adaptive_losses_step: weights degenerated");
        for (double& w : state.weights) w /= sum;
    } else {
        // The triggering loss only retunes the regime; it is not absorbed.
        state.m = ceil_log2(k);
        state.eta_m = adaptive_losses_eta(state.d, state.T, state.m);
        std::fill(state.weights.begin(), state.weights.end(),
                  1.0 / static_cast<double>(state.d));
    }
    return x;
}

double adaptive_gains_constant() {
    return std::sqrt(std::numbers::e * std::sqrt(2.0) * (std::sqrt(2.0) + 1.0));
}

AdaptiveGainsParams adaptive_gains_params(std::size_t T, int m, double C) {
    if (T == 0) throw std::invalid_argument("adaptive_gains_params: T must be positive");
    if (m < 1) throw std::invalid_argument("adaptive_gains_params: m must be at least 1");
    const double pow2 = std::ldexp(2.0, m); // 2^(m+1)
    const double x = std::numbers::ln2 * pow2;
    const double p = 1.0 + 1.0 / (x - 1.0);
    const double q = x; // dual exponent collapses to ln 2 * 2^(m+1)
    const double denom =
        static_cast<double>(T) * std::exp((pow2 / q) * std::numbers::ln2); // T * 2^(2^(m+1)/q)
    return {p, q, C * std::sqrt((p - 1.0) / denom)};
}

AdaptiveGainsState::AdaptiveGainsState(std::size_t dim, std::size_t horizon)
    : d(dim), T(horizon), C(adaptive_gains_constant()), m(1), y(dim, 0.0) {
    if (d == 0) throw std::invalid_argument("AdaptiveGainsState: d must be positive");
    if (T == 0) throw std::invalid_argument("AdaptiveGainsState: T must be positive");
    const AdaptiveGainsParams par = adaptive_gains_params(T, m, C);
    p_m = par.p;
    q_m = par.q;
    eta_m = par.eta;
}

SimplexDistribution adaptive_gains_step(AdaptiveGainsState& state, const SparseOutcome& g) {
    if (g.dim() != state.d)
        throw std::invalid_argument("adaptive_gains_step: dimension mismatch");
    if (g.direction() != Direction::Gain)
        throw std::invalid_argument("adaptive_gains_step: expected a gain vector");
    std::vector<double> yy(state.y);
    for (double& v : yy) v *= state.eta_m;
    SimplexDistribution x = lp_mirror_map(yy, PNormRegularizer(state.p_m));
    const std::size_t k = g.sparsity();
    const std::size_t e2 = std::size_t(1) << state.m;
    const std::size_t threshold =
        e2 >= 64 ? std::numeric_limits<std::size_t>::max() : (std::size_t(1) << e2);
    if (k <= threshold) {
        for (const auto& e : g.entries()) state.y[e.index] += e.value;
    } else {
        if (k < 3)
            throw std::logic_error("adaptive_gains_step: trigger with support below 3 is unreachable");
        state.m = ceil_log2(static_cast<std::size_t>(ceil_log2(k)));
        const AdaptiveGainsParams par = adaptive_gains_params(state.T, state.m, state.C);
        state.p_m = par.p;
        state.q_m = par.q;
        state.eta_m = par.eta;
        std::fill(state.y.begin(), state.y.end(), 0.0); // triggering gain dropped
    }
    return x;
}

double theoretical_bound(BoundKind kind, std::size_t s, std::size_t d, std::size_t T) {
    if (s == 0) throw std::invalid_argument("theoretical_bound: s must be positive");
    if (d == 0) throw std::invalid_argument("theoretical_bound: d must be positive");
    if (s > d) throw std::invalid_argument("theoretical_bound: s cannot exceed d");
    const double sd = static_cast<double>(s);
    const double dd = static_cast<double>(d);
    const double Td = static_cast<double>(T);
    switch (kind) {
    case BoundKind::FullInfoGains:
        if (s < 3)
            throw std::invalid_argument("theoretical_bound: the sparse gains bound requires s >= 3");
        return std::sqrt(2.0 * std::numbers::e * Td * std::log(sd));
    case BoundKind::FullInfoLosses:
        if (d < 2)
            throw std::invalid_argument("theoretical_bound: the sparse losses bound requires d >= 2");
        return std::sqrt(2.0 * sd * Td * std::log(dd) / dd) + std::log(dd);
    case BoundKind::AdaptiveLosses: {
        if (d < 2)
            throw std::invalid_argument("theoretical_bound: the adaptive losses bound requires d >= 2");
        if (T == 0)
            throw std::invalid_argument("theoretical_bound: the adaptive losses bound requires T >= 1");
        const double lnd = std::log(dd);
        return 4.0 * std::sqrt(Td * sd * lnd / dd) +
               std::ceil(std::log(sd)) * lnd / 2.0 +
               5.0 * sd * std::sqrt(lnd / (dd * Td));
    }
    case BoundKind::AdaptiveGains:
        if (T == 0)
            throw std::invalid_argument("theoretical_bound: the adaptive gains bound requires T >= 1");
        return 7.0 * std::sqrt(Td * std::log(sd)) + 4.0 * sd / std::sqrt(Td);
    case BoundKind::BanditLosses:
        if (!(dd / sd >= std::exp(2.0) * (1.0 - 1e-12)))
            throw std::invalid_argument("theoretical_bound: the bandit losses bound requires d/s >= e^2");
        return 2.0 * std::sqrt(std::numbers::e) * std::sqrt(Td * sd * std::log(dd / sd));
    case BoundKind::BanditLossesLower:
        return std::sqrt(sd * Td) / 32.0;
    }
    throw std::invalid_argument("theoretical_bound: unknown bound kind");
}

double full_info_gains_bound(std::size_t s, std::size_t T) {
    if (s == 0) throw std::invalid_argument("full_info_gains_bound: s must be positive");
    if (s < 3) return std::sqrt(static_cast<double>(s) * static_cast<double>(T));
    return theoretical_bound(BoundKind::FullInfoGains, s, s, T);
}

} // namespace sparse_regret
