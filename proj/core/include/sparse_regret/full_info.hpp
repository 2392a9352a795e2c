#pragma once

#include <cstddef>
#include <vector>

#include "sparse_regret/outcome.hpp"
#include "sparse_regret/regularizers.hpp"
#include "sparse_regret/simplex.hpp"

namespace sparse_regret {

// Smallest m >= 0 with 2^m >= k; requires k >= 1.
int ceil_log2(std::size_t k);

struct GainsTuning {
    double p;
    double eta;
};

// Norm exponent and learning rate for s-sparse gains. For s >= 3 the
// exponent is p = 1 + 1/(2 ln s - 1), whose dual is q = 2 ln s so that
// s^(2/q) = e; for s in {1, 2} the exponent falls back to p = 2. In both
// cases eta = sqrt((p - 1) / (T s^(2/q))).
GainsTuning tune_gains(std::size_t s, std::size_t T);

// Learning rate ln(1 + sqrt(2 d ln d / (s T))) for exponential weights
// on s-sparse losses; requires d >= 2.
double tune_losses(std::size_t s, std::size_t d, std::size_t T);

struct OmdGainsConfig {
    std::size_t d = 0;
    std::size_t s = 0;
    std::size_t T = 0;
    double p = 2.0;
    double eta = 0.0;

    static OmdGainsConfig tuned(std::size_t d, std::size_t s, std::size_t T);
};

struct OmdGainsState {
    OmdGainsConfig config;
    std::vector<double> cumulative; // gains absorbed so far

    explicit OmdGainsState(OmdGainsConfig cfg);
};

// Emits the mirror point of eta * cumulative, then absorbs g. The
// distribution therefore never depends on the current outcome.
SimplexDistribution omd_gains_step(OmdGainsState& state, const SparseOutcome& g);

struct EwaState {
    std::size_t d = 0;
    double signed_eta = 0.0; // positive for gains, negative for losses
    std::vector<double> cumulative;

    EwaState(std::size_t dim, double signed_eta_value);
};

SimplexDistribution ewa_step(EwaState& state, const SparseOutcome& outcome);

// 2^(3/4) (sqrt 2 + 1)^(1/2), the constant in the adaptive losses rate.
double adaptive_losses_constant();

// ln(1 + C sqrt(d ln d / (2^m T)))
double adaptive_losses_eta(std::size_t d, std::size_t T, int m);

struct AdaptiveLossState {
    std::size_t d = 0;
    std::size_t T = 0;
    double C = 0.0;
    int m = 1;                   // sparsity regime, threshold 2^m
    double eta_m = 0.0;
    std::vector<double> weights; // strictly positive, kept normalized

    AdaptiveLossState(std::size_t dim, std::size_t horizon);
};

// Exponential weights with a doubling sparsity threshold. A loss whose
// support exceeds 2^m bumps m to ceil_log2 of the support size, resets
// the weights to uniform and is itself dropped from the update.
SimplexDistribution adaptive_losses_step(AdaptiveLossState& state, const SparseOutcome& l);

// (e sqrt 2 (sqrt 2 + 1))^(1/2), the constant in the adaptive gains rate.
double adaptive_gains_constant();

struct AdaptiveGainsParams {
    double p;
    double q;
    double eta;
};

// Regime m parameters: p = 1 + 1/(ln 2 * 2^(m+1) - 1), whose dual
// collapses to q = ln 2 * 2^(m+1), and eta = C sqrt((p-1) / (T 2^(2^(m+1)/q))).
AdaptiveGainsParams adaptive_gains_params(std::size_t T, int m, double C);

struct AdaptiveGainsState {
    std::size_t d = 0;
    std::size_t T = 0;
    double C = 0.0;
    int m = 1; // sparsity regime, threshold 2^(2^m)
    double p_m = 0.0;
    double q_m = 0.0;
    double eta_m = 0.0;
    std::vector<double> y; // gains absorbed in the current regime

    AdaptiveGainsState(std::size_t dim, std::size_t horizon);
};

// Mirror descent on gains with a squared doubling threshold 2^(2^m). A
// gain whose support exceeds it bumps m to ceil_log2(ceil_log2(k)),
// retunes (p, q, eta), resets the cumulative vector and drops the
// triggering gain.
SimplexDistribution adaptive_gains_step(AdaptiveGainsState& state, const SparseOutcome& g);

enum class BoundKind {
    FullInfoGains,     // sqrt(2 e T ln s), needs s >= 3
    FullInfoLosses,    // sqrt(2 s T ln d / d) + ln d, needs d >= 2
    AdaptiveLosses,    // 4 sqrt(T s ln d / d) + ceil(ln s) ln d / 2 + 5 s sqrt(ln d / (d T))
    AdaptiveGains,     // 7 sqrt(T ln s) + 4 s / sqrt(T)
    BanditLosses,      // 2 sqrt(e) sqrt(T s ln(d/s)), needs d/s >= e^2
    BanditLossesLower, // sqrt(s T) / 32
};

// Closed form regret bound for the given setting, with s the (maximal)
// sparsity. Rejects parameters outside a bound's validity range, naming
// the violated condition.
double theoretical_bound(BoundKind kind, std::size_t s, std::size_t d, std::size_t T);

// Gains bound extended below s = 3, where the tuned exponent becomes 2
// and the bound sqrt(s T).
double full_info_gains_bound(std::size_t s, std::size_t T);

} // namespace sparse_regret
