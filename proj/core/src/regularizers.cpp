#include "sparse_regret/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sparse_regret/errors.hpp"

namespace sparse_regret {
namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// a^b for a >= 0 in exp/log form; keeps exponents near 1 accurate.
double pow_el(double a, double b) {
    if (a <= 0.0) return 0.0;
    return std::exp(b * std::log(a));
}

} // namespace

PNormRegularizer::PNormRegularizer(double p_value) : p(p_value), q(0.0) {
    if (!(p > 1.0 && p <= 2.0))
        throw std::invalid_argument("PNormRegularizer: p must lie in (1, 2]");
    q = p / (p - 1.0);
}

TsallisPotential::TsallisPotential(double q_value) : q(q_value) {
    if (!(q > 1.0)) throw std::invalid_argument("TsallisPotential: q must exceed 1");
}

SimplexDistribution logit_map(const std::vector<double>& cumulative, double eta) {
    if (cumulative.empty()) throw std::invalid_argument("logit_map: empty input");
    if (!std::isfinite(eta) || !all_finite(cumulative))
        throw std::invalid_argument("logit_map: inputs must be finite");
    double top = -std::numeric_limits<double>::infinity();
    for (double c : cumulative) top = std::max(top, eta * c);
    std::vector<double> w(cumulative.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(eta * cumulative[i] - top);
    return normalize_to_simplex(std::move(w));
}

SimplexDistribution lp_mirror_map(const std::vector<double>& y, const PNormRegularizer& reg) {
    if (y.empty()) throw std::invalid_argument("lp_mirror_map: empty input");
    if (!all_finite(y)) throw std::invalid_argument("lp_mirror_map: inputs must be finite");
    const double alpha = 1.0 / (reg.p - 1.0);
    const double expo = (2.0 - reg.p) / reg.p;
    // The maximizer is x_i = ((y_i - lam)_+)^(1/(p-1)) / N with lam the
    // unique root of A(lam) = B(lam), where A is the unnormalized mass
    // and B the consistency factor ||x||_p^(2-p) expressed through the
    // same truncations. A - B is strictly decreasing through the root.
    auto residual = [&](double lam) {
        double a = 0.0, sq = 0.0;
        for (double yi : y) {
            double w = yi - lam;
            if (w > 0.0) {
                a += pow_el(w, alpha);
                sq += pow_el(w, reg.q);
            }
        }
        double b = sq > 0.0 ? pow_el(sq, expo) : 0.0; // expo = 0 gives b = 1 for p = 2
        return a - b;
    };
    double lo = *std::min_element(y.begin(), y.end()) - 1.0;
    double hi = *std::max_element(y.begin(), y.end());
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (residual(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
    }
    const double lam = 0.5 * (lo + hi);
    std::vector<double> x(y.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        double w = y[i] - lam;
        x[i] = w > 0.0 ? pow_el(w, alpha) : 0.0;
        sum += x[i];
    }
    if (!(sum > 0.0) || !std::isfinite(sum))
        throw NumericalError("lp_mirror_map: bisection failed to locate the multiplier");
    for (double& v : x) v /= sum;
    return normalize_to_simplex(std::move(x));
}

double tsallis_value(const std::vector<double>& x, const TsallisPotential& pot) {
    const double e = 1.0 - 1.0 / pot.q;
    double sum = 0.0;
    for (double xi : x) {
        if (!(xi >= 0.0) || !std::isfinite(xi))
            throw std::invalid_argument("tsallis_value: x must be finite and nonnegative");
        sum += pow_el(xi, e);
    }
    return -(pot.q / (pot.q - 1.0)) * sum;
}

std::vector<double> tsallis_gradient(const std::vector<double>& x, const TsallisPotential& pot) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !std::isfinite(x[i]))
            throw std::invalid_argument("tsallis_gradient: x must be strictly positive");
        g[i] = -std::exp(-(1.0 / pot.q) * std::log(x[i]));
    }
    return g;
}

std::vector<double> tsallis_gradient(const SimplexDistribution& x, const TsallisPotential& pot) {
    return tsallis_gradient(x.weights(), pot);
}

std::vector<double> tsallis_gradient_inverse(const std::vector<double>& y, const TsallisPotential& pot) {
    std::vector<double> z(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] < 0.0) || !std::isfinite(y[i]))
            throw std::invalid_argument("tsallis_gradient_inverse: y must be strictly negative");
        z[i] = std::exp(-pot.q * std::log(-y[i]));
    }
    return z;
}

double bregman_divergence(const std::vector<double>& x, const std::vector<double>& z,
                          const TsallisPotential& pot) {
    if (x.size() != z.size())
        throw std::invalid_argument("bregman_divergence: dimension mismatch");
    const std::vector<double> gz = tsallis_gradient(z, pot);
    double inner = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) inner += gz[i] * (x[i] - z[i]);
    return tsallis_value(x, pot) - tsallis_value(z, pot) - inner;
}

SimplexDistribution bregman_project(const std::vector<double>& z, const TsallisPotential& pot) {
    const std::size_t d = z.size();
    if (d == 0) throw std::invalid_argument("bregman_project: empty input");
    const double q = pot.q;
    std::vector<double> g(d);
    double gmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d; ++i) {
        if (!(z[i] > 0.0) || !std::isfinite(z[i]))
            throw std::invalid_argument("bregman_project: z must be strictly positive");
        g[i] = std::exp(-(1.0 / q) * std::log(z[i]));
        gmin = std::min(gmin, g[i]);
    }
    // Candidate x_i(lam) = (g_i + lam)^(-q); the total mass is strictly
    // decreasing in lam and blows up as lam approaches -gmin from above.
    auto mass = [&](double lam) {
        double sum = 0.0;
        for (double gi : g) sum += std::exp(-q * std::log(gi + lam));
        return sum;
    };
    double lo = -gmin + 1e-15;
    double step = std::max(1.0, std::abs(lo));
    double hi = lo + step;
    int grow = 0;
    while (mass(hi) > 1.0) {
        step *= 2.0;
        hi = lo + step;
        if (++grow > 200)
            throw NumericalError("bregman_project: failed to bracket the multiplier");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval shrunk to a ulp
        (mass(mid) > 1.0 ? lo : hi) = mid;
    }
    const double lam = 0.5 * (lo + hi);
    std::vector<double> x(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        x[i] = std::exp(-q * std::log(g[i] + lam));
        sum += x[i];
    }
    if (!std::isfinite(sum) || std::abs(sum - 1.0) > kSimplexSumTolerance)
        throw NumericalError("bregman_project: multiplier bisection did not reach the simplex");
    return normalize_to_simplex(std::move(x), 1e-15);
}

} // namespace sparse_regret
