#pragma once

#include <cstddef>
#include <vector>

#include "sparse_regret/simplex.hpp"

namespace sparse_regret {

// Half squared lp norm restricted to the simplex, 1 < p <= 2. It is
// (p-1)-strongly convex in the lp norm, which is what the sparse gains
// tuning leans on.
struct PNormRegularizer {
    double p;
    double q; // dual exponent, 1/p + 1/q = 1

    explicit PNormRegularizer(double p_value);

    double strong_convexity() const { return p - 1.0; }
};

// Potential F_q(x) = -(q/(q-1)) sum_i x_i^(1-1/q) with q > 1, used by
// the bandit mirror step. Gradient components are -x_i^(-1/q).
struct TsallisPotential {
    double q;

    explicit TsallisPotential(double q_value);
};

// Softmax of eta * cumulative, computed stably: the maximum is
// subtracted before exponentiating, so the output is invariant under
// shifting every coordinate by a constant.
SimplexDistribution logit_map(const std::vector<double>& cumulative, double eta);

// argmax over the simplex of <y, x> - 0.5 ||x||_p^2. Reduced via KKT to
// a one dimensional monotone root problem in the multiplier, solved by
// bisection on [min y - 1, max y]. Throws NumericalError when the root
// finder cannot produce a valid distribution.
SimplexDistribution lp_mirror_map(const std::vector<double>& y, const PNormRegularizer& reg);

double tsallis_value(const std::vector<double>& x, const TsallisPotential& pot);

// Componentwise -x_i^(-1/q); requires strictly positive input.
std::vector<double> tsallis_gradient(const std::vector<double>& x, const TsallisPotential& pot);
std::vector<double> tsallis_gradient(const SimplexDistribution& x, const TsallisPotential& pot);

// Inverse of the gradient: componentwise (-y_i)^(-q); requires y < 0.
// The result is positive but generally not on the simplex.
std::vector<double> tsallis_gradient_inverse(const std::vector<double>& y, const TsallisPotential& pot);

// Bregman divergence D_F(x, z) of the Tsallis potential. x may touch
// the boundary, z must be strictly positive.
double bregman_divergence(const std::vector<double>& x, const std::vector<double>& z,
                          const TsallisPotential& pot);

// argmin over the simplex of D_F(x, z) for strictly positive z. The
// minimizer is x_i = (z_i^(-1/q) + lambda)^(-q) with lambda found by
// bisection; the sum is strictly decreasing in lambda so the root is
// unique. Output weights are floored at 1e-15 and renormalized so
// downstream steps keep strictly positive iterates.
SimplexDistribution bregman_project(const std::vector<double>& z, const TsallisPotential& pot);

} // namespace sparse_regret
