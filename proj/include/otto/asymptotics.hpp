#pragma once

#include <cstdint>

#include "otto/spectrum.hpp"
#include "otto/thermo.hpp"

namespace otto::asymptotics {

/// Jacobi theta_3(z = 0, q) = 1 + 2 sum_{n>=1} q^{n^2}, for 0 <= q < 1.
double theta3(double q);

/// d theta_3 / dq = 2 sum_{n>=1} n^2 q^{n^2 - 1}.
double theta3_prime(double q);

/// q theta_3'(q) / (theta_3(q) - 1), evaluated as
/// sum n^2 q^{n^2-1} / sum q^{n^2-1} so that q -> 0 gives 1 instead of 0/0.
double theta3_moment_ratio(double q);

struct LimitParams {
    double lambda = 0.0;      ///< hot-side curvature; cold side is lambda - epsilon
    double epsilon = 0.0;     ///< curvature difference, > 0
    double theta_temp = 0.0;  ///< T_h - T_c
    double t_ref = 1.0;       ///< expansion temperature T_A
};

struct SmallCurvatureEstimate {
    double w_approx = 0.0;
    double q_hot_approx = 0.0;
    double eta_s = 0.0;           ///< two-level compact form
    double eta_many_level = 0.0;  ///< w_approx / q_hot_approx over all retained levels
    std::int64_t n_levels = 0;
};

/// Leading order in epsilon and theta around (lambda, t_ref). Intended for lambda <~ 0.1.
SmallCurvatureEstimate small_curvature_estimate(const LimitParams& params,
                                                const thermo::TruncationPolicy& policy = {});

/// Two-level efficiency estimate alone:
///   (eps E0'/E0) (1 + (E1 E1')/(E0 E0') exp(-(E1 - E0)/T_A)).
double small_curvature_efficiency(double lambda, double epsilon, double t_ref);

struct LargeCurvatureEstimate {
    double w_approx = 0.0;
    double q_hot_approx = 0.0;
    double eta_l = 0.0;  ///< epsilon / lambda
};

/// Theta-function forms with q_h = exp(-lambda/2T_h), q_c = exp(-lambda/2T_c).
/// Intended for lambda >~ 5, epsilon << lambda.
LargeCurvatureEstimate large_curvature_estimate(double lambda, double epsilon, double t_hot, double t_cold);

/// Leading large-lambda level shift per unit epsilon: (n + 1)^2.
double large_gap_shift(spectrum::Level n);

}  // namespace otto::asymptotics
