#include "otto/asymptotics.hpp"

#include <cmath>
#include <string>

#include "otto/errors.hpp"
#include "otto/summation.hpp"

namespace otto::asymptotics {

namespace {

constexpr double kSeriesRelTol = 1e-16;
constexpr int kMaxTerms = 100000;

void check_nome(double q) {
    if (!(q >= 0.0) || !(q < 1.0)) {
        throw DomainError("theta nome must satisfy 0 <= q < 1, got " + std::to_string(q));
    }
}

// sum_{n>=1} n^power q^{n^2 - shift}, stopped once a term drops below
// kSeriesRelTol of the running sum. Terms decay faster than geometrically.
double theta_series(double q, int power, int shift) {
    CompensatedSum acc;
    for (int n = 1; n < kMaxTerms; ++n) {
        const double nn = static_cast<double>(n);
        const double term = std::pow(nn, power) * std::pow(q, nn * nn - shift);
        const double running = acc.value();
        if (n > 1 && term <= kSeriesRelTol * running) {
            break;
        }
        acc.add(term);
    }
    return acc.value();
}

void check_positive(double x, const char* name) {
    if (!(x > 0.0) || std::isinf(x)) {
        throw DomainError(std::string(name) + " must be finite and > 0");
    }
}

}  // namespace

double theta3(double q) {
    check_nome(q);
    return 1.0 + 2.0 * theta_series(q, 0, 0);
}

double theta3_prime(double q) {
    check_nome(q);
    return 2.0 * theta_series(q, 2, 1);
}

double theta3_moment_ratio(double q) {
    check_nome(q);
    return theta_series(q, 2, 1) / theta_series(q, 0, 1);
}

double small_curvature_efficiency(double lambda, double epsilon, double t_ref) {
    check_positive(t_ref, "reference temperature");
    const spectrum::CurvedSpectrum s(lambda);
    const double e0 = s.energy(0);
    const double e1 = s.energy(1);
    const double d0 = s.energy_derivative(0);
    const double d1 = s.energy_derivative(1);
    return (epsilon * d0 / e0) * (1.0 + (e1 * d1) / (e0 * d0) * std::exp(-s.gap(0) / t_ref));
}

SmallCurvatureEstimate small_curvature_estimate(const LimitParams& p, const thermo::TruncationPolicy& policy) {
    check_positive(p.epsilon, "epsilon");
    check_positive(p.t_ref, "reference temperature");
    if (!(p.theta_temp >= 0.0) || std::isinf(p.theta_temp)) {
        throw DomainError("temperature difference must be finite and >= 0");
    }
    if (!(p.lambda - p.epsilon >= 0.0)) {
        throw DomainError("lambda - epsilon must be >= 0");
    }

    // Boltzmann factors over Z are the thermal populations at (lambda, T_A).
    const thermo::GibbsState state(p.lambda, p.t_ref, policy);
    const auto& s = state.spectrum();
    CompensatedSum work_moment, heat_moment;
    for (std::int64_t n = 0; n < state.n_levels(); ++n) {
        const double pn = state.populations()[static_cast<std::size_t>(n)];
        const double e = s.energy(n);
        work_moment.add(pn * s.energy_derivative(n) * e);
        heat_moment.add(pn * e * e);
    }

    const double scale = p.theta_temp / (p.t_ref * p.t_ref);
    SmallCurvatureEstimate out;
    out.w_approx = p.epsilon * scale * work_moment.value();
    out.q_hot_approx = scale * heat_moment.value();
    out.eta_s = small_curvature_efficiency(p.lambda, p.epsilon, p.t_ref);
    out.eta_many_level = p.epsilon * work_moment.value() / heat_moment.value();
    out.n_levels = state.n_levels();
    return out;
}

LargeCurvatureEstimate large_curvature_estimate(double lambda, double epsilon, double t_hot, double t_cold) {
    check_positive(lambda, "lambda");
    check_positive(epsilon, "epsilon");
    check_positive(t_cold, "t_cold");
    if (!(t_hot > t_cold) || std::isinf(t_hot)) {
        throw DomainError("large-curvature estimate needs t_hot > t_cold > 0");
    }

    const double q_h = std::exp(-lambda / (2.0 * t_hot));
    const double q_c = std::exp(-lambda / (2.0 * t_cold));
    const double bracket = theta3_moment_ratio(q_h) - theta3_moment_ratio(q_c);

    LargeCurvatureEstimate out;
    out.w_approx = 0.5 * epsilon * bracket;
    out.q_hot_approx = 0.5 * lambda * bracket;
    out.eta_l = epsilon / lambda;
    return out;
}

double large_gap_shift(spectrum::Level n) {
    if (n < 0) {
        throw DomainError("level index must be >= 0");
    }
    const double m = static_cast<double>(n) + 1.0;
    return m * m;
}

}  // namespace otto::asymptotics
