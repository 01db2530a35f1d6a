#include "otto/spectrum.hpp"

#include <cmath>
#include <string>

#include "otto/errors.hpp"

namespace otto::spectrum {

namespace {

void check_lambda(double lambda) {
    // also rejects NaN
    if (!(lambda >= 0.0) || std::isinf(lambda)) {
        throw DomainError("curvature must be finite and >= 0, got " + std::to_string(lambda));
    }
}

void check_level(Level n) {
    if (n < 0) {
        throw DomainError("level index must be >= 0, got " + std::to_string(n));
    }
}

}  // namespace

double gamma_factor(double lambda) {
    check_lambda(lambda);
    return 0.5 * (lambda + std::sqrt(lambda * lambda + 4.0));
}

double gamma_factor_derivative(double lambda) {
    check_lambda(lambda);
    return 0.5 * (1.0 + lambda / std::sqrt(lambda * lambda + 4.0));
}

double energy(Level n, double lambda) { return CurvedSpectrum(lambda).energy(n); }

double energy_derivative(Level n, double lambda) {
    return CurvedSpectrum(lambda).energy_derivative(n);
}

double gap_ratio(Level n, double lambda) {
    const CurvedSpectrum s(lambda);
    return s.gap(n) / s.energy(0);
}

CurvedSpectrum::CurvedSpectrum(double lambda)
    : lambda_(lambda), gamma_(spectrum::gamma_factor(lambda)), gamma_prime_(spectrum::gamma_factor_derivative(lambda)) {}

double CurvedSpectrum::energy(Level n) const {
    check_level(n);
    const double x = static_cast<double>(n);
    return gamma_ * (x + 0.5) + 0.5 * lambda_ * x * x;
}

double CurvedSpectrum::energy_derivative(Level n) const {
    check_level(n);
    const double x = static_cast<double>(n);
    return gamma_prime_ * (x + 0.5) + 0.5 * x * x;
}

double CurvedSpectrum::excitation(Level n) const {
    check_level(n);
    const double x = static_cast<double>(n);
    return x * (gamma_ + 0.5 * lambda_ * x);
}

double CurvedSpectrum::gap(Level n) const {
    check_level(n);
    return gamma_ + 0.5 * lambda_ * (2.0 * static_cast<double>(n) + 1.0);
}

}  // namespace otto::spectrum
