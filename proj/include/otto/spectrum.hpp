#pragma once

#include <cstdint>

namespace otto::spectrum {

using Level = std::int64_t;

// Spectrum of the harmonic oscillator constrained to a circle of curvature
// lambda = 1/R^2, in natural units (m = hbar = omega = 1):
//
//   E_n(lambda) = gamma(lambda) (n + 1/2) + (lambda / 2) n^2
//   gamma(lambda) = (lambda + sqrt(lambda^2 + 4)) / 2
//
// lambda = 0 recovers the flat oscillator E_n = n + 1/2 exactly.

double gamma_factor(double lambda);

/// d gamma / d lambda = (1 + lambda / sqrt(lambda^2 + 4)) / 2.
double gamma_factor_derivative(double lambda);

double energy(Level n, double lambda);
double energy_derivative(Level n, double lambda);

/// (E_{n+1} - E_n) / E_0, evaluated from the closed-form gap.
double gap_ratio(Level n, double lambda);

/// Spectrum at a fixed curvature, with gamma and gamma' evaluated once.
class CurvedSpectrum {
public:
    explicit CurvedSpectrum(double lambda);

    double lambda() const noexcept { return lambda_; }
    double gamma() const noexcept { return gamma_; }
    double gamma_derivative() const noexcept { return gamma_prime_; }

    double energy(Level n) const;
    double energy_derivative(Level n) const;

    /// E_n - E_0 = gamma n + lambda n^2 / 2, free of cancellation.
    double excitation(Level n) const;

    /// E_{n+1} - E_n = gamma + lambda (2n + 1) / 2.
    double gap(Level n) const;

private:
    double lambda_;
    double gamma_;
    double gamma_prime_;
};

}  // namespace otto::spectrum
