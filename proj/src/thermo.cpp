#include "otto/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "otto/errors.hpp"
#include "otto/summation.hpp"

namespace otto::thermo {

namespace {

void check_temperature(double t) {
    if (!(t > 0.0) || std::isinf(t)) {
        throw DomainError("temperature must be finite and > 0, got " + std::to_string(t));
    }
}

struct Weights {
    std::vector<double> terms;  // exp(-(E_n - E_0)/T), n = 0..N-1
    double sum = 0.0;
    double tail_bound = 0.0;    // relative, max over both sums
};

// Sums shifted Boltzmann factors t_n = exp(-(E_n - E_0)/T) until both the
// neglected tail of sum t_n and of sum E_n t_n are certified below rel_tol
// of their partial sums. For k >= 0, with a = gamma + lambda n:
//   E_{n+k} - E_n = k a + lambda k^2 / 2,   t_{n+k} <= t_n r^k,  r = exp(-a/T)
// so
//   sum_k t_{n+k}         <= t_n / (1 - r)
//   sum_k E_{n+k} t_{n+k} <= t_n [E_n/(1-r) + a r/(1-r)^2 + (lambda/2) r(1+r)/(1-r)^3].
Weights boltzmann_weights(const spectrum::CurvedSpectrum& s, double temperature,
                          const TruncationPolicy& policy) {
    Weights w;
    CompensatedSum z_acc;
    CompensatedSum e_acc;
    w.terms.push_back(1.0);
    z_acc.add(1.0);
    e_acc.add(s.energy(0));

    for (spectrum::Level n = 1;; ++n) {
        const double t = std::exp(-s.excitation(n) / temperature);
        const double e_n = s.energy(n);
        const double a = s.gamma() + s.lambda() * static_cast<double>(n);
        const double r = std::exp(-a / temperature);
        const double one_minus_r = -std::expm1(-a / temperature);

        const double z_tail = t / one_minus_r;
        const double e_tail = t * (e_n / one_minus_r + a * r / (one_minus_r * one_minus_r) +
                                   0.5 * s.lambda() * r * (1.0 + r) / (one_minus_r * one_minus_r * one_minus_r));
        const double z_rel = z_tail / z_acc.value();
        const double e_rel = e_tail / e_acc.value();
        const double bound = std::max(z_rel, e_rel);
        if (bound <= policy.rel_tol) {
            w.sum = z_acc.value();
            w.tail_bound = bound;
            return w;
        }
        if (n >= policy.n_max) {
            std::ostringstream msg;
            msg << "partition sum not converged after " << n << " levels (lambda=" << s.lambda()
                << ", T=" << temperature << ", tail bound " << bound << " > " << policy.rel_tol << ")";
            throw TruncationError(msg.str(), bound);
        }
        w.terms.push_back(t);
        z_acc.add(t);
        e_acc.add(e_n * t);
    }
}

}  // namespace

void TruncationPolicy::validate() const {
    if (!(rel_tol > 0.0) || std::isinf(rel_tol)) {
        throw DomainError("rel_tol must be > 0");
    }
    if (n_max < 2) {
        throw DomainError("n_max must be >= 2");
    }
}

double PartitionFunction::log_value() const {
    return -energy_shift / temperature + std::log(shifted_sum);
}

double PartitionFunction::value() const { return std::exp(log_value()); }

PartitionFunction partition_function(double lambda, double temperature, const TruncationPolicy& policy) {
    check_temperature(temperature);
    policy.validate();
    const spectrum::CurvedSpectrum s(lambda);
    const Weights w = boltzmann_weights(s, temperature, policy);
    return PartitionFunction{w.sum, s.energy(0), temperature,
                             static_cast<std::int64_t>(w.terms.size()), w.tail_bound};
}

GibbsState::GibbsState(double lambda, double temperature, const TruncationPolicy& policy)
    : spectrum_(lambda), temperature_(temperature) {
    check_temperature(temperature);
    policy.validate();

    Weights w = boltzmann_weights(spectrum_, temperature, policy);
    partition_ = PartitionFunction{w.sum, spectrum_.energy(0), temperature,
                                   static_cast<std::int64_t>(w.terms.size()), w.tail_bound};

    populations_ = std::move(w.terms);
    CompensatedSum energy;
    for (std::size_t n = 0; n < populations_.size(); ++n) {
        populations_[n] /= w.sum;
        energy.add(populations_[n] * spectrum_.energy(static_cast<spectrum::Level>(n)));
    }
    mean_energy_ = energy.value();
}

double GibbsState::population(spectrum::Level n) const {
    if (n >= 0 && n < n_levels()) {
        return populations_[static_cast<std::size_t>(n)];
    }
    return std::exp(-spectrum_.excitation(n) / temperature_) / partition_.shifted_sum;
}

}  // namespace otto::thermo
