#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "otto/spectrum.hpp"

namespace otto::thermo {

/// Controls where the infinite Boltzmann sums are cut.
struct TruncationPolicy {
    double rel_tol = 1e-12;       ///< max neglected tail / partial sum
    std::int64_t n_max = 100000;  ///< hard cap on summed levels

    /// Throws DomainError unless rel_tol > 0 and n_max >= 2.
    void validate() const;
};

/// Partition function kept in shifted form:
///   Z = exp(-energy_shift / T) * shifted_sum,  energy_shift = E_0.
struct PartitionFunction {
    double shifted_sum = 0.0;
    double energy_shift = 0.0;
    double temperature = 1.0;
    std::int64_t n_levels = 0;
    double tail_bound = 0.0;  ///< certified relative tail of the Z and mean-energy sums

    double log_value() const;
    double value() const;
};

PartitionFunction partition_function(double lambda, double temperature,
                                     const TruncationPolicy& policy = {});

/// Thermal state over the truncated level set, populations renormalized to 1.
class GibbsState {
public:
    GibbsState(double lambda, double temperature, const TruncationPolicy& policy = {});

    double lambda() const noexcept { return spectrum_.lambda(); }
    double temperature() const noexcept { return temperature_; }
    std::int64_t n_levels() const noexcept { return static_cast<std::int64_t>(populations_.size()); }
    std::span<const double> populations() const noexcept { return populations_; }
    const PartitionFunction& partition_function() const noexcept { return partition_; }
    double mean_energy() const noexcept { return mean_energy_; }
    const spectrum::CurvedSpectrum& spectrum() const noexcept { return spectrum_; }

    /// P_n for any n >= 0; beyond the truncation the same
    /// exp(-(E_n - E_0)/T) / shifted_sum rule is applied.
    double population(spectrum::Level n) const;

private:
    spectrum::CurvedSpectrum spectrum_;
    double temperature_;
    PartitionFunction partition_;
    std::vector<double> populations_;
    double mean_energy_ = 0.0;
};

inline GibbsState gibbs_state(double lambda, double temperature, const TruncationPolicy& policy = {}) {
    return GibbsState(lambda, temperature, policy);
}

}  // namespace otto::thermo
