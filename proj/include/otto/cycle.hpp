#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "otto/thermo.hpp"

namespace otto::cycle {

// Four-stroke Otto cycle between a cold bath at curvature lambda_cold and a
// hot bath at curvature lambda_hot:
//
//   A (lambda_hot) --hot isochore--> B (lambda_hot, thermal at t_hot)
//   B --adiabat--> C (lambda_cold)  --cold isochore--> D (thermal at t_cold)
//   D --adiabat--> A
//
// Adiabats carry populations unchanged, so A holds the (t_cold, lambda_cold)
// thermal populations on the lambda_hot spectrum.
//
// Signs: q_hot > 0 is absorbed from the hot bath, q_cold_out > 0 is
// rejected to the cold bath, work > 0 is extracted.

struct OttoParams {
    double lambda_cold = 0.0;
    double lambda_hot = 0.0;
    double t_cold = 0.1;
    double t_hot = 1.0;
    thermo::TruncationPolicy policy{};

    /// Requires t_hot > t_cold > 0 and both curvatures >= 0. lambda_hot < lambda_cold is allowed.
    void validate() const;
};

enum class OperationMode { Engine, Refrigerator, Dissipator };

std::string_view to_string(OperationMode mode);

struct CycleOutcome {
    double q_hot = 0.0;
    double q_cold_out = 0.0;
    double work = 0.0;
    std::optional<double> efficiency;  // Engine only
    std::optional<double> cop;         // Refrigerator only
    OperationMode mode = OperationMode::Dissipator;
    std::int64_t n_levels = 0;

    double q_cold_absorbed() const noexcept { return -q_cold_out; }
};

struct StrokeQuantities {
    double w_expansion = 0.0;    // B -> C
    double w_compression = 0.0;  // D -> A
    double q_hot = 0.0;
    double q_cold_absorbed = 0.0;
};

/// Exact-zero threshold used by classify_mode.
inline constexpr double kModeTieTolerance = 1e-12;

CycleOutcome run_cycle(const OttoParams& params);
StrokeQuantities stroke_quantities(const OttoParams& params);

OperationMode classify_mode(double q_hot, double q_cold_absorbed, double work);

double carnot_efficiency(double t_hot, double t_cold);

}  // namespace otto::cycle
