#include "otto/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "otto/errors.hpp"
#include "otto/summation.hpp"

namespace otto::cycle {

namespace {

struct Sums {
    double q_hot;
    double q_cold_absorbed;
    double work;
    double w_expansion;
    double w_compression;
    std::int64_t n_levels;
};

// All sums run over the same index set: the longer of the two truncations,
// with the shorter population list zero-padded.
Sums cycle_sums(const OttoParams& p) {
    p.validate();
    const thermo::GibbsState hot(p.lambda_hot, p.t_hot, p.policy);    // state B
    const thermo::GibbsState cold(p.lambda_cold, p.t_cold, p.policy); // state D (= A populations)

    const auto pb = hot.populations();
    const auto pa = cold.populations();
    const std::size_t n_levels = std::max(pb.size(), pa.size());

    CompensatedSum q_hot, q_cold, work, w_exp, w_comp;
    for (std::size_t i = 0; i < n_levels; ++i) {
        const auto n = static_cast<spectrum::Level>(i);
        const double e_hot = hot.spectrum().energy(n);
        const double e_cold = cold.spectrum().energy(n);
        const double p_b = i < pb.size() ? pb[i] : 0.0;
        const double p_a = i < pa.size() ? pa[i] : 0.0;
        const double dp = p_b - p_a;

        q_hot.add(e_hot * dp);
        q_cold.add(-e_cold * dp);
        work.add((e_hot - e_cold) * dp);
        w_exp.add(p_b * (e_hot - e_cold));
        w_comp.add(p_a * (e_cold - e_hot));
    }
    return Sums{q_hot.value(), q_cold.value(), work.value(), w_exp.value(), w_comp.value(),
                static_cast<std::int64_t>(n_levels)};
}

}  // namespace

void OttoParams::validate() const {
    if (!(lambda_cold >= 0.0) || !(lambda_hot >= 0.0) || std::isinf(lambda_cold) || std::isinf(lambda_hot)) {
        throw DomainError("curvatures must be finite and >= 0");
    }
    if (!(t_cold > 0.0) || !(t_hot > t_cold) || std::isinf(t_hot)) {
        std::ostringstream msg;
        msg << "temperatures must satisfy t_hot > t_cold > 0 (got t_hot=" << t_hot << ", t_cold=" << t_cold
            << ")";
        throw DomainError(msg.str());
    }
    policy.validate();
}

std::string_view to_string(OperationMode mode) {
    switch (mode) {
        case OperationMode::Engine: return "engine";
        case OperationMode::Refrigerator: return "refrigerator";
        case OperationMode::Dissipator: return "dissipator";
    }
    return "dissipator";
}

CycleOutcome run_cycle(const OttoParams& params) {
    const Sums s = cycle_sums(params);

    CycleOutcome out;
    out.q_hot = s.q_hot;
    out.q_cold_out = -s.q_cold_absorbed;
    out.work = s.work;
    out.n_levels = s.n_levels;
    out.mode = classify_mode(s.q_hot, s.q_cold_absorbed, s.work);
    if (out.mode == OperationMode::Engine) {
        out.efficiency = s.work / s.q_hot;
    } else if (out.mode == OperationMode::Refrigerator) {
        out.cop = s.q_cold_absorbed / std::abs(s.work);
    }
    return out;
}

StrokeQuantities stroke_quantities(const OttoParams& params) {
    const Sums s = cycle_sums(params);
    return StrokeQuantities{s.w_expansion, s.w_compression, s.q_hot, s.q_cold_absorbed};
}

OperationMode classify_mode(double q_hot, double q_cold_absorbed, double work) {
    const double tol = kModeTieTolerance;
    if (work > tol && q_hot > tol) {
        return OperationMode::Engine;
    }
    if (work < -tol && q_hot < -tol && q_cold_absorbed > tol) {
        return OperationMode::Refrigerator;
    }
    return OperationMode::Dissipator;
}

double carnot_efficiency(double t_hot, double t_cold) {
    if (!(t_cold > 0.0) || !(t_hot > t_cold) || std::isinf(t_hot)) {
        throw DomainError("carnot efficiency needs t_hot > t_cold > 0");
    }
    return 1.0 - t_cold / t_hot;
}

}  // namespace otto::cycle
