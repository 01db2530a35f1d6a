#include "otto/search.hpp"

#include <algorithm>

#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "otto/sweep.hpp"

namespace otto::sweep {

TransitionResult find_mode_transition(double lambda_cold, double t_hot, double t_cold, Bracket bracket,
                                      const thermo::TruncationPolicy& policy,
                                      const roots::BisectionOptions& options) {
    const cycle::OttoParams base{lambda_cold, bracket.lo, t_cold, t_hot, policy};
    base.validate();
    auto q_hot = [&](double lambda_hot) {
        auto p = base;
        p.lambda_hot = lambda_hot;
        return cycle::run_cycle(p).q_hot;
    };
    const auto r = roots::bisect(q_hot, bracket.lo, bracket.hi, options);
    return TransitionResult{r.root, r.f_root, r.f_lo, r.f_hi, r.iterations};
}

const PeakCandidate& PeakResult::best() const {
    if (candidates.empty()) {
        throw DomainError("no peak candidates");
    }
    return *std::max_element(candidates.begin(), candidates.end(),
                             [](const auto& a, const auto& b) { return a.work < b.work; });
}

PeakResult find_peak_work(double lambda_cold, double t_hot, double t_cold, Bracket range,
                          const thermo::TruncationPolicy& policy, double tol, std::size_t prescan_points) {
    if (prescan_points < 3) {
        throw DomainError("peak pre-scan needs at least 3 points");
    }
    const cycle::OttoParams base{lambda_cold, range.lo, t_cold, t_hot, policy};
    base.validate();
    auto work = [&](double lambda_hot) {
        auto p = base;
        p.lambda_hot = lambda_hot;
        return cycle::run_cycle(p).work;
    };

    const Axis grid = Axis::range(Parameter::LambdaHot, range.lo, range.hi, prescan_points);
    const auto& x = grid.values;
    std::vector<double> w(x.size());
    std::transform(x.begin(), x.end(), w.begin(), work);

    PeakResult result;
    const std::size_t last = x.size() - 1;
    if (w[0] > w[1]) {
        result.candidates.push_back({x[0], w[0], false});
    }
    for (std::size_t i = 1; i < last; ++i) {
        if (w[i] >= w[i - 1] && w[i] > w[i + 1]) {
            const auto g = roots::golden_section_maximize(work, x[i - 1], x[i + 1], tol);
            // the refined point can only improve on the scanned sample
            if (g.fx >= w[i]) {
                result.candidates.push_back({g.x, g.fx, true});
            } else {
                result.candidates.push_back({x[i], w[i], true});
            }
        }
    }
    if (w[last] > w[last - 1]) {
        result.candidates.push_back({x[last], w[last], false});
    }
    if (result.candidates.empty()) {
        // flat pre-scan
        const auto it = std::max_element(w.begin(), w.end());
        const auto i = static_cast<std::size_t>(it - w.begin());
        result.candidates.push_back({x[i], w[i], i != 0 && i != last});
    }
    result.unimodal = result.candidates.size() == 1 && result.candidates.front().interior;
    return result;
}

}  // namespace otto::sweep
