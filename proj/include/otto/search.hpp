#pragma once

#include <vector>

#include "otto/roots.hpp"
#include "otto/thermo.hpp"

namespace otto::sweep {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct TransitionResult {
    double lambda_hot = 0.0;    ///< curvature where q_hot crosses zero
    double q_hot_at_root = 0.0;
    double q_hot_lo = 0.0;      ///< q_hot at the bracket ends (opposite signs)
    double q_hot_hi = 0.0;
    int iterations = 0;
};

/// Bisection on q_hot(lambda_hot) = 0 with lambda_cold and both temperatures
/// held fixed. Throws BracketError when q_hot does not change sign.
TransitionResult find_mode_transition(double lambda_cold, double t_hot, double t_cold, Bracket bracket,
                                      const thermo::TruncationPolicy& policy = {},
                                      const roots::BisectionOptions& options = {});

struct PeakCandidate {
    double lambda_hot = 0.0;
    double work = 0.0;
    bool interior = true;  ///< false when the maximum sits on a search boundary
};

struct PeakResult {
    std::vector<PeakCandidate> candidates;  ///< sorted by lambda_hot
    bool unimodal = false;                  ///< exactly one interior maximum in the pre-scan

    /// Candidate with the largest work.
    const PeakCandidate& best() const;
};

/// Golden-section maximization of work(lambda_hot) after a uniform pre-scan.
/// Every local maximum found by the pre-scan is refined and reported.
PeakResult find_peak_work(double lambda_cold, double t_hot, double t_cold, Bracket range,
                          const thermo::TruncationPolicy& policy = {}, double tol = 1e-5,
                          std::size_t prescan_points = 100);

}  // namespace otto::sweep
