#pragma once

#include <functional>

namespace otto::roots {

struct BisectionOptions {
    double x_tol = 1e-6;      ///< final bracket width
    double f_rel_tol = 1e-8;  ///< |f(root)| <= f_rel_tol * |f(lo)| also required
    int max_iterations = 200;
};

struct BisectionResult {
    double root = 0.0;
    double f_root = 0.0;
    double f_lo = 0.0;  ///< f at the original lower end
    double f_hi = 0.0;  ///< f at the original upper end
    double lo = 0.0;    ///< final bracket
    double hi = 0.0;
    int iterations = 0;
};

/// Bisection on [lo, hi]. Throws BracketError if f(lo) and f(hi) share a sign.
/// Stops when the bracket is narrower than x_tol and the residual test holds,
/// or when the bracket cannot shrink further in double precision.
BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       const BisectionOptions& options = {});

struct GoldenResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

/// Golden-section maximization of a unimodal f on [lo, hi] to bracket width tol.
GoldenResult golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double tol = 1e-5, int max_iterations = 500);

}  // namespace otto::roots
