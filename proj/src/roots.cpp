#include "otto/roots.hpp"

#include <cmath>
#include <sstream>

#include "otto/errors.hpp"

namespace otto::roots {

BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       const BisectionOptions& options) {
    if (!(lo < hi)) {
        throw DomainError("bisection bracket needs lo < hi");
    }
    double f_lo = f(lo);
    double f_hi = f(hi);

    BisectionResult r;
    r.f_lo = f_lo;
    r.f_hi = f_hi;
    if (f_lo == 0.0 || f_hi == 0.0) {
        r.root = f_lo == 0.0 ? lo : hi;
        r.lo = r.hi = r.root;
        return r;
    }
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << f_lo << ", f(hi)=" << f_hi;
        throw BracketError(msg.str());
    }

    const double f_scale = std::abs(r.f_lo);
    double mid = 0.5 * (lo + hi);
    double f_mid = f(mid);
    for (r.iterations = 1; r.iterations < options.max_iterations; ++r.iterations) {
        if (f_mid == 0.0) {
            break;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        const double next = 0.5 * (lo + hi);
        if (next == lo || next == hi) {
            break;
        }
        mid = next;
        f_mid = f(mid);
        if (hi - lo <= options.x_tol && std::abs(f_mid) <= options.f_rel_tol * f_scale) {
            break;
        }
    }
    r.root = mid;
    r.f_root = f_mid;
    r.lo = lo;
    r.hi = hi;
    return r;
}

GoldenResult golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol,
                                     int max_iterations) {
    if (!(lo < hi)) {
        throw DomainError("golden-section interval needs lo < hi");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);

    GoldenResult r;
    for (; r.iterations < max_iterations && hi - lo > tol; ++r.iterations) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    if (fc >= fd) {
        r.x = c;
        r.fx = fc;
    } else {
        r.x = d;
        r.fx = fd;
    }
    return r;
}

}  // namespace otto::roots
