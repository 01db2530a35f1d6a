#pragma once

#include <stdexcept>
#include <string>

namespace otto {

/// Parameter outside its mathematical domain (negative curvature, T <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series could not be certified within the level cap.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved_bound_(achieved_bound) {}

    /// Relative tail bound reached when the cap was hit.
    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// Root search bracket without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace otto
