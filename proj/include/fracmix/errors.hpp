#pragma once

#include <stdexcept>
#include <string>

namespace fracmix {

// Argument outside the supported parameter domain (bad order, pole of gamma,
// x on the wrong side of zero, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An internal accuracy target could not be met.  Raised instead of silently
// returning an inaccurate value.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// A runtime audit (positivity, monotonicity, truncation) failed; the
// requested computation refuses to proceed.
class audit_error : public std::runtime_error {
public:
    explicit audit_error(const std::string& what) : std::runtime_error(what) {}
};

// Observation data violate a solvability bracket; recovery is not attempted.
class solvability_error : public std::runtime_error {
public:
    explicit solvability_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fracmix
