#ifndef GRS_ERRORS_HPP
#define GRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grs {

/// Violated precondition or out-of-domain argument.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input file (sample CSV, measure JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}

    double achieved_error;
};

} // namespace grs

#endif
