#pragma once

#include <stdexcept>
#include <string>

namespace tscalc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point is off-scale, outside a trimmed domain, or a domain
/// precondition of an operation fails.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Regressivity violation or a vanishing denominator in a closed formula.
class SingularityError : public Error {
public:
    explicit SingularityError(const std::string& what) : Error(what) {}
};

/// A series was judged divergent and its value withheld.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

}  // namespace tscalc
