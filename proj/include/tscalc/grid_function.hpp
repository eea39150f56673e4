#pragma once

#include "tscalc/scalar.hpp"
#include "tscalc/scale.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace tscalc {

/// A function on a (possibly trimmed) time scale, given either as a
/// closed-form evaluator or as sampled values on grid points.
///
/// Evaluators must be total on the domain and reentrant; a GridFunction
/// is safe to evaluate from several threads.
class GridFunction {
public:
    using Evaluator = std::function<Scalar(const Point&)>;

    GridFunction(TrimmedScale domain, Evaluator eval);
    GridFunction(TimeScale scale, Evaluator eval);

    /// Sampled function; evaluation off the sampled points throws
    /// DomainError. Declared exact when every sample is exact.
    static GridFunction from_samples(TimeScale scale,
                                     std::vector<std::pair<Point, Scalar>> samples);

    static GridFunction constant(TimeScale scale, Scalar value);

    const TrimmedScale& domain() const { return domain_; }
    const TimeScale& scale() const { return domain_.base(); }

    /// Evaluates at t; throws DomainError outside the domain.
    Scalar operator()(const Point& t) const;

    /// Attaches a closed-form derivative (used on the real line instead of
    /// finite differences).
    GridFunction with_derivative(Evaluator derivative) const;
    bool has_derivative() const { return static_cast<bool>(derivative_); }
    Scalar derivative_at(const Point& t) const;

    /// Same function with a lock-guarded value cache around the evaluator.
    GridFunction memoized() const;

    /// Declared exactness: rational in, rational out. Unset for plain
    /// closed-form evaluators.
    std::optional<bool> declared_exact() const { return declared_exact_; }
    GridFunction declare_exact(bool exact) const;

private:
    TrimmedScale domain_;
    Evaluator eval_;
    Evaluator derivative_;
    std::optional<bool> declared_exact_;
};

}  // namespace tscalc
