#pragma once

#include "tscalc/config.hpp"
#include "tscalc/grid_function.hpp"

#include <utility>

namespace tscalc {

/// Direction of differentiation: delta, nabla, or the diamond-alpha
/// convex combination alpha*delta + (1-alpha)*nabla.
struct DerivKind {
    enum class Tag { Delta, Nabla, Diamond };

    Tag tag = Tag::Delta;
    Rational alpha = 1;  // meaningful for Diamond only

    static DerivKind delta() { return {Tag::Delta, Rational(1)}; }
    static DerivKind nabla() { return {Tag::Nabla, Rational(0)}; }
    static DerivKind diamond(Rational alpha);
};

/// Derivative value plus a flag recording that a real-line central
/// difference was used instead of an exact or closed-form path.
struct DerivValue {
    Scalar value;
    bool finite_difference = false;
};

/// Forward difference quotient (f(sigma(t)) - f(t)) / mu(t) on discrete
/// scales; the attached derivative or a central difference on the real line.
DerivValue delta_derivative(const GridFunction& f, const Point& t,
                            const Config& config = default_config());

/// Backward counterpart of delta_derivative.
DerivValue nabla_derivative(const GridFunction& f, const Point& t,
                            const Config& config = default_config());

/// alpha*delta + (1-alpha)*nabla; both one-sided derivatives must exist at t.
DerivValue diamond_derivative(const GridFunction& f, const Point& t, const Rational& alpha,
                              const Config& config = default_config());

DerivValue derivative(const GridFunction& f, const Point& t, const DerivKind& kind,
                      const Config& config = default_config());

/// Diagnostic for the cross relations f_nabla(t) = f_delta(rho(t)) and
/// f_delta(t) = f_nabla(sigma(t)); a side that cannot be evaluated
/// reports false.
std::pair<bool, bool> cross_relation_check(const GridFunction& f, const Point& t,
                                           const Config& config = default_config());

/// Sum of mu(tau)*f(tau) over [a, b) on discrete scales; adaptive Simpson
/// on the real line. Orientation: integral from b to a is the negative.
Scalar delta_integral(const GridFunction& f, const Point& a, const Point& b,
                      const Config& config = default_config());

/// Sum of nu(tau)*f(tau) over (a, b] on discrete scales.
Scalar nabla_integral(const GridFunction& f, const Point& a, const Point& b,
                      const Config& config = default_config());

Scalar diamond_integral(const GridFunction& f, const Point& a, const Point& b,
                        const Rational& alpha, const Config& config = default_config());

/// f differentiated n times in the given direction, as a function on the
/// correspondingly trimmed scale. Each level is memoized.
GridFunction iterated_derivative(const GridFunction& f, const DerivKind& kind, int n,
                                 const Config& config = default_config());

}  // namespace tscalc
