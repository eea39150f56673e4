#pragma once

#include "tscalc/calculus.hpp"
#include "tscalc/config.hpp"
#include "tscalc/scalar.hpp"
#include "tscalc/scale.hpp"

#include <utility>

namespace tscalc {

/// Forward monomials h_k are iterated delta-antiderivatives of 1;
/// backward monomials ĥ_k are their nabla counterparts.
enum class MonomialKind { Forward, Backward };

/// t(t-1)...(t-k+1); k = 0 gives 1. Exact for rational t.
Rational falling_factorial(const Rational& t, int k);

/// t(t+1)...(t+k-1); k = 0 gives 1.
Rational rising_factorial(const Rational& t, int k);

Rational factorial(int k);

/// Generalized monomial h_k(t, t0) or ĥ_k(t, t0) on the given scale.
///
/// Uniform grids use the exact closed forms c^k * x-falling(k) / k! and
/// c^k * x-rising(k) / k! with x = (t - t0)/c; the real line uses
/// (t - t0)^k / k! in floating point; finite grids run the recursive
/// integral definition (memoized per grid, kind, and origin).
Scalar monomial(MonomialKind kind, int k, const Point& t, const Point& t0,
                const TimeScale& scale, const Config& config = default_config());

/// Both sides of the duality identity ĥ_k(t,t0) = (-1)^k h_k(t0,t);
/// diagnostic, the two values should be equal.
std::pair<Scalar, Scalar> duality(int k, const Point& t, const Point& t0,
                                  const TimeScale& scale,
                                  const Config& config = default_config());

/// Derivative of the order-k monomial in the requested direction,
/// evaluated by the closed differentiation rules:
///   forward/delta    ->  h_{k-1}
///   backward/nabla   ->  ĥ_{k-1}
///   forward/nabla    ->  sum_{j=0}^{k-1} (-1)^j nu(t)^j h_{k-1-j}
///   backward/delta   ->  sum_{j=0}^{k-1} mu(t)^j ĥ_{k-1-j}
///   diamond(alpha)   ->  the convex combinations of the above
/// k = 0 gives 0 in every direction.
Scalar monomial_derivative(MonomialKind kind, int k, const Point& t, const Point& t0,
                           const TimeScale& scale, const DerivKind& dkind,
                           const Config& config = default_config());

/// h_k(., t0) or ĥ_k(., t0) as a GridFunction (closed-form derivative
/// attached on the real line).
GridFunction monomial_function(MonomialKind kind, int k, const Point& t0,
                               const TimeScale& scale,
                               const Config& config = default_config());

}  // namespace tscalc
