#pragma once

#include "tscalc/config.hpp"
#include "tscalc/grid_function.hpp"
#include "tscalc/scalar.hpp"
#include "tscalc/scale.hpp"

#include <functional>

namespace tscalc {

/// Which time-scale exponential: e_p (delta) or ê_p (nabla).
enum class ExpKind { Delta, Nabla };

/// Coefficient and origin of a time-scale exponential. A constant p uses
/// the closed product form on uniform grids; a callable p walks the grid.
/// Regressivity (1 + mu*p != 0 for e_p, 1 - nu*p != 0 for ê_p) is checked
/// on the evaluation window.
struct ExpParams {
    ExpKind kind = ExpKind::Delta;
    Scalar p;
    std::function<Scalar(const Point&)> p_fn;  // optional non-constant coefficient
    Point t0 = Rational(0);

    bool constant() const { return !p_fn; }
    Scalar coefficient(const Point& t) const { return constant() ? p : p_fn(t); }

    static ExpParams delta_exp(Scalar p, Point t0 = Rational(0));
    static ExpParams nabla_exp(Scalar p, Point t0 = Rational(0));
};

/// e_p(t, t0) or ê_p(t, t0).
/// Uniform grid, constant p: (1 + cp)^{(t-t0)/c} resp. (1 - cp)^{-(t-t0)/c}.
/// Real line: exp(p (t - t0)). Discrete scales with callable p: the finite
/// product of (1 + mu p) resp. (1 - nu p)^{-1} factors.
Scalar exp_eval(const ExpParams& params, const Point& t, const TimeScale& scale);

/// Diamond-alpha derivative of the exponential by the direct formulas
///   e_p:  [alpha p(t) + (1-alpha) p_rho / (1 + nu p_rho)] e_p(t, t0)
///   ê_p:  [(1-alpha) p(t) + alpha p_sigma / (1 - mu p_sigma)] ê_p(t, t0)
/// valid where sigma(rho(t)) = t and rho(sigma(t)) = t.
Scalar exp_diamond_derivative(const ExpParams& params, const Point& t, const Rational& alpha,
                              const TimeScale& scale);

/// The exponential as a GridFunction (closed-form derivative attached on
/// the real line).
GridFunction exp_function(const ExpParams& params, const TimeScale& scale);

/// Trigonometric and hyperbolic families built from the exponentials with
/// constant coefficient p; hatted variants use ê.
enum class TrigFamily { Sin, Cos, Sinh, Cosh, HatSin, HatCos, HatSinh, HatCosh };

bool trig_is_hatted(TrigFamily family);
const char* trig_name(TrigFamily family);

Scalar trig_eval(TrigFamily family, const Rational& p, const Point& t, const Point& t0,
                 const TimeScale& scale);

/// Diamond-alpha derivative of the family member, evaluated by the closed
/// formulas; requires 1 - nu^2 p^2 != 0 for the
/// unhatted hyperbolics and 1 - mu^2 p^2 != 0 for the hatted ones.
Scalar trig_diamond_derivative(TrigFamily family, const Rational& p, const Point& t,
                               const Point& t0, const Rational& alpha, const TimeScale& scale);

GridFunction trig_function(TrigFamily family, const Rational& p, const Point& t0,
                           const TimeScale& scale);

}  // namespace tscalc
