#pragma once

// Test-only oracles, kept independent of the library's evaluation paths:
// monomials by literal iterated integration of 1, derivatives by literal
// difference quotients.

#include "tscalc/monomials.hpp"
#include "tscalc/rational.hpp"
#include "tscalc/scale.hpp"

#include <functional>
#include <map>
#include <utility>

namespace oracles {

using tscalc::MonomialKind;
using tscalc::Point;
using tscalc::Rational;

/// Recursive-integral monomial on a uniform grid offset + step*Z:
///   m_0 = 1,  m_{k+1}(t) = integral of m_k from t0 to t
/// with the delta integral summing step*m_k over [t0, t) and the nabla
/// integral summing over (t0, t], orientation by sign.
class RecursiveMonomial {
public:
    RecursiveMonomial(MonomialKind kind, Rational step, Rational t0)
        : kind_(kind), step_(std::move(step)), t0_(std::move(t0)) {}

    Rational operator()(int k, const Rational& t) {
        if (k == 0) {
            return Rational(1);
        }
        const auto key = std::make_pair(k, t);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
        Rational sum(0);
        if (kind_ == MonomialKind::Forward) {
            if (t > t0_) {
                for (Rational tau = t0_; tau < t; tau += step_) {
                    sum += step_ * (*this)(k - 1, tau);
                }
            } else {
                for (Rational tau = t; tau < t0_; tau += step_) {
                    sum -= step_ * (*this)(k - 1, tau);
                }
            }
        } else {
            if (t > t0_) {
                for (Rational tau = t0_ + step_; tau <= t; tau += step_) {
                    sum += step_ * (*this)(k - 1, tau);
                }
            } else {
                for (Rational tau = t + step_; tau <= t0_; tau += step_) {
                    sum -= step_ * (*this)(k - 1, tau);
                }
            }
        }
        memo_.emplace(key, sum);
        return memo_.at(key);
    }

private:
    MonomialKind kind_;
    Rational step_;
    Rational t0_;
    std::map<std::pair<int, Rational>, Rational> memo_;
};

/// Difference quotients straight from the definitions.
inline Rational delta_quotient(const std::function<Rational(const Rational&)>& f,
                               const Rational& t, const Rational& step) {
    return (f(t + step) - f(t)) / step;
}

inline Rational nabla_quotient(const std::function<Rational(const Rational&)>& f,
                               const Rational& t, const Rational& step) {
    return (f(t) - f(t - step)) / step;
}

}  // namespace oracles
