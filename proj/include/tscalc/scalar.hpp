#pragma once

#include "tscalc/rational.hpp"

#include <complex>
#include <string>

namespace tscalc {

/// Numeric value of the engine: either an exact complex rational (the
/// representation used on discrete scales) or an approximate complex
/// double (real-line evaluations, truncated tails).
///
/// Arithmetic is contagious: combining an exact and an approximate value
/// yields an approximate one.
class Scalar {
public:
    Scalar() : exact_(true) {}
    Scalar(int value) : exact_(true), re_(value) {}
    Scalar(long value) : exact_(true), re_(value) {}
    Scalar(Rational re) : exact_(true), re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : exact_(true), re_(std::move(re)), im_(std::move(im)) {}

    static Scalar approx(double x);
    static Scalar approx(std::complex<double> z);
    static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

    bool exact() const { return exact_; }
    bool is_zero() const;
    bool is_real() const;

    /// Exact accessors; throw Error on approximate values.
    const Rational& re() const;
    const Rational& im() const;
    /// Exact real value; throws Error when approximate or non-real.
    Rational rational() const;

    std::complex<double> to_complex() const;
    double to_double() const { return to_complex().real(); }
    double abs() const { return std::abs(to_complex()); }

    Scalar conj() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact pairs compare exactly; any approximate operand compares as
    /// complex doubles.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q", "p/q + r/s i" for exact values; decimal rendering otherwise.
    std::string str() const;

private:
    bool exact_;
    Rational re_, im_;
    std::complex<double> z_{};
};

/// value^exp with signed integer exponent.
Scalar scalar_ipow(const Scalar& base, long exp);

}  // namespace tscalc
