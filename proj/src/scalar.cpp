#include "tscalc/scalar.hpp"

#include "tscalc/errors.hpp"

#include <sstream>

namespace tscalc {

Scalar Scalar::approx(double x) {
    return approx(std::complex<double>(x, 0.0));
}

Scalar Scalar::approx(std::complex<double> z) {
    Scalar s;
    s.exact_ = false;
    s.z_ = z;
    return s;
}

bool Scalar::is_zero() const {
    return exact_ ? (re_ == 0 && im_ == 0) : (z_ == std::complex<double>(0.0, 0.0));
}

bool Scalar::is_real() const {
    return exact_ ? im_ == 0 : z_.imag() == 0.0;
}

const Rational& Scalar::re() const {
    if (!exact_) {
        throw Error("approximate scalar has no exact real part");
    }
    return re_;
}

const Rational& Scalar::im() const {
    if (!exact_) {
        throw Error("approximate scalar has no exact imaginary part");
    }
    return im_;
}

Rational Scalar::rational() const {
    if (!exact_) {
        throw Error("approximate scalar is not an exact rational");
    }
    if (im_ != 0) {
        throw Error("complex scalar is not a real rational: " + str());
    }
    return re_;
}

std::complex<double> Scalar::to_complex() const {
    if (!exact_) {
        return z_;
    }
    return {tscalc::to_double(re_), tscalc::to_double(im_)};
}

Scalar Scalar::conj() const {
    if (exact_) {
        return Scalar(re_, Rational(-im_));
    }
    return approx(std::conj(z_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (exact_ && o.exact_) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    *this = approx(to_complex() + o.to_complex());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (exact_ && o.exact_) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    *this = approx(to_complex() - o.to_complex());
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (exact_ && o.exact_) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    *this = approx(to_complex() * o.to_complex());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (exact_ && o.exact_) {
        const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
        if (norm == 0) {
            throw SingularityError("division by zero");
        }
        Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
        Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    if (o.is_zero()) {
        throw SingularityError("division by zero");
    }
    *this = approx(to_complex() / o.to_complex());
    return *this;
}

Scalar Scalar::operator-() const {
    if (exact_) {
        return Scalar(Rational(-re_), Rational(-im_));
    }
    return approx(-z_);
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    return a.to_complex() == b.to_complex();
}

std::string Scalar::str() const {
    std::ostringstream out;
    if (exact_) {
        if (im_ == 0) {
            return format_rational(re_);
        }
        out << format_rational(re_) << (im_ > 0 ? " + " : " - ")
            << format_rational(rat_abs(im_)) << " i";
        return out.str();
    }
    out.precision(17);
    if (z_.imag() == 0.0) {
        out << z_.real();
    } else {
        out << z_.real() << (z_.imag() >= 0 ? " + " : " - ") << std::abs(z_.imag()) << " i";
    }
    return out.str();
}

Scalar scalar_ipow(const Scalar& base, long exp) {
    if (exp < 0) {
        return Scalar(1) / scalar_ipow(base, -exp);
    }
    Scalar result(1);
    Scalar b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1UL) {
            result *= b;
        }
        e >>= 1UL;
        if (e != 0) {
            b *= b;
        }
    }
    return result;
}

}  // namespace tscalc
