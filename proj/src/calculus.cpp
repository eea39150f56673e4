#include "tscalc/calculus.hpp"

#include "tscalc/errors.hpp"

#include <cmath>
#include <complex>
#include <functional>

namespace tscalc {

namespace {

using Cplx = std::complex<double>;

Cplx simpson_estimate(double a, double b, const Cplx& fa, const Cplx& fm, const Cplx& fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

Cplx adaptive_simpson(const std::function<Cplx(double)>& f, double a, double b, double eps,
                      const Cplx& fa, const Cplx& fm, const Cplx& fb, const Cplx& whole,
                      int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Cplx flm = f(lm);
    const Cplx frm = f(rm);
    const Cplx left = simpson_estimate(a, m, fa, flm, fm);
    const Cplx right = simpson_estimate(m, b, fm, frm, fb);
    const Cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, eps / 2.0, fa, flm, fm, left, depth - 1) +
           adaptive_simpson(f, m, b, eps / 2.0, fm, frm, fb, right, depth - 1);
}

Scalar quadrature(const GridFunction& f, double a, double b, double eps) {
    auto eval = [&f](double x) { return f(Point(x)).to_complex(); };
    const Cplx fa = eval(a);
    const Cplx fb = eval(b);
    const Cplx fm = eval(0.5 * (a + b));
    const Cplx whole = simpson_estimate(a, b, fa, fm, fb);
    return Scalar::approx(adaptive_simpson(eval, a, b, eps, fa, fm, fb, whole, 48));
}

DerivValue real_line_derivative(const GridFunction& f, const Point& t, const Config& config) {
    if (f.has_derivative()) {
        return {f.derivative_at(t), false};
    }
    const Rational h(config.fd_step);
    const Cplx hi = f(t + h).to_complex();
    const Cplx lo = f(t - h).to_complex();
    const Cplx value = (hi - lo) / (2.0 * config.fd_step);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw DomainError("central difference is not finite at t = " + format_rational(t));
    }
    return {Scalar::approx(value), true};
}

}  // namespace

DerivKind DerivKind::diamond(Rational alpha) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("diamond weight must lie in [0, 1]");
    }
    return {Tag::Diamond, std::move(alpha)};
}

DerivValue delta_derivative(const GridFunction& f, const Point& t, const Config& config) {
    const TimeScale& scale = f.scale();
    if (scale.is_real()) {
        f.domain().require(t);
        return real_line_derivative(f, t, config);
    }
    f.domain().require(t);
    const Point fwd = scale.sigma(t);
    if (fwd == t || !f.domain().contains(fwd)) {
        throw DomainError("not delta-differentiable at t = " + format_rational(t));
    }
    const Scalar num = f(fwd) - f(t);
    return {num / Scalar(Rational(fwd - t)), false};
}

DerivValue nabla_derivative(const GridFunction& f, const Point& t, const Config& config) {
    const TimeScale& scale = f.scale();
    if (scale.is_real()) {
        f.domain().require(t);
        return real_line_derivative(f, t, config);
    }
    f.domain().require(t);
    const Point back = scale.rho(t);
    if (back == t || !f.domain().contains(back)) {
        throw DomainError("not nabla-differentiable at t = " + format_rational(t));
    }
    const Scalar num = f(t) - f(back);
    return {num / Scalar(Rational(t - back)), false};
}

DerivValue diamond_derivative(const GridFunction& f, const Point& t, const Rational& alpha,
                              const Config& config) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("diamond weight must lie in [0, 1]");
    }
    // Both one-sided derivatives must exist; points where only one does are
    // rejected rather than guessed.
    const DerivValue fwd = delta_derivative(f, t, config);
    const DerivValue back = nabla_derivative(f, t, config);
    Scalar value = Scalar(alpha) * fwd.value + Scalar(Rational(1 - alpha)) * back.value;
    return {std::move(value), fwd.finite_difference || back.finite_difference};
}

DerivValue derivative(const GridFunction& f, const Point& t, const DerivKind& kind,
                      const Config& config) {
    switch (kind.tag) {
        case DerivKind::Tag::Delta:
            return delta_derivative(f, t, config);
        case DerivKind::Tag::Nabla:
            return nabla_derivative(f, t, config);
        case DerivKind::Tag::Diamond:
            return diamond_derivative(f, t, kind.alpha, config);
    }
    throw Error("unknown derivative kind");
}

std::pair<bool, bool> cross_relation_check(const GridFunction& f, const Point& t,
                                           const Config& config) {
    bool nabla_ok = false;
    bool delta_ok = false;
    try {
        const Scalar lhs = nabla_derivative(f, t, config).value;
        const Scalar rhs = delta_derivative(f, f.scale().rho(t), config).value;
        nabla_ok = lhs == rhs;
    } catch (const Error&) {
        nabla_ok = false;
    }
    try {
        const Scalar lhs = delta_derivative(f, t, config).value;
        const Scalar rhs = nabla_derivative(f, f.scale().sigma(t), config).value;
        delta_ok = lhs == rhs;
    } catch (const Error&) {
        delta_ok = false;
    }
    return {nabla_ok, delta_ok};
}

Scalar delta_integral(const GridFunction& f, const Point& a, const Point& b,
                      const Config& config) {
    const TimeScale& scale = f.scale();
    scale.require(a);
    scale.require(b);
    if (a == b) {
        return Scalar();
    }
    if (a > b) {
        return -delta_integral(f, b, a, config);
    }
    switch (scale.kind()) {
        case TimeScale::Kind::Real:
            return quadrature(f, to_double(a), to_double(b), config.quad_abs_tol);
        case TimeScale::Kind::Uniform: {
            const Rational& c = scale.step();
            Scalar sum;
            const Scalar weight{c};
            for (Point t = a; t < b; t += c) {
                sum += weight * f(t);
            }
            return sum;
        }
        case TimeScale::Kind::Finite: {
            const auto& pts = scale.points();
            const std::size_t ia = scale.index_of(a);
            const std::size_t ib = scale.index_of(b);
            Scalar sum;
            for (std::size_t i = ia; i < ib; ++i) {
                sum += Scalar(Rational(pts[i + 1] - pts[i])) * f(pts[i]);
            }
            return sum;
        }
    }
    throw Error("unknown scale kind");
}

Scalar nabla_integral(const GridFunction& f, const Point& a, const Point& b,
                      const Config& config) {
    const TimeScale& scale = f.scale();
    scale.require(a);
    scale.require(b);
    if (a == b) {
        return Scalar();
    }
    if (a > b) {
        return -nabla_integral(f, b, a, config);
    }
    switch (scale.kind()) {
        case TimeScale::Kind::Real:
            return quadrature(f, to_double(a), to_double(b), config.quad_abs_tol);
        case TimeScale::Kind::Uniform: {
            const Rational& c = scale.step();
            Scalar sum;
            const Scalar weight{c};
            for (Point t = a + c; t <= b; t += c) {
                sum += weight * f(t);
            }
            return sum;
        }
        case TimeScale::Kind::Finite: {
            const auto& pts = scale.points();
            const std::size_t ia = scale.index_of(a);
            const std::size_t ib = scale.index_of(b);
            Scalar sum;
            for (std::size_t i = ia + 1; i <= ib; ++i) {
                sum += Scalar(Rational(pts[i] - pts[i - 1])) * f(pts[i]);
            }
            return sum;
        }
    }
    throw Error("unknown scale kind");
}

Scalar diamond_integral(const GridFunction& f, const Point& a, const Point& b,
                        const Rational& alpha, const Config& config) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("diamond weight must lie in [0, 1]");
    }
    const Scalar fwd = delta_integral(f, a, b, config);
    const Scalar back = nabla_integral(f, a, b, config);
    return Scalar(alpha) * fwd + Scalar(Rational(1 - alpha)) * back;
}

GridFunction iterated_derivative(const GridFunction& f, const DerivKind& kind, int n,
                                 const Config& config) {
    if (n < 0) {
        throw DomainError("derivative order must be non-negative");
    }
    GridFunction level = f.memoized();
    for (int i = 0; i < n; ++i) {
        const int up = kind.tag == DerivKind::Tag::Nabla ? 0 : 1;
        const int down = kind.tag == DerivKind::Tag::Delta ? 0 : 1;
        // Throws when a finite grid runs out of points.
        TrimmedScale trimmed = level.domain().trim(up, down);
        GridFunction prev = level;
        GridFunction next(std::move(trimmed), [prev, kind, config](const Point& t) {
            return derivative(prev, t, kind, config).value;
        });
        level = next.memoized();
    }
    return level;
}

}  // namespace tscalc
