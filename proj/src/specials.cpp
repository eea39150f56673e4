#include "tscalc/specials.hpp"

#include "tscalc/errors.hpp"

#include <cmath>
#include <complex>
#include <utility>

namespace tscalc {

namespace {

const Scalar kOne{Rational(1)};

Scalar exp_factor(const ExpParams& params, const TimeScale& scale, const Point& tau) {
    // Single product factor at tau: (1 + mu p) for e_p, (1 - nu p) for ê_p.
    if (params.kind == ExpKind::Delta) {
        return kOne + Scalar(scale.mu(tau)) * params.coefficient(tau);
    }
    return kOne - Scalar(scale.nu(tau)) * params.coefficient(tau);
}

void check_regressive(const Scalar& factor, const Point& tau) {
    if (factor.is_zero()) {
        throw SingularityError("regressivity fails at t = " + format_rational(tau));
    }
}

Scalar discrete_exp_product(const ExpParams& params, const Point& t, const TimeScale& scale) {
    Scalar value = kOne;
    if (params.kind == ExpKind::Delta) {
        if (t > params.t0) {
            for (Point tau = params.t0; tau < t; tau = scale.sigma(tau)) {
                const Scalar factor = exp_factor(params, scale, tau);
                check_regressive(factor, tau);
                value *= factor;
            }
        } else {
            for (Point tau = t; tau < params.t0; tau = scale.sigma(tau)) {
                const Scalar factor = exp_factor(params, scale, tau);
                check_regressive(factor, tau);
                value /= factor;
            }
        }
        return value;
    }
    if (t > params.t0) {
        for (Point tau = scale.sigma(params.t0); ; tau = scale.sigma(tau)) {
            const Scalar factor = exp_factor(params, scale, tau);
            check_regressive(factor, tau);
            value /= factor;
            if (tau >= t) {
                break;
            }
        }
    } else if (t < params.t0) {
        for (Point tau = scale.sigma(t); ; tau = scale.sigma(tau)) {
            const Scalar factor = exp_factor(params, scale, tau);
            check_regressive(factor, tau);
            value *= factor;
            if (tau >= params.t0) {
                break;
            }
        }
    }
    return value;
}

}  // namespace

ExpParams ExpParams::delta_exp(Scalar p, Point t0) {
    ExpParams params;
    params.kind = ExpKind::Delta;
    params.p = std::move(p);
    params.t0 = std::move(t0);
    return params;
}

ExpParams ExpParams::nabla_exp(Scalar p, Point t0) {
    ExpParams params;
    params.kind = ExpKind::Nabla;
    params.p = std::move(p);
    params.t0 = std::move(t0);
    return params;
}

Scalar exp_eval(const ExpParams& params, const Point& t, const TimeScale& scale) {
    scale.require(t);
    scale.require(params.t0);
    if (scale.is_real()) {
        if (!params.constant()) {
            throw DomainError("non-constant exponential coefficient requires a discrete scale");
        }
        const std::complex<double> z = params.p.to_complex() * to_double(t - params.t0);
        return Scalar::approx(std::exp(z));
    }
    if (scale.is_uniform() && params.constant()) {
        const Rational& c = scale.step();
        const long n = to_long((t - params.t0) / c);
        const Scalar step{c};
        if (params.kind == ExpKind::Delta) {
            const Scalar base = kOne + step * params.p;
            check_regressive(base, t);
            return scalar_ipow(base, n);
        }
        const Scalar base = kOne - step * params.p;
        check_regressive(base, t);
        return scalar_ipow(base, -n);
    }
    return discrete_exp_product(params, t, scale);
}

Scalar exp_diamond_derivative(const ExpParams& params, const Point& t, const Rational& alpha,
                              const TimeScale& scale) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("diamond weight must lie in [0, 1]");
    }
    scale.require(t);
    const Point back = scale.rho(t);
    const Point fwd = scale.sigma(t);
    if (scale.sigma(back) != t || scale.rho(fwd) != t) {
        throw DomainError("diamond exponential derivative needs sigma(rho(t)) = t = rho(sigma(t))");
    }
    const Scalar a{alpha};
    const Scalar one_minus_a{Rational(1 - alpha)};
    const Scalar value = exp_eval(params, t, scale);
    if (params.kind == ExpKind::Delta) {
        const Scalar p_rho = params.coefficient(back);
        const Scalar denom = kOne + Scalar(scale.nu(t)) * p_rho;
        if (denom.is_zero()) {
            throw SingularityError("1 + nu(t) p(rho(t)) vanishes at t = " + format_rational(t));
        }
        return (a * params.coefficient(t) + one_minus_a * p_rho / denom) * value;
    }
    const Scalar p_sigma = params.coefficient(fwd);
    const Scalar denom = kOne - Scalar(scale.mu(t)) * p_sigma;
    if (denom.is_zero()) {
        throw SingularityError("1 - mu(t) p(sigma(t)) vanishes at t = " + format_rational(t));
    }
    return (one_minus_a * params.coefficient(t) + a * p_sigma / denom) * value;
}

GridFunction exp_function(const ExpParams& params, const TimeScale& scale) {
    GridFunction f(scale, [params, scale](const Point& t) { return exp_eval(params, t, scale); });
    if (scale.is_real() && params.constant()) {
        f = f.with_derivative([params, scale](const Point& t) {
            return params.p * exp_eval(params, t, scale);
        });
    }
    return f.declare_exact(scale.is_discrete() && params.constant() && params.p.exact());
}

bool trig_is_hatted(TrigFamily family) {
    switch (family) {
        case TrigFamily::HatSin:
        case TrigFamily::HatCos:
        case TrigFamily::HatSinh:
        case TrigFamily::HatCosh:
            return true;
        default:
            return false;
    }
}

const char* trig_name(TrigFamily family) {
    switch (family) {
        case TrigFamily::Sin: return "sin";
        case TrigFamily::Cos: return "cos";
        case TrigFamily::Sinh: return "sinh";
        case TrigFamily::Cosh: return "cosh";
        case TrigFamily::HatSin: return "hatsin";
        case TrigFamily::HatCos: return "hatcos";
        case TrigFamily::HatSinh: return "hatsinh";
        case TrigFamily::HatCosh: return "hatcosh";
    }
    return "?";
}

namespace {

ExpParams family_exp(TrigFamily family, const Scalar& coefficient, const Point& t0) {
    return trig_is_hatted(family) ? ExpParams::nabla_exp(coefficient, t0)
                                  : ExpParams::delta_exp(coefficient, t0);
}

}  // namespace

Scalar trig_eval(TrigFamily family, const Rational& p, const Point& t, const Point& t0,
                 const TimeScale& scale) {
    if (scale.is_real()) {
        const double x = to_double(p * (t - t0));
        switch (family) {
            case TrigFamily::Sin:
            case TrigFamily::HatSin:
                return Scalar::approx(std::sin(x));
            case TrigFamily::Cos:
            case TrigFamily::HatCos:
                return Scalar::approx(std::cos(x));
            case TrigFamily::Sinh:
            case TrigFamily::HatSinh:
                return Scalar::approx(std::sinh(x));
            case TrigFamily::Cosh:
            case TrigFamily::HatCosh:
                return Scalar::approx(std::cosh(x));
        }
    }
    const Scalar two{Rational(2)};
    const Scalar two_i{Rational(0), Rational(2)};
    switch (family) {
        case TrigFamily::Sin:
        case TrigFamily::HatSin: {
            const Scalar ip{Rational(0), p};
            const Scalar pos = exp_eval(family_exp(family, ip, t0), t, scale);
            const Scalar neg = exp_eval(family_exp(family, -ip, t0), t, scale);
            return (pos - neg) / two_i;
        }
        case TrigFamily::Cos:
        case TrigFamily::HatCos: {
            const Scalar ip{Rational(0), p};
            const Scalar pos = exp_eval(family_exp(family, ip, t0), t, scale);
            const Scalar neg = exp_eval(family_exp(family, -ip, t0), t, scale);
            return (pos + neg) / two;
        }
        case TrigFamily::Sinh:
        case TrigFamily::HatSinh: {
            const Scalar pos = exp_eval(family_exp(family, Scalar(p), t0), t, scale);
            const Scalar neg = exp_eval(family_exp(family, Scalar(Rational(-p)), t0), t, scale);
            return (pos - neg) / two;
        }
        case TrigFamily::Cosh:
        case TrigFamily::HatCosh: {
            const Scalar pos = exp_eval(family_exp(family, Scalar(p), t0), t, scale);
            const Scalar neg = exp_eval(family_exp(family, Scalar(Rational(-p)), t0), t, scale);
            return (pos + neg) / two;
        }
    }
    throw Error("unknown trig family");
}

Scalar trig_diamond_derivative(TrigFamily family, const Rational& p, const Point& t,
                               const Point& t0, const Rational& alpha, const TimeScale& scale) {
    if (alpha < 0 || alpha > 1) {
        throw DomainError("diamond weight must lie in [0, 1]");
    }
    scale.require(t);
    const bool hatted = trig_is_hatted(family);
    const Rational grain = hatted ? scale.mu(t) : scale.nu(t);
    const Rational g2p2 = grain * grain * p * p;
    const Scalar sp{p};
    const Scalar gp{Rational(grain * p)};
    const Scalar a{alpha};
    const Scalar one_minus_a{Rational(1 - alpha)};
    auto value = [&](TrigFamily f) { return trig_eval(f, p, t, t0, scale); };
    // The weight on the mixed term is
    // (1-alpha) for the unhatted family and alpha for the hatted one.
    const Scalar mixed = hatted ? a : one_minus_a;
    const Scalar bracket_weight = hatted ? one_minus_a : a;
    switch (family) {
        case TrigFamily::Sin:
        case TrigFamily::HatSin: {
            const Scalar denom = kOne + Scalar(g2p2);
            const Scalar bracket = (kOne + bracket_weight * Scalar(g2p2)) *
                                       value(hatted ? TrigFamily::HatCos : TrigFamily::Cos) +
                                   (hatted ? -mixed : mixed) * gp * value(family);
            return sp / denom * bracket;
        }
        case TrigFamily::Cos:
        case TrigFamily::HatCos: {
            const Scalar denom = kOne + Scalar(g2p2);
            const Scalar bracket = (kOne + bracket_weight * Scalar(g2p2)) *
                                       value(hatted ? TrigFamily::HatSin : TrigFamily::Sin) +
                                   (hatted ? mixed : -mixed) * gp * value(family);
            return -sp / denom * bracket;
        }
        case TrigFamily::Sinh:
        case TrigFamily::HatSinh: {
            const Scalar denom = kOne - Scalar(g2p2);
            if (denom.is_zero()) {
                throw SingularityError("1 - grain^2 p^2 vanishes at t = " + format_rational(t));
            }
            const Scalar bracket = (kOne - bracket_weight * Scalar(g2p2)) *
                                       value(hatted ? TrigFamily::HatCosh : TrigFamily::Cosh) +
                                   (hatted ? mixed : -mixed) * gp * value(family);
            return sp / denom * bracket;
        }
        case TrigFamily::Cosh:
        case TrigFamily::HatCosh: {
            const Scalar denom = kOne - Scalar(g2p2);
            if (denom.is_zero()) {
                throw SingularityError("1 - grain^2 p^2 vanishes at t = " + format_rational(t));
            }
            const TrigFamily partner = hatted ? TrigFamily::HatSinh : TrigFamily::Sinh;
            const Scalar bracket = (kOne - bracket_weight * Scalar(g2p2)) * value(partner) +
                                   (hatted ? mixed : -mixed) * gp * value(family);
            return sp / denom * bracket;
        }
    }
    throw Error("unknown trig family");
}

GridFunction trig_function(TrigFamily family, const Rational& p, const Point& t0,
                           const TimeScale& scale) {
    GridFunction f(scale, [family, p, t0, scale](const Point& t) {
        return trig_eval(family, p, t, t0, scale);
    });
    if (scale.is_real()) {
        f = f.with_derivative([family, p, t0, scale](const Point& t) {
            const Scalar sp{p};
            switch (family) {
                case TrigFamily::Sin:
                case TrigFamily::HatSin:
                    return sp * trig_eval(TrigFamily::Cos, p, t, t0, scale);
                case TrigFamily::Cos:
                case TrigFamily::HatCos:
                    return -sp * trig_eval(TrigFamily::Sin, p, t, t0, scale);
                case TrigFamily::Sinh:
                case TrigFamily::HatSinh:
                    return sp * trig_eval(TrigFamily::Cosh, p, t, t0, scale);
                case TrigFamily::Cosh:
                case TrigFamily::HatCosh:
                    return sp * trig_eval(TrigFamily::Sinh, p, t, t0, scale);
            }
            throw Error("unknown trig family");
        });
    }
    return f.declare_exact(scale.is_discrete());
}

}  // namespace tscalc
