#include "tscalc/calculus.hpp"
#include "tscalc/errors.hpp"
#include "tscalc/monomials.hpp"
#include "tscalc/specials.hpp"

#include <doctest.h>

#include <cmath>

using namespace tscalc;

TEST_CASE("exponential closed forms on uniform grids") {
    const TimeScale z = TimeScale::integers();
    const ExpParams e1 = ExpParams::delta_exp(Scalar(1));
    // e_1(t, 0) = 2^t on Z
    for (long t = -5; t <= 10; ++t) {
        CHECK(exp_eval(e1, Rational(t), z).rational() == rat_ipow(Rational(2), t));
    }
    CHECK(exp_eval(e1, Rational(0), z).rational() == Rational(1));

    const TimeScale half = TimeScale::multiples(Rational(1, 2));
    const ExpParams e2 = ExpParams::delta_exp(Scalar(Rational(2)));
    // (1 + c p)^{(t-t0)/c} with c = 1/2, p = 2: 2^{2t}
    CHECK(exp_eval(e2, Rational(3, 2), half).rational() == Rational(8));

    const ExpParams hat = ExpParams::nabla_exp(Scalar(Rational(1, 2)));
    // ê_p(t,0) = (1 - p)^{-t} on Z
    CHECK(exp_eval(hat, Rational(3), z).rational() == Rational(8));
    CHECK(exp_eval(hat, Rational(-2), z).rational() == Rational(1, 4));
}

TEST_CASE("exponential on the real line") {
    const TimeScale r = TimeScale::real();
    const ExpParams e2 = ExpParams::delta_exp(Scalar(Rational(2)));
    CHECK(exp_eval(e2, Rational(1), r).to_double() == doctest::Approx(std::exp(2.0)));
    const ExpParams hat = ExpParams::nabla_exp(Scalar(Rational(-1)));
    CHECK(exp_eval(hat, Rational(2), r).to_double() == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("regressivity violations raise singularity errors") {
    const TimeScale z = TimeScale::integers();
    CHECK_THROWS_AS(exp_eval(ExpParams::delta_exp(Scalar(-1)), Rational(2), z),
                    SingularityError);
    CHECK_THROWS_AS(exp_eval(ExpParams::nabla_exp(Scalar(1)), Rational(2), z),
                    SingularityError);
    const TimeScale half = TimeScale::multiples(Rational(1, 2));
    CHECK_THROWS_AS(exp_eval(ExpParams::delta_exp(Scalar(-2)), Rational(1), half),
                    SingularityError);
}

TEST_CASE("exponential series identity on Z") {
    // e_p(t, 0) = sum_{k<=t} p^k h_k(t, 0) exactly for t >= 0
    const TimeScale z = TimeScale::integers();
    for (const Rational p : {Rational(1), Rational(1, 2), Rational(-1, 3), Rational(3)}) {
        const ExpParams params = ExpParams::delta_exp(Scalar(p));
        for (long t = 0; t <= 12; ++t) {
            Scalar sum;
            for (long k = 0; k <= t; ++k) {
                sum += scalar_ipow(Scalar(p), k) *
                       monomial(MonomialKind::Forward, static_cast<int>(k), Rational(t),
                                Rational(0), z);
            }
            CHECK(exp_eval(params, Rational(t), z) == sum);
        }
    }
}

TEST_CASE("nabla exponential series identity on Z") {
    // ê_p(t, 0) = sum_{k<=|t|} p^k ĥ_k(t, 0) exactly for t <= 0
    const TimeScale z = TimeScale::integers();
    const Rational p(1, 3);
    const ExpParams params = ExpParams::nabla_exp(Scalar(p));
    for (long t = -10; t <= 0; ++t) {
        Scalar sum;
        for (long k = 0; k <= -t; ++k) {
            sum += scalar_ipow(Scalar(p), k) *
                   monomial(MonomialKind::Backward, static_cast<int>(k), Rational(t), Rational(0),
                            z);
        }
        CHECK(exp_eval(params, Rational(t), z) == sum);
    }
}

TEST_CASE("derivative laws of the exponentials, exactly") {
    const struct {
        TimeScale scale;
        Rational p;
    } cases[] = {
        {TimeScale::integers(), Rational(1, 2)},
        {TimeScale::integers(), Rational(2)},
        {TimeScale::multiples(Rational(1, 2)), Rational(1)},
        {TimeScale::multiples(Rational(1, 2)), Rational(-1, 3)},
    };
    for (const auto& c : cases) {
        const Rational grain = c.scale.step();
        const ExpParams fwd = ExpParams::delta_exp(Scalar(c.p));
        const ExpParams back = ExpParams::nabla_exp(Scalar(c.p));
        const GridFunction ef = exp_function(fwd, c.scale);
        const GridFunction eb = exp_function(back, c.scale);
        for (long j = -4; j <= 4; ++j) {
            const Point t = Rational(j) * grain;
            const Scalar ef_t = exp_eval(fwd, t, c.scale);
            const Scalar eb_t = exp_eval(back, t, c.scale);
            // e_p^delta = p e_p and ê_p^nabla = p ê_p
            CHECK(delta_derivative(ef, t).value == Scalar(c.p) * ef_t);
            CHECK(nabla_derivative(eb, t).value == Scalar(c.p) * eb_t);
            // e_p^nabla = p/(1+p nu) e_p and ê_p^delta = p/(1-p mu) ê_p
            CHECK(nabla_derivative(ef, t).value ==
                  Scalar(c.p) / Scalar(Rational(1 + c.p * grain)) * ef_t);
            CHECK(delta_derivative(eb, t).value ==
                  Scalar(c.p) / Scalar(Rational(1 - c.p * grain)) * eb_t);
        }
    }
}

TEST_CASE("diamond derivative formulas for the exponentials") {
    // frozen example: Z, p = 1, t = 2, alpha = 1/2 gives 3
    const TimeScale z = TimeScale::integers();
    const ExpParams e1 = ExpParams::delta_exp(Scalar(1));
    CHECK(exp_diamond_derivative(e1, Rational(2), Rational(1, 2), z).rational() == Rational(3));
    // endpoints recover the plain laws
    CHECK(exp_diamond_derivative(e1, Rational(3), Rational(1), z).rational() == Rational(8));
    const ExpParams hat = ExpParams::nabla_exp(Scalar(Rational(1, 2)));
    CHECK(exp_diamond_derivative(hat, Rational(3), Rational(0), z) ==
          Scalar(Rational(1, 2)) * exp_eval(hat, Rational(3), z));

    // the formula equals the operator-level convex combination, exactly
    const struct {
        TimeScale scale;
        Rational p;
    } cases[] = {
        {TimeScale::integers(), Rational(1, 2)},
        {TimeScale::multiples(Rational(1, 2)), Rational(-1, 3)},
    };
    for (const auto& c : cases) {
        for (const auto kind : {ExpKind::Delta, ExpKind::Nabla}) {
            ExpParams params;
            params.kind = kind;
            params.p = Scalar(c.p);
            const GridFunction f = exp_function(params, c.scale);
            for (const Rational alpha : {Rational(0), Rational(1, 4), Rational(1, 2),
                                         Rational(1)}) {
                for (long j = -3; j <= 3; ++j) {
                    const Point t = Rational(j) * c.scale.step();
                    CHECK(exp_diamond_derivative(params, t, alpha, c.scale) ==
                          diamond_derivative(f, t, alpha).value);
                }
            }
        }
    }
}

TEST_CASE("callable coefficients multiply factors along the grid") {
    const TimeScale z = TimeScale::integers();
    ExpParams params;
    params.kind = ExpKind::Delta;
    params.p_fn = [](const Point& t) { return Scalar(Rational(t + 1)); };
    // e_p(3, 0) = (1+1)(1+2)(1+3) = 24
    CHECK(exp_eval(params, Rational(3), z).rational() == Rational(24));
    CHECK(exp_eval(params, Rational(0), z).rational() == Rational(1));
    // inverse direction divides the same factors: e_p(-1, 0) = (1+p(-1))^{-1} = 1
    CHECK(exp_eval(params, Rational(-1), z).rational() == Rational(1));
    // the factor at tau = -2 is 1 + p(-2) = 0: regressivity fails there
    CHECK_THROWS_AS(exp_eval(params, Rational(-2), z), SingularityError);
}

TEST_CASE("callable coefficient inverse direction") {
    const TimeScale z = TimeScale::integers();
    ExpParams params;
    params.kind = ExpKind::Delta;
    params.p_fn = [](const Point& t) { return Scalar(Rational(1, 2)); };
    // constant-through-callable path agrees with the closed form
    const ExpParams closed = ExpParams::delta_exp(Scalar(Rational(1, 2)));
    for (long t = -4; t <= 4; ++t) {
        CHECK(exp_eval(params, Rational(t), z) == exp_eval(closed, Rational(t), z));
    }
}

TEST_CASE("trig values from complex exponentials, exactly") {
    const TimeScale z = TimeScale::integers();
    // frozen: cos_1(2,0) = Re((1+i)^2) = 0 and sin_1(2,0) = 2
    CHECK(trig_eval(TrigFamily::Cos, Rational(1), Rational(2), Rational(0), z).rational() ==
          Rational(0));
    CHECK(trig_eval(TrigFamily::Sin, Rational(1), Rational(2), Rational(0), z).rational() ==
          Rational(2));
    // t = t0 starts at (0, 1)
    for (const auto fam : {TrigFamily::Sin, TrigFamily::HatSin, TrigFamily::Sinh,
                           TrigFamily::HatSinh}) {
        CHECK(trig_eval(fam, Rational(1, 2), Rational(4), Rational(4), z).rational() ==
              Rational(0));
    }
    for (const auto fam : {TrigFamily::Cos, TrigFamily::HatCos, TrigFamily::Cosh,
                           TrigFamily::HatCosh}) {
        CHECK(trig_eval(fam, Rational(1, 2), Rational(4), Rational(4), z).rational() ==
              Rational(1));
    }
    // values are real rationals on discrete scales
    const Scalar v = trig_eval(TrigFamily::HatSin, Rational(1, 2), Rational(3), Rational(0), z);
    CHECK(v.exact());
    CHECK(v.is_real());
}

TEST_CASE("trig on the real line matches the classical functions") {
    const TimeScale r = TimeScale::real();
    CHECK(trig_eval(TrigFamily::Sin, Rational(1), Rational(1), Rational(0), r).to_double() ==
          doctest::Approx(std::sin(1.0)));
    CHECK(trig_eval(TrigFamily::Cosh, Rational(2), Rational(1), Rational(0), r).to_double() ==
          doctest::Approx(std::cosh(2.0)));
    // Pythagorean identity within quadrature-free floating error
    for (double t : {0.3, 1.7, -2.2}) {
        const double s =
            trig_eval(TrigFamily::Sin, Rational(1), Rational(t), Rational(0), r).to_double();
        const double c =
            trig_eval(TrigFamily::Cos, Rational(1), Rational(t), Rational(0), r).to_double();
        CHECK(std::abs(s * s + c * c - 1.0) < 1e-10);
    }
}

TEST_CASE("hyperbolic singularities at 1 - grain^2 p^2 = 0") {
    const TimeScale z = TimeScale::integers();
    // p = 1 on Z: e_{-1} is not regressive; sinh_1 cannot be built
    CHECK_THROWS_AS(trig_eval(TrigFamily::Sinh, Rational(1), Rational(2), Rational(0), z),
                    SingularityError);
    CHECK_THROWS_AS(trig_diamond_derivative(TrigFamily::Sinh, Rational(1), Rational(2),
                                            Rational(0), Rational(1, 2), z),
                    SingularityError);
    CHECK_THROWS_AS(trig_diamond_derivative(TrigFamily::HatCosh, Rational(1), Rational(2),
                                            Rational(0), Rational(1, 2), z),
                    SingularityError);
    // p = 1/2 is fine
    CHECK(trig_eval(TrigFamily::Sinh, Rational(1, 2), Rational(2), Rational(0), z).exact());
}

TEST_CASE("closed trig derivative formulas equal the operator-level diamond derivative") {
    const TimeScale z = TimeScale::integers();
    const TrigFamily families[] = {TrigFamily::Sin,     TrigFamily::Cos,    TrigFamily::Sinh,
                                   TrigFamily::Cosh,    TrigFamily::HatSin, TrigFamily::HatCos,
                                   TrigFamily::HatSinh, TrigFamily::HatCosh};
    for (const Rational p : {Rational(1), Rational(1, 2)}) {
        for (const auto family : families) {
            const bool hyperbolic = family == TrigFamily::Sinh || family == TrigFamily::Cosh ||
                                    family == TrigFamily::HatSinh ||
                                    family == TrigFamily::HatCosh;
            if (hyperbolic && p == 1) {
                continue;  // singular on Z, covered above
            }
            const GridFunction f = trig_function(family, p, Rational(0), z);
            for (const Rational alpha : {Rational(0), Rational(1, 2), Rational(1)}) {
                for (long t = -4; t <= 4; ++t) {
                    const Scalar closed =
                        trig_diamond_derivative(family, p, Rational(t), Rational(0), alpha, z);
                    const Scalar oracle = diamond_derivative(f, Rational(t), alpha).value;
                    CHECK(closed == oracle);
                }
            }
        }
    }
}

TEST_CASE("closed trig derivative formulas reduce classically on the real line") {
    const TimeScale r = TimeScale::real();
    // nu = 0: sin' = p cos
    const double got = trig_diamond_derivative(TrigFamily::Sin, Rational(2), Rational(1),
                                               Rational(0), Rational(3, 4), r)
                           .to_double();
    const double want =
        2.0 * trig_eval(TrigFamily::Cos, Rational(2), Rational(1), Rational(0), r).to_double();
    CHECK(got == doctest::Approx(want));
}
