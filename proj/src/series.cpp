#include "tscalc/series.hpp"

#include "tscalc/errors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace tscalc {

struct CoefficientRule::Memo {
    std::mutex lock;
    std::map<int, Scalar> values;
};

CoefficientRule CoefficientRule::explicit_list(std::vector<Scalar> values) {
    CoefficientRule rule;
    rule.kind_ = Kind::Explicit;
    rule.values_ = std::move(values);
    return rule;
}

CoefficientRule CoefficientRule::geometric(Scalar ratio, Scalar lead) {
    CoefficientRule rule;
    rule.kind_ = Kind::Geometric;
    rule.ratio_ = std::move(ratio);
    rule.lead_ = std::move(lead);
    return rule;
}

CoefficientRule CoefficientRule::custom(std::function<Scalar(int)> fn) {
    if (!fn) {
        throw Error("custom coefficient rule needs a callable");
    }
    CoefficientRule rule;
    rule.kind_ = Kind::Custom;
    rule.fn_ = std::move(fn);
    rule.memo_ = std::make_shared<Memo>();
    return rule;
}

Scalar CoefficientRule::at(int k) const {
    if (k < 0) {
        throw DomainError("coefficient index must be non-negative");
    }
    switch (kind_) {
        case Kind::Explicit:
            return static_cast<std::size_t>(k) < values_.size()
                       ? values_[static_cast<std::size_t>(k)]
                       : Scalar();
        case Kind::Geometric:
            return lead_ * scalar_ipow(ratio_, k);
        case Kind::Custom: {
            {
                std::lock_guard<std::mutex> guard(memo_->lock);
                auto it = memo_->values.find(k);
                if (it != memo_->values.end()) {
                    return it->second;
                }
            }
            Scalar value = fn_(k);
            std::lock_guard<std::mutex> guard(memo_->lock);
            return memo_->values.emplace(k, std::move(value)).first->second;
        }
    }
    throw Error("unknown coefficient rule");
}

std::optional<int> CoefficientRule::finite_support() const {
    if (kind_ == Kind::Explicit) {
        return static_cast<int>(values_.size());
    }
    return std::nullopt;
}

const Scalar& CoefficientRule::ratio() const {
    if (kind_ != Kind::Geometric) {
        throw Error("rule is not geometric");
    }
    return ratio_;
}

const Scalar& CoefficientRule::lead() const {
    if (kind_ != Kind::Geometric) {
        throw Error("rule is not geometric");
    }
    return lead_;
}

const std::vector<Scalar>& CoefficientRule::values() const {
    if (kind_ != Kind::Explicit) {
        throw Error("rule is not an explicit list");
    }
    return values_;
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Convergent: return "convergent";
        case Verdict::FiniteSum: return "finite_sum";
        case Verdict::Divergent: return "divergent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Estimation window for limsup |a_{k+1}/a_k|: take the max of tail ratios
// over k in [window/2, window].
constexpr int kRatioWindow = 256;
constexpr double kRatioMargin = 1e-9;

double rule_ratio_estimate(const CoefficientRule& rule) {
    switch (rule.kind()) {
        case CoefficientRule::Kind::Explicit:
            return 0.0;
        case CoefficientRule::Kind::Geometric:
            return rule.ratio().abs();
        case CoefficientRule::Kind::Custom: {
            double worst = 0.0;
            bool seen = false;
            for (int k = kRatioWindow / 2; k < kRatioWindow; ++k) {
                const Scalar ak = rule.at(k);
                const Scalar next = rule.at(k + 1);
                if (ak.is_zero()) {
                    continue;
                }
                worst = std::max(worst, (next / ak).abs());
                seen = true;
            }
            return seen ? worst : 0.0;
        }
    }
    return 0.0;
}

/// Estimate of the coefficient bound |a_k| <= M^k; exact |p| for geometric
/// rules, a tail-window estimate otherwise. Returns 0 when no finite bound
/// is inferable.
Rational rule_bound_m(const CoefficientRule& rule) {
    switch (rule.kind()) {
        case CoefficientRule::Kind::Geometric:
            if (rule.ratio().exact() && rule.ratio().is_real()) {
                return rat_abs(rule.ratio().re());
            }
            return Rational(rule.ratio().abs());
        case CoefficientRule::Kind::Explicit: {
            double m = 0.0;
            const auto& vals = rule.values();
            for (std::size_t k = 1; k < vals.size(); ++k) {
                m = std::max(m, std::pow(vals[k].abs(), 1.0 / static_cast<double>(k)));
            }
            return std::isfinite(m) ? Rational(m) : Rational(0);
        }
        case CoefficientRule::Kind::Custom: {
            double m = 0.0;
            for (int k = kRatioWindow / 2; k < kRatioWindow; ++k) {
                m = std::max(m, std::pow(rule.at(k).abs(), 1.0 / static_cast<double>(k)));
            }
            return std::isfinite(m) ? Rational(m) : Rational(0);
        }
    }
    return Rational(0);
}

double ratio_threshold(const TimeScale& scale) {
    if (scale.is_uniform()) {
        return 1.0 / to_double(scale.step());
    }
    return std::numeric_limits<double>::infinity();
}

/// Number of orders contributing on the finite side: h_k(t, t0) = 0 once k
/// exceeds the number of grid points in [t0, t), and symmetrically for ĥ.
long finite_side_orders(const TimeScale& scale, MonomialKind kind, const Point& t,
                        const Point& t0) {
    if (scale.is_uniform()) {
        return to_long(rat_abs(t - t0) / scale.step());
    }
    const long it = static_cast<long>(scale.index_of(t));
    const long i0 = static_cast<long>(scale.index_of(t0));
    return kind == MonomialKind::Forward ? it - i0 : i0 - it;
}

struct BranchOutcome {
    Scalar sum;
    BranchReport report;
};

/// Incremental monomial values m_k = h_k(t, t0) (resp. ĥ_k) along k.
class MonomialLadder {
public:
    MonomialLadder(MonomialKind kind, const Point& t, const Point& t0, const TimeScale& scale,
                   const Config& config)
        : kind_(kind), t_(t), t0_(t0), scale_(scale), config_(config) {
        if (scale.is_uniform()) {
            x_ = (t - t0) / scale.step();
        } else if (scale.is_real()) {
            approx_ = 1.0;
        }
    }

    Scalar at(int k) {
        if (scale_.is_finite()) {
            return monomial(kind_, k, t_, t0_, scale_, config_);
        }
        if (scale_.is_real()) {
            while (k_ < k) {
                approx_ *= to_double(t_ - t0_) / (k_ + 1);
                ++k_;
            }
            return Scalar::approx(approx_);
        }
        while (k_ < k) {
            const Rational factor =
                kind_ == MonomialKind::Forward ? Rational(x_ - k_) : Rational(x_ + k_);
            exact_ *= scale_.step() * factor / (k_ + 1);
            ++k_;
        }
        return Scalar(exact_);
    }

private:
    MonomialKind kind_;
    Point t_, t0_;
    TimeScale scale_;
    Config config_;
    Rational x_;
    Rational exact_{1};
    double approx_ = 1.0;
    int k_ = 0;
};

BranchOutcome eval_branch(const CoefficientRule& rule, MonomialKind kind, const SeriesSpec& spec,
                          const Point& t, bool force) {
    const TimeScale& scale = spec.scale;
    const Config config{.max_monomial_order =
                            std::max(default_config().max_monomial_order, spec.policy.max_terms)};
    BranchOutcome out;
    out.report.evaluated = true;

    const bool finite_side =
        scale.is_discrete() &&
        (kind == MonomialKind::Forward ? t >= spec.t0 : t <= spec.t0);
    if (finite_side) {
        long kmax = finite_side_orders(scale, kind, t, spec.t0);
        if (auto support = rule.finite_support()) {
            kmax = std::min(kmax, static_cast<long>(*support) - 1);
        }
        MonomialLadder ladder(kind, t, spec.t0, scale, config);
        for (long k = 0; k <= kmax; ++k) {
            out.sum += rule.at(static_cast<int>(k)) * ladder.at(static_cast<int>(k));
            ++out.report.terms_used;
        }
        out.report.verdict = Verdict::FiniteSum;
        if (rule.kind() == CoefficientRule::Kind::Geometric) {
            out.report.coeff_ratio = rule.ratio().abs();
        }
        out.report.exact = out.sum.exact();
        return out;
    }

    if (rule.kind() == CoefficientRule::Kind::Explicit) {
        // A polynomial: sum every stored coefficient.
        MonomialLadder ladder(kind, t, spec.t0, scale, config);
        const int support = *rule.finite_support();
        for (int k = 0; k < support; ++k) {
            out.sum += rule.at(k) * ladder.at(k);
            ++out.report.terms_used;
        }
        out.report.verdict = Verdict::Convergent;
        out.report.exact = out.sum.exact();
        return out;
    }

    const double estimate = rule_ratio_estimate(rule);
    out.report.coeff_ratio = estimate;
    const double threshold = ratio_threshold(scale);
    const bool divergent = estimate > threshold + kRatioMargin;
    if (divergent && !force) {
        throw DivergenceError(std::string("series branch judged divergent: coefficient ratio ") +
                              std::to_string(estimate) + " exceeds " + std::to_string(threshold));
    }

    MonomialLadder ladder(kind, t, spec.t0, scale, config);
    const TruncationPolicy& policy = spec.policy;
    int consecutive = 0;
    double prev_abs = -1.0;
    double last_ratio = std::numeric_limits<double>::infinity();
    bool stopped = false;
    for (int k = 0; k < policy.max_terms; ++k) {
        const Scalar term = rule.at(k) * ladder.at(k);
        out.sum += term;
        ++out.report.terms_used;
        const double mag = term.abs();
        if (mag > 0.0 && prev_abs > 0.0) {
            last_ratio = mag / prev_abs;
        }
        if (mag > 0.0) {
            prev_abs = mag;
        }
        consecutive = mag < policy.abs_tol ? consecutive + 1 : 0;
        if (consecutive >= policy.consecutive_small && last_ratio < 1.0) {
            stopped = true;
            break;
        }
    }
    out.report.verdict =
        divergent ? Verdict::Divergent : (stopped ? Verdict::Convergent : Verdict::Inconclusive);
    // A truncated tail approximates the limit even when every term was
    // summed in exact arithmetic.
    out.sum = Scalar::approx(out.sum.to_complex());
    out.report.exact = false;
    return out;
}

Verdict combine_verdicts(const BranchReport& a, const BranchReport& b) {
    auto rank = [](const BranchReport& r) {
        if (!r.evaluated) {
            return 0;
        }
        switch (r.verdict) {
            case Verdict::FiniteSum: return 0;
            case Verdict::Convergent: return 1;
            case Verdict::Inconclusive: return 2;
            case Verdict::Divergent: return 3;
        }
        return 2;
    };
    const int worst = std::max(rank(a), rank(b));
    if (worst == 3) {
        return Verdict::Divergent;
    }
    if (worst == 2) {
        return Verdict::Inconclusive;
    }
    const bool all_finite = (!a.evaluated || a.verdict == Verdict::FiniteSum) &&
                            (!b.evaluated || b.verdict == Verdict::FiniteSum);
    return all_finite ? Verdict::FiniteSum : Verdict::Convergent;
}

void fill_regions(ConvergenceReport& report, const SeriesSpec& spec) {
    const TimeScale& scale = spec.scale;
    if (scale.is_uniform()) {
        report.monomial_ratio = to_double(scale.step());
    }
    Rational m(0);
    if (spec.alpha > 0) {
        m = std::max(m, rule_bound_m(spec.a));
    }
    if (spec.alpha < 1) {
        m = std::max(m, rule_bound_m(spec.b));
    }
    report.bound_m = m;
    if (m == 0) {
        report.region_i = "unknown";
        report.region_j = "unknown";
        return;
    }
    if (scale.is_real()) {
        report.region_i = "t >= " + format_rational(spec.t0);
        report.region_j = "t <= " + format_rational(spec.t0);
        return;
    }
    if (scale.is_uniform()) {
        const Rational& c = scale.step();
        if (c * m < 1) {
            report.region_i = "t >= " + format_rational(spec.t0 + c);
            report.region_j = "t <= " + format_rational(spec.t0 - c);
        } else {
            report.region_i = "empty (c*M >= 1)";
            report.region_j = "empty (c*M >= 1)";
        }
        return;
    }
    report.region_i = "rho(t) >= t0 and nu(t)*M < 1";
    report.region_j = "sigma(t) <= t0 and mu(t)*M < 1";
}

}  // namespace

SeriesValue series_eval(const SeriesSpec& spec, const Point& t, bool force) {
    if (spec.alpha < 0 || spec.alpha > 1) {
        throw DomainError("series weight must lie in [0, 1]");
    }
    spec.scale.require(t);
    spec.scale.require(spec.t0);
    SeriesValue result;
    Scalar value;
    if (spec.alpha > 0) {
        BranchOutcome a = eval_branch(spec.a, MonomialKind::Forward, spec, t, force);
        value += Scalar(spec.alpha) * a.sum;
        result.report.delta_branch = a.report;
    }
    if (spec.alpha < 1) {
        BranchOutcome b = eval_branch(spec.b, MonomialKind::Backward, spec, t, force);
        value += Scalar(Rational(1 - spec.alpha)) * b.sum;
        result.report.nabla_branch = b.report;
    }
    result.value = std::move(value);
    fill_regions(result.report, spec);
    result.report.verdict =
        combine_verdicts(result.report.delta_branch, result.report.nabla_branch);
    return result;
}

ConvergenceReport combined_convergence(const SeriesSpec& spec) {
    const TimeScale& scale = spec.scale;
    if (!scale.is_uniform() && !scale.is_real()) {
        throw DomainError("convergence diagnostics need a uniform grid or the real line");
    }
    ConvergenceReport report;
    const double threshold = ratio_threshold(scale);
    auto branch_verdict = [&](const CoefficientRule& rule, BranchReport& branch) {
        branch.evaluated = true;
        branch.coeff_ratio = rule_ratio_estimate(rule);
        if (rule.kind() == CoefficientRule::Kind::Explicit) {
            branch.verdict = Verdict::Convergent;
        } else if (branch.coeff_ratio < threshold - kRatioMargin) {
            branch.verdict = Verdict::Convergent;
        } else if (branch.coeff_ratio > threshold + kRatioMargin) {
            branch.verdict = Verdict::Divergent;
        } else {
            branch.verdict = Verdict::Inconclusive;
        }
    };
    if (spec.alpha > 0) {
        branch_verdict(spec.a, report.delta_branch);
    }
    if (spec.alpha < 1) {
        branch_verdict(spec.b, report.nabla_branch);
    }
    fill_regions(report, spec);
    report.verdict = combine_verdicts(report.delta_branch, report.nabla_branch);
    return report;
}

namespace {

CoefficientRule shift_rule(const CoefficientRule& rule) {
    switch (rule.kind()) {
        case CoefficientRule::Kind::Explicit: {
            const auto& vals = rule.values();
            if (vals.size() <= 1) {
                return CoefficientRule::zero();
            }
            return CoefficientRule::explicit_list(
                std::vector<Scalar>(vals.begin() + 1, vals.end()));
        }
        case CoefficientRule::Kind::Geometric:
            return CoefficientRule::geometric(rule.ratio(), rule.lead() * rule.ratio());
        case CoefficientRule::Kind::Custom:
            return CoefficientRule::custom([rule](int k) { return rule.at(k + 1); });
    }
    throw Error("unknown coefficient rule");
}

CoefficientRule cross_rule(const CoefficientRule& rule, const Rational& step, bool alternating,
                           const TruncationPolicy& policy) {
    const Scalar factor = alternating ? Scalar(Rational(-step)) : Scalar(step);
    switch (rule.kind()) {
        case CoefficientRule::Kind::Explicit: {
            const auto& vals = rule.values();
            if (vals.size() <= 1) {
                return CoefficientRule::zero();
            }
            std::vector<Scalar> out(vals.size() - 1);
            for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
                Scalar sum;
                Scalar weight{Rational(1)};
                for (std::size_t j = k + 1; j < vals.size(); ++j) {
                    sum += weight * vals[j];
                    weight *= factor;
                }
                out[k] = std::move(sum);
            }
            return CoefficientRule::explicit_list(std::move(out));
        }
        case CoefficientRule::Kind::Geometric: {
            const Scalar& p = rule.ratio();
            const double cm = (Scalar(step) * p).abs();
            if (cm >= 1.0) {
                throw DomainError("cross derivative outside its region: c*M >= 1");
            }
            // sum_j (±c)^j p^{j+k+1} = p^{k+1} / (1 -+ c p)
            const Scalar denom = Scalar(1) - factor * p;
            return CoefficientRule::geometric(p, rule.lead() * p / denom);
        }
        case CoefficientRule::Kind::Custom: {
            const double m = rule_ratio_estimate(rule);
            const double growth = to_double(rule_bound_m(rule));
            if (!std::isfinite(m) || to_double(step) * std::max(m, growth) >= 1.0) {
                throw DomainError("cross derivative outside its region: c*M >= 1");
            }
            return CoefficientRule::custom([rule, factor, policy](int k) {
                Scalar sum;
                Scalar weight{Rational(1)};
                int consecutive = 0;
                for (int j = 0; j < policy.max_terms; ++j) {
                    const Scalar term = weight * rule.at(j + k + 1);
                    sum += term;
                    weight *= factor;
                    consecutive = term.abs() < policy.abs_tol ? consecutive + 1 : 0;
                    if (consecutive >= policy.consecutive_small) {
                        break;
                    }
                }
                // Truncated tail: the result is an approximation.
                return Scalar::approx(sum.to_complex());
            });
        }
    }
    throw Error("unknown coefficient rule");
}

}  // namespace

SeriesSpec series_shift_derivative(const SeriesSpec& spec, SeriesBranch branch) {
    SeriesSpec out = spec;
    if (branch == SeriesBranch::Delta) {
        out.a = shift_rule(spec.a);
    } else {
        out.b = shift_rule(spec.b);
    }
    return out;
}

SeriesSpec series_cross_derivative(const SeriesSpec& spec, SeriesBranch branch) {
    if (!spec.scale.is_uniform()) {
        throw DomainError("cross derivative needs a constant-graininess grid");
    }
    const Rational& c = spec.scale.step();
    SeriesSpec out = spec;
    if (branch == SeriesBranch::Delta) {
        // nabla derivative of the delta series: alternating inner sums
        out.a = cross_rule(spec.a, c, true, spec.policy);
    } else {
        out.b = cross_rule(spec.b, c, false, spec.policy);
    }
    return out;
}

namespace {

/// Chain f, f', f'', ... of iterated derivatives in one direction.
std::vector<GridFunction> derivative_chain(const GridFunction& f, const DerivKind& kind,
                                           int depth, const Config& config) {
    std::vector<GridFunction> chain;
    chain.reserve(static_cast<std::size_t>(depth) + 1);
    chain.push_back(f.memoized());
    for (int j = 0; j < depth; ++j) {
        chain.push_back(iterated_derivative(chain.back(), kind, 1, config));
    }
    return chain;
}

struct SideExpansion {
    std::vector<Scalar> coefficients;
    Scalar partial;
    Scalar remainder;
};

SideExpansion expand_side(const GridFunction& f, MonomialKind kind, int n, const Point& t0,
                          const Point& t, const Config& config) {
    const TimeScale& scale = f.scale();
    const DerivKind direction =
        kind == MonomialKind::Forward ? DerivKind::delta() : DerivKind::nabla();
    const auto chain = derivative_chain(f, direction, n + 1, config);
    SideExpansion side;
    side.coefficients.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const Scalar coeff = chain[static_cast<std::size_t>(k)](t0);
        side.partial += coeff * monomial(kind, k, t, t0, scale, config);
        side.coefficients.push_back(coeff);
    }
    const GridFunction& top = chain[static_cast<std::size_t>(n) + 1];
    if (kind == MonomialKind::Forward) {
        // R_n = integral from t0 to t of f^{delta^{n+1}}(tau) h_n(t, sigma(tau)) delta tau
        GridFunction integrand(top.domain(), [&top, n, t, scale, config](const Point& tau) {
            return top(tau) * monomial(MonomialKind::Forward, n, t, scale.sigma(tau), scale,
                                       config);
        });
        side.remainder = delta_integral(integrand, t0, t, config);
    } else {
        // The nabla remainder closes exactly with the backward kernel
        // ĥ_n(t, rho(tau)).
        GridFunction integrand(top.domain(), [&top, n, t, scale, config](const Point& tau) {
            return top(tau) * monomial(MonomialKind::Backward, n, t, scale.rho(tau), scale,
                                       config);
        });
        side.remainder = nabla_integral(integrand, t0, t, config);
    }
    return side;
}

}  // namespace

TaylorExpansion taylor(const GridFunction& f, TaylorDirection direction, int n, const Point& t0,
                       const Point& t, const Rational& alpha, const Config& config) {
    if (n < 0) {
        throw DomainError("expansion order must be non-negative");
    }
    if (alpha < 0 || alpha > 1) {
        throw DomainError("combined weight must lie in [0, 1]");
    }
    f.scale().require(t);
    f.scale().require(t0);
    TaylorExpansion result;
    result.direction = direction;
    result.effective_direction = direction;
    result.order = n;
    result.alpha = direction == TaylorDirection::Delta
                       ? Rational(1)
                       : (direction == TaylorDirection::Nabla ? Rational(0) : alpha);
    auto fill = [&result](TaylorDirection dir, SideExpansion side) {
        if (dir == TaylorDirection::Delta) {
            result.delta_coefficients = std::move(side.coefficients);
        } else {
            result.nabla_coefficients = std::move(side.coefficients);
        }
    };
    switch (direction) {
        case TaylorDirection::Delta: {
            SideExpansion side = expand_side(f, MonomialKind::Forward, n, t0, t, config);
            result.partial_sum = side.partial;
            result.remainder = side.remainder;
            fill(TaylorDirection::Delta, std::move(side));
            break;
        }
        case TaylorDirection::Nabla: {
            SideExpansion side = expand_side(f, MonomialKind::Backward, n, t0, t, config);
            result.partial_sum = side.partial;
            result.remainder = side.remainder;
            fill(TaylorDirection::Nabla, std::move(side));
            break;
        }
        case TaylorDirection::Combined: {
            std::optional<SideExpansion> fwd, back;
            try {
                fwd = expand_side(f, MonomialKind::Forward, n, t0, t, config);
            } catch (const DomainError&) {
            }
            try {
                back = expand_side(f, MonomialKind::Backward, n, t0, t, config);
            } catch (const DomainError&) {
                if (!fwd) {
                    throw;
                }
            }
            if (fwd && back) {
                const Scalar a{alpha};
                const Scalar one_minus_a{Rational(1 - alpha)};
                result.partial_sum = a * fwd->partial + one_minus_a * back->partial;
                result.remainder = a * fwd->remainder + one_minus_a * back->remainder;
                fill(TaylorDirection::Delta, std::move(*fwd));
                fill(TaylorDirection::Nabla, std::move(*back));
            } else if (fwd) {
                // Boundary t0: only the delta side exists.
                result.degraded = true;
                result.effective_direction = TaylorDirection::Delta;
                result.partial_sum = fwd->partial;
                result.remainder = fwd->remainder;
                fill(TaylorDirection::Delta, std::move(*fwd));
            } else {
                result.degraded = true;
                result.effective_direction = TaylorDirection::Nabla;
                result.partial_sum = back->partial;
                result.remainder = back->remainder;
                fill(TaylorDirection::Nabla, std::move(*back));
            }
            break;
        }
    }
    result.reconstructed = result.partial_sum + result.remainder;
    return result;
}

namespace {

struct CoefficientChain {
    std::mutex lock;
    std::vector<GridFunction> levels;
    std::vector<Scalar> coefficients;
    DerivKind kind;
    Point t0;
    Config config;

    Scalar at(int k) {
        std::lock_guard<std::mutex> guard(lock);
        while (coefficients.size() <= static_cast<std::size_t>(k)) {
            coefficients.push_back(levels.back()(t0));
            levels.push_back(iterated_derivative(levels.back(), kind, 1, config));
        }
        return coefficients[static_cast<std::size_t>(k)];
    }
};

CoefficientRule chain_rule(const GridFunction& f, const DerivKind& kind, const Point& t0,
                           const Config& config) {
    auto chain = std::make_shared<CoefficientChain>();
    chain->kind = kind;
    chain->t0 = t0;
    chain->config = config;
    chain->levels.push_back(f.memoized());
    return CoefficientRule::custom([chain](int k) { return chain->at(k); });
}

}  // namespace

SeriesSpec taylor_series_of(const GridFunction& f, TaylorDirection direction, const Point& t0,
                            const Rational& alpha, const Config& config) {
    f.scale().require(t0);
    SeriesSpec spec;
    spec.scale = f.scale();
    spec.t0 = t0;
    spec.policy = config.policy;
    switch (direction) {
        case TaylorDirection::Delta:
            spec.alpha = 1;
            spec.a = chain_rule(f, DerivKind::delta(), t0, config);
            break;
        case TaylorDirection::Nabla:
            spec.alpha = 0;
            spec.b = chain_rule(f, DerivKind::nabla(), t0, config);
            break;
        case TaylorDirection::Combined:
            if (alpha < 0 || alpha > 1) {
                throw DomainError("combined weight must lie in [0, 1]");
            }
            spec.alpha = alpha;
            spec.a = chain_rule(f, DerivKind::delta(), t0, config);
            spec.b = chain_rule(f, DerivKind::nabla(), t0, config);
            break;
    }
    return spec;
}

}  // namespace tscalc
