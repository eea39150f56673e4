#include "tscalc/monomials.hpp"

#include "tscalc/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace tscalc {

namespace {

void check_order(int k, const Config& config) {
    if (k < 0) {
        throw DomainError("monomial order must be non-negative");
    }
    if (k > config.max_monomial_order) {
        throw DomainError("monomial order exceeds the configured cap");
    }
}

Rational uniform_monomial(MonomialKind kind, int k, const Rational& x, const Rational& c) {
    // c^k * x^(falling or rising k) / k!, built incrementally so the value
    // stays reduced at every step.
    Rational value(1);
    for (int j = 0; j < k; ++j) {
        const Rational factor = kind == MonomialKind::Forward ? Rational(x - j) : Rational(x + j);
        if (factor == 0) {
            return Rational(0);
        }
        value *= c * factor / (j + 1);
    }
    return value;
}

// Levels of the recursive integral definition on a finite grid, one value
// per grid point, built by a single sweep per level.
struct FiniteTable {
    std::vector<std::vector<Rational>> levels;
};

using FiniteKey =
    std::tuple<std::shared_ptr<const std::vector<Rational>>, MonomialKind, Rational>;

std::mutex finite_cache_lock;
std::map<FiniteKey, std::shared_ptr<FiniteTable>> finite_cache;

void extend_table(FiniteTable& table, const std::vector<Rational>& pts, MonomialKind kind,
                  std::size_t origin, int k) {
    const std::size_t n = pts.size();
    if (table.levels.empty()) {
        table.levels.emplace_back(n, Rational(1));
    }
    while (table.levels.size() <= static_cast<std::size_t>(k)) {
        const auto& prev = table.levels.back();
        std::vector<Rational> next(n, Rational(0));
        if (kind == MonomialKind::Forward) {
            // next[i] = delta-integral of prev from the origin to pts[i]
            for (std::size_t i = origin + 1; i < n; ++i) {
                next[i] = next[i - 1] + (pts[i] - pts[i - 1]) * prev[i - 1];
            }
            for (std::size_t i = origin; i-- > 0;) {
                next[i] = next[i + 1] - (pts[i + 1] - pts[i]) * prev[i];
            }
        } else {
            // nabla-integral counterpart
            for (std::size_t i = origin + 1; i < n; ++i) {
                next[i] = next[i - 1] + (pts[i] - pts[i - 1]) * prev[i];
            }
            for (std::size_t i = origin; i-- > 0;) {
                next[i] = next[i + 1] - (pts[i + 1] - pts[i]) * prev[i + 1];
            }
        }
        table.levels.push_back(std::move(next));
    }
}

Rational finite_monomial(MonomialKind kind, int k, const Point& t, const Point& t0,
                         const TimeScale& scale) {
    const auto data = scale.finite_data();
    const std::size_t origin = scale.index_of(t0);
    const std::size_t at = scale.index_of(t);
    std::lock_guard<std::mutex> guard(finite_cache_lock);
    if (finite_cache.size() > 64) {
        finite_cache.clear();
    }
    auto& table = finite_cache[FiniteKey(data, kind, t0)];
    if (!table) {
        table = std::make_shared<FiniteTable>();
    }
    extend_table(*table, *data, kind, origin, k);
    return table->levels[static_cast<std::size_t>(k)][at];
}

}  // namespace

Rational falling_factorial(const Rational& t, int k) {
    if (k < 0) {
        throw DomainError("factorial order must be non-negative");
    }
    Rational value(1);
    for (int j = 0; j < k; ++j) {
        value *= t - j;
    }
    return value;
}

Rational rising_factorial(const Rational& t, int k) {
    if (k < 0) {
        throw DomainError("factorial order must be non-negative");
    }
    Rational value(1);
    for (int j = 0; j < k; ++j) {
        value *= t + j;
    }
    return value;
}

Rational factorial(int k) {
    if (k < 0) {
        throw DomainError("factorial order must be non-negative");
    }
    Rational value(1);
    for (int j = 2; j <= k; ++j) {
        value *= j;
    }
    return value;
}

Scalar monomial(MonomialKind kind, int k, const Point& t, const Point& t0,
                const TimeScale& scale, const Config& config) {
    check_order(k, config);
    scale.require(t);
    scale.require(t0);
    switch (scale.kind()) {
        case TimeScale::Kind::Real: {
            // (t - t0)^k / k!, accumulated in floating point
            double value = 1.0;
            const double d = to_double(t - t0);
            for (int j = 1; j <= k; ++j) {
                value *= d / j;
            }
            return Scalar::approx(value);
        }
        case TimeScale::Kind::Uniform: {
            const Rational& c = scale.step();
            const Rational x = (t - t0) / c;
            return Scalar(uniform_monomial(kind, k, x, c));
        }
        case TimeScale::Kind::Finite:
            return Scalar(finite_monomial(kind, k, t, t0, scale));
    }
    throw Error("unknown scale kind");
}

std::pair<Scalar, Scalar> duality(int k, const Point& t, const Point& t0,
                                  const TimeScale& scale, const Config& config) {
    Scalar lhs = monomial(MonomialKind::Backward, k, t, t0, scale, config);
    Scalar rhs = monomial(MonomialKind::Forward, k, t0, t, scale, config);
    if (k % 2 != 0) {
        rhs = -rhs;
    }
    return {std::move(lhs), std::move(rhs)};
}

Scalar monomial_derivative(MonomialKind kind, int k, const Point& t, const Point& t0,
                           const TimeScale& scale, const DerivKind& dkind,
                           const Config& config) {
    check_order(k, config);
    if (k == 0) {
        return Scalar();
    }
    auto own_direction = [&] { return monomial(kind, k - 1, t, t0, scale, config); };
    // Cross-direction sum: sum_{j=0}^{k-1} (sign * g)^j m_{k-1-j}(t, t0)
    auto cross_sum = [&](const Rational& grain, bool alternating, int j_begin) {
        Scalar sum;
        Rational weight = rat_ipow(alternating ? Rational(-grain) : grain, j_begin);
        for (int j = j_begin; j <= k - 1; ++j) {
            sum += Scalar(weight) * monomial(kind, k - 1 - j, t, t0, scale, config);
            weight *= alternating ? Rational(-grain) : grain;
        }
        return sum;
    };
    switch (dkind.tag) {
        case DerivKind::Tag::Delta:
            if (kind == MonomialKind::Forward) {
                return own_direction();
            }
            return cross_sum(scale.mu(t), false, 0);
        case DerivKind::Tag::Nabla:
            if (kind == MonomialKind::Backward) {
                return own_direction();
            }
            return cross_sum(scale.nu(t), true, 0);
        case DerivKind::Tag::Diamond: {
            const Rational& alpha = dkind.alpha;
            if (kind == MonomialKind::Forward) {
                return own_direction() +
                       Scalar(Rational(1 - alpha)) * cross_sum(scale.nu(t), true, 1);
            }
            return own_direction() + Scalar(alpha) * cross_sum(scale.mu(t), false, 1);
        }
    }
    throw Error("unknown derivative kind");
}

GridFunction monomial_function(MonomialKind kind, int k, const Point& t0,
                               const TimeScale& scale, const Config& config) {
    check_order(k, config);
    GridFunction f(scale, [kind, k, t0, scale, config](const Point& t) {
        return monomial(kind, k, t, t0, scale, config);
    });
    if (scale.is_real()) {
        f = f.with_derivative([kind, k, t0, scale, config](const Point& t) {
            return k == 0 ? Scalar::approx(0.0) : monomial(kind, k - 1, t, t0, scale, config);
        });
    }
    return f.declare_exact(scale.is_discrete());
}

}  // namespace tscalc
