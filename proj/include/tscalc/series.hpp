#pragma once

#include "tscalc/calculus.hpp"
#include "tscalc/config.hpp"
#include "tscalc/grid_function.hpp"
#include "tscalc/monomials.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tscalc {

/// Coefficient sequence (a_k) of a polynomial series: an explicit
/// zero-extended list, an exact geometric rule lead * ratio^k, or an
/// arbitrary callable (memoized).
class CoefficientRule {
public:
    enum class Kind { Explicit, Geometric, Custom };

    static CoefficientRule explicit_list(std::vector<Scalar> values);
    static CoefficientRule geometric(Scalar ratio, Scalar lead = Scalar(1));
    static CoefficientRule custom(std::function<Scalar(int)> fn);
    static CoefficientRule zero() { return explicit_list({}); }

    Kind kind() const { return kind_; }
    Scalar at(int k) const;

    /// Entry count for explicit lists (coefficients vanish beyond it).
    std::optional<int> finite_support() const;

    const Scalar& ratio() const;
    const Scalar& lead() const;
    const std::vector<Scalar>& values() const;

private:
    CoefficientRule() = default;

    Kind kind_ = Kind::Explicit;
    std::vector<Scalar> values_;
    Scalar lead_{Rational(1)};
    Scalar ratio_{Rational(0)};
    std::function<Scalar(int)> fn_;
    struct Memo;
    std::shared_ptr<Memo> memo_;
};

/// Combined-polynomial series
///   S_alpha(t, t0) = alpha * sum a_k h_k(t,t0) + (1-alpha) * sum b_k ĥ_k(t,t0)
/// together with its evaluation policy.
struct SeriesSpec {
    Rational alpha = 1;
    Point t0 = Rational(0);
    CoefficientRule a = CoefficientRule::zero();
    CoefficientRule b = CoefficientRule::zero();
    TimeScale scale = TimeScale::integers();
    TruncationPolicy policy;
};

enum class Verdict { Convergent, FiniteSum, Divergent, Inconclusive };
const char* to_string(Verdict verdict);

struct BranchReport {
    bool evaluated = false;
    Verdict verdict = Verdict::Inconclusive;
    /// Estimated limsup |a_{k+1}/a_k| (exact for geometric rules, 0 when
    /// not estimated).
    double coeff_ratio = 0.0;
    int terms_used = 0;
    bool exact = false;
};

struct ConvergenceReport {
    BranchReport delta_branch;
    BranchReport nabla_branch;
    /// lim |h_{k+1}/h_k|: the constant graininess c on cZ, 0 on the real
    /// line and on finite grids.
    double monomial_ratio = 0.0;
    /// Coefficient bound |a_k| <= M^k (0 when not inferable).
    Rational bound_m = 0;
    /// Term-wise-differentiation regions of validity.
    std::string region_i;
    std::string region_j;
    Verdict verdict = Verdict::Inconclusive;
};

struct SeriesValue {
    Scalar value;
    ConvergenceReport report;
};

/// Evaluates the combined series at t. Sides that the zero region makes
/// finite are summed exactly; the rest is truncated per policy. A branch
/// judged divergent withholds the value (DivergenceError) unless force.
SeriesValue series_eval(const SeriesSpec& spec, const Point& t, bool force = false);

/// Ratio-test diagnostics without a query point; the scale must be a
/// uniform grid or the real line.
ConvergenceReport combined_convergence(const SeriesSpec& spec);

enum class SeriesBranch { Delta, Nabla };

/// Same-direction derivative of one branch: coefficients shift by one.
SeriesSpec series_shift_derivative(const SeriesSpec& spec, SeriesBranch branch);

/// Cross-direction derivative of one branch on cZ (nabla of the delta
/// branch, delta of the nabla branch): coefficients become
///   sum_j (-+ c)^j a_{j+k+1}
/// evaluated exactly for geometric and explicit rules, truncated for
/// custom ones. Requires c * M < 1 for an inferable bound M.
SeriesSpec series_cross_derivative(const SeriesSpec& spec, SeriesBranch branch);

enum class TaylorDirection { Delta, Nabla, Combined };

/// Taylor expansion of order n about t0 evaluated at t; on discrete
/// scales partial_sum + remainder reproduces f(t) exactly.
struct TaylorExpansion {
    TaylorDirection direction = TaylorDirection::Delta;
    /// Direction actually used (combined can degrade at a boundary t0).
    TaylorDirection effective_direction = TaylorDirection::Delta;
    Rational alpha = 1;
    int order = 0;
    std::vector<Scalar> delta_coefficients;  // f^{delta^k}(t0), k <= n
    std::vector<Scalar> nabla_coefficients;  // f^{nabla^k}(t0), k <= n
    Scalar partial_sum;
    Scalar remainder;
    Scalar reconstructed;  // partial_sum + remainder
    bool degraded = false;
};

TaylorExpansion taylor(const GridFunction& f, TaylorDirection direction, int n, const Point& t0,
                       const Point& t, const Rational& alpha = Rational(1, 2),
                       const Config& config = default_config());

/// The (infinite) Taylor series of f about t0 as a SeriesSpec whose
/// coefficients are the iterated derivatives at t0, memoized.
SeriesSpec taylor_series_of(const GridFunction& f, TaylorDirection direction, const Point& t0,
                            const Rational& alpha = Rational(1, 2),
                            const Config& config = default_config());

}  // namespace tscalc
