#pragma once

#include "tscalc/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace tscalc {

enum class Side { Dense, Scattered };

/// Classification of a point: whether its left/right neighbourhood in the
/// scale is dense or scattered.
struct PointClass {
    Side left;
    Side right;
};

/// A time scale: the real line, a uniform grid offset + step*Z, or a
/// finite explicit grid. Values are immutable after construction and safe
/// for shared concurrent reads.
class TimeScale {
public:
    enum class Kind { Real, Uniform, Finite };

    static TimeScale real();
    /// offset + step*Z; step must be positive.
    static TimeScale uniform(Rational offset, Rational step);
    static TimeScale integers() { return uniform(Rational(0), Rational(1)); }
    /// cZ with c > 0.
    static TimeScale multiples(Rational c) { return uniform(Rational(0), std::move(c)); }
    /// Strictly increasing points, at least 2 of them.
    static TimeScale finite(std::vector<Rational> points);

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    bool is_uniform() const { return kind_ == Kind::Uniform; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_discrete() const { return kind_ != Kind::Real; }

    /// Exact membership test.
    bool contains(const Point& t) const;
    /// Throws DomainError when t is off-scale.
    void require(const Point& t) const;

    /// Forward jump operator; sigma(max) = max on bounded-above scales.
    Point sigma(const Point& t) const;
    /// Backward jump operator; rho(min) = min on bounded-below scales.
    Point rho(const Point& t) const;
    /// Forward graininess sigma(t) - t.
    Rational mu(const Point& t) const;
    /// Backward graininess t - rho(t).
    Rational nu(const Point& t) const;
    PointClass classify(const Point& t) const;

    bool bounded_above() const { return kind_ == Kind::Finite; }
    bool bounded_below() const { return kind_ == Kind::Finite; }
    Point min_point() const;  // finite grids only
    Point max_point() const;

    const Rational& offset() const;  // uniform grids only
    const Rational& step() const;
    const std::vector<Rational>& points() const;  // finite grids only
    std::size_t index_of(const Point& t) const;

    /// Constant graininess of a homogeneous scale: step for uniform grids,
    /// 0 for the real line. Throws DomainError for finite grids.
    Rational constant_graininess() const;

    /// Shared payload of a finite grid; usable as a cache identity key.
    std::shared_ptr<const std::vector<Rational>> finite_data() const;

    bool operator==(const TimeScale& other) const;
    bool operator!=(const TimeScale& other) const { return !(*this == other); }

private:
    TimeScale() = default;

    Kind kind_ = Kind::Real;
    Rational offset_, step_;
    std::shared_ptr<const std::vector<Rational>> points_;
};

/// T^{k^n} ∩ T_{k^m}: the base scale with n top and m bottom boundary
/// points removed. Trimming an unbounded side is the identity.
class TrimmedScale {
public:
    TrimmedScale(TimeScale base);  // NOLINT: implicit by design
    TrimmedScale(TimeScale base, int upper, int lower);

    const TimeScale& base() const { return base_; }
    int upper_trim() const { return upper_; }
    int lower_trim() const { return lower_; }
    bool trivial() const { return upper_ == 0 && lower_ == 0; }

    bool contains(const Point& t) const;
    void require(const Point& t) const;

    /// Additional trimming, composed with the existing counts.
    TrimmedScale trim(int upper_more, int lower_more) const;

    /// Number of remaining points (finite grids only).
    std::size_t size() const;

    /// Extremes of the trimmed grid (finite grids only).
    Point min_point() const;
    Point max_point() const;

private:
    TimeScale base_;
    int upper_ = 0;
    int lower_ = 0;
};

inline TrimmedScale trim(const TimeScale& scale, int upper, int lower) {
    return TrimmedScale(scale, upper, lower);
}

}  // namespace tscalc
