#include "tscalc/scale.hpp"

#include "tscalc/errors.hpp"

#include <algorithm>
#include <utility>

namespace tscalc {

TimeScale TimeScale::real() {
    TimeScale scale;
    scale.kind_ = Kind::Real;
    return scale;
}

TimeScale TimeScale::uniform(Rational offset, Rational step) {
    if (step <= 0) {
        throw DomainError("uniform grid step must be positive");
    }
    TimeScale scale;
    scale.kind_ = Kind::Uniform;
    scale.offset_ = std::move(offset);
    scale.step_ = std::move(step);
    return scale;
}

TimeScale TimeScale::finite(std::vector<Rational> points) {
    if (points.size() < 2) {
        throw DomainError("finite grid needs at least 2 points");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i - 1] < points[i])) {
            throw DomainError("finite grid points must be strictly increasing");
        }
    }
    TimeScale scale;
    scale.kind_ = Kind::Finite;
    scale.points_ = std::make_shared<const std::vector<Rational>>(std::move(points));
    return scale;
}

bool TimeScale::contains(const Point& t) const {
    switch (kind_) {
        case Kind::Real:
            return true;
        case Kind::Uniform:
            return is_integer((t - offset_) / step_);
        case Kind::Finite:
            return std::binary_search(points_->begin(), points_->end(), t);
    }
    return false;
}

void TimeScale::require(const Point& t) const {
    if (!contains(t)) {
        throw DomainError("point " + format_rational(t) + " is not on the scale");
    }
}

Point TimeScale::sigma(const Point& t) const {
    require(t);
    switch (kind_) {
        case Kind::Real:
            return t;
        case Kind::Uniform:
            return t + step_;
        case Kind::Finite: {
            auto it = std::upper_bound(points_->begin(), points_->end(), t);
            return it == points_->end() ? t : *it;
        }
    }
    return t;
}

Point TimeScale::rho(const Point& t) const {
    require(t);
    switch (kind_) {
        case Kind::Real:
            return t;
        case Kind::Uniform:
            return t - step_;
        case Kind::Finite: {
            auto it = std::lower_bound(points_->begin(), points_->end(), t);
            return it == points_->begin() ? t : *(it - 1);
        }
    }
    return t;
}

Rational TimeScale::mu(const Point& t) const {
    return sigma(t) - t;
}

Rational TimeScale::nu(const Point& t) const {
    return t - rho(t);
}

PointClass TimeScale::classify(const Point& t) const {
    require(t);
    return PointClass{
        rho(t) < t ? Side::Scattered : Side::Dense,
        sigma(t) > t ? Side::Scattered : Side::Dense,
    };
}

Point TimeScale::min_point() const {
    if (kind_ != Kind::Finite) {
        throw DomainError("scale is unbounded below");
    }
    return points_->front();
}

Point TimeScale::max_point() const {
    if (kind_ != Kind::Finite) {
        throw DomainError("scale is unbounded above");
    }
    return points_->back();
}

const Rational& TimeScale::offset() const {
    if (kind_ != Kind::Uniform) {
        throw DomainError("offset is defined for uniform grids only");
    }
    return offset_;
}

const Rational& TimeScale::step() const {
    if (kind_ != Kind::Uniform) {
        throw DomainError("step is defined for uniform grids only");
    }
    return step_;
}

const std::vector<Rational>& TimeScale::points() const {
    if (kind_ != Kind::Finite) {
        throw DomainError("explicit points are defined for finite grids only");
    }
    return *points_;
}

std::size_t TimeScale::index_of(const Point& t) const {
    const auto& pts = points();
    auto it = std::lower_bound(pts.begin(), pts.end(), t);
    if (it == pts.end() || *it != t) {
        throw DomainError("point " + format_rational(t) + " is not on the grid");
    }
    return static_cast<std::size_t>(it - pts.begin());
}

Rational TimeScale::constant_graininess() const {
    switch (kind_) {
        case Kind::Real:
            return Rational(0);
        case Kind::Uniform:
            return step_;
        case Kind::Finite:
            throw DomainError("finite grids have no constant graininess");
    }
    return Rational(0);
}

std::shared_ptr<const std::vector<Rational>> TimeScale::finite_data() const {
    return points_;
}

bool TimeScale::operator==(const TimeScale& other) const {
    if (kind_ != other.kind_) {
        return false;
    }
    switch (kind_) {
        case Kind::Real:
            return true;
        case Kind::Uniform:
            return offset_ == other.offset_ && step_ == other.step_;
        case Kind::Finite:
            return points_ == other.points_ || *points_ == *other.points_;
    }
    return false;
}

TrimmedScale::TrimmedScale(TimeScale base) : base_(std::move(base)) {}

TrimmedScale::TrimmedScale(TimeScale base, int upper, int lower) : base_(std::move(base)) {
    if (upper < 0 || lower < 0) {
        throw DomainError("trim counts must be non-negative");
    }
    // Trimming an unbounded side is the identity.
    upper_ = base_.bounded_above() ? upper : 0;
    lower_ = base_.bounded_below() ? lower : 0;
    if (base_.is_finite()) {
        const auto n = base_.points().size();
        if (static_cast<std::size_t>(upper_) + static_cast<std::size_t>(lower_) >= n) {
            throw DomainError("trim leaves an empty scale");
        }
    }
}

bool TrimmedScale::contains(const Point& t) const {
    if (!base_.contains(t)) {
        return false;
    }
    if (base_.is_finite() && !trivial()) {
        const std::size_t i = base_.index_of(t);
        const std::size_t n = base_.points().size();
        return i >= static_cast<std::size_t>(lower_) && i < n - static_cast<std::size_t>(upper_);
    }
    return true;
}

void TrimmedScale::require(const Point& t) const {
    if (!contains(t)) {
        throw DomainError("point " + format_rational(t) + " is outside the trimmed scale");
    }
}

TrimmedScale TrimmedScale::trim(int upper_more, int lower_more) const {
    return TrimmedScale(base_, upper_ + upper_more, lower_ + lower_more);
}

std::size_t TrimmedScale::size() const {
    const auto n = base_.points().size();
    return n - static_cast<std::size_t>(upper_) - static_cast<std::size_t>(lower_);
}

Point TrimmedScale::min_point() const {
    return base_.points().at(static_cast<std::size_t>(lower_));
}

Point TrimmedScale::max_point() const {
    const auto& pts = base_.points();
    return pts.at(pts.size() - 1 - static_cast<std::size_t>(upper_));
}

}  // namespace tscalc
