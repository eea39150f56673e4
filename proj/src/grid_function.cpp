#include "tscalc/grid_function.hpp"

#include "tscalc/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace tscalc {

GridFunction::GridFunction(TrimmedScale domain, Evaluator eval)
    : domain_(std::move(domain)), eval_(std::move(eval)) {
    if (!eval_) {
        throw Error("grid function needs an evaluator");
    }
}

GridFunction::GridFunction(TimeScale scale, Evaluator eval)
    : GridFunction(TrimmedScale(std::move(scale)), std::move(eval)) {}

GridFunction GridFunction::from_samples(TimeScale scale,
                                        std::vector<std::pair<Point, Scalar>> samples) {
    auto table = std::make_shared<std::map<Point, Scalar>>();
    bool exact = true;
    for (auto& [t, value] : samples) {
        scale.require(t);
        exact = exact && value.exact();
        table->emplace(std::move(t), std::move(value));
    }
    GridFunction f(std::move(scale), [table](const Point& t) {
        auto it = table->find(t);
        if (it == table->end()) {
            throw DomainError("no sample at t = " + format_rational(t));
        }
        return it->second;
    });
    return f.declare_exact(exact);
}

GridFunction GridFunction::constant(TimeScale scale, Scalar value) {
    const bool exact = value.exact();
    GridFunction f(std::move(scale), [value](const Point&) { return value; });
    return f.declare_exact(exact);
}

Scalar GridFunction::operator()(const Point& t) const {
    domain_.require(t);
    return eval_(t);
}

GridFunction GridFunction::with_derivative(Evaluator derivative) const {
    GridFunction f = *this;
    f.derivative_ = std::move(derivative);
    return f;
}

Scalar GridFunction::derivative_at(const Point& t) const {
    if (!derivative_) {
        throw Error("no closed-form derivative attached");
    }
    return derivative_(t);
}

GridFunction GridFunction::memoized() const {
    struct Cache {
        std::mutex lock;
        std::map<Point, Scalar> values;
    };
    auto cache = std::make_shared<Cache>();
    Evaluator inner = eval_;
    GridFunction f = *this;
    f.eval_ = [cache, inner](const Point& t) {
        {
            std::lock_guard<std::mutex> guard(cache->lock);
            auto it = cache->values.find(t);
            if (it != cache->values.end()) {
                return it->second;
            }
        }
        Scalar value = inner(t);
        std::lock_guard<std::mutex> guard(cache->lock);
        return cache->values.emplace(t, std::move(value)).first->second;
    };
    return f;
}

GridFunction GridFunction::declare_exact(bool exact) const {
    GridFunction f = *this;
    f.declared_exact_ = exact;
    return f;
}

}  // namespace tscalc
