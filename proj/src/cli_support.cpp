#include "tscalc/cli_support.hpp"

#include "tscalc/calculus.hpp"
#include "tscalc/errors.hpp"
#include "tscalc/specials.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace tscalc {
namespace cli {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text) {
    // "p=1,t0=0" -> {{"p","1"},{"t0","0"}}
    std::map<std::string, std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw Error("expected key=value in function spec, got '" + item + "'");
        }
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

GridFunction pow2_function(const TimeScale& scale) {
    GridFunction f(scale, [](const Point& t) {
        if (is_integer(t)) {
            return Scalar(rat_ipow(Rational(2), to_long(t)));
        }
        return Scalar::approx(std::pow(2.0, to_double(t)));
    });
    if (scale.is_real()) {
        f = f.with_derivative([](const Point& t) {
            return Scalar::approx(std::log(2.0) * std::pow(2.0, to_double(t)));
        });
    }
    return f;
}

GridFunction poly_function(const TimeScale& scale, const std::string& coeff_list) {
    std::vector<Rational> coeffs;
    std::stringstream stream(coeff_list);
    std::string item;
    while (std::getline(stream, item, ',')) {
        coeffs.push_back(parse_rational(item));
    }
    if (coeffs.empty()) {
        throw Error("poly: needs at least one coefficient");
    }
    GridFunction f(scale, [coeffs](const Point& t) {
        // Horner evaluation, exact for rational t
        Rational value(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            value = value * t + *it;
        }
        return Scalar(value);
    });
    if (scale.is_real()) {
        f = f.with_derivative([coeffs](const Point& t) {
            Rational value(0);
            for (std::size_t i = coeffs.size(); i-- > 1;) {
                value = value * t + coeffs[i] * static_cast<long>(i);
            }
            return Scalar::approx(to_double(value));
        });
    }
    return f.declare_exact(true);
}

GridFunction table_function(const TimeScale& scale, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open table: " + path);
    }
    std::vector<std::pair<Point, Scalar>> samples;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (first && line.find("t,") == 0) {
            first = false;  // optional header
            continue;
        }
        first = false;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw Error("table row needs two columns: '" + line + "'");
        }
        samples.emplace_back(parse_rational(line.substr(0, comma)),
                             Scalar(parse_rational(line.substr(comma + 1))));
    }
    return GridFunction::from_samples(scale, std::move(samples));
}

TrigFamily parse_trig_family(const std::string& name) {
    if (name == "sin") return TrigFamily::Sin;
    if (name == "cos") return TrigFamily::Cos;
    if (name == "sinh") return TrigFamily::Sinh;
    if (name == "cosh") return TrigFamily::Cosh;
    if (name == "hatsin") return TrigFamily::HatSin;
    if (name == "hatcos") return TrigFamily::HatCos;
    if (name == "hatsinh") return TrigFamily::HatSinh;
    if (name == "hatcosh") return TrigFamily::HatCosh;
    throw Error("unknown function: '" + name + "'");
}

}  // namespace

TimeScale parse_scale_arg(const std::string& arg) {
    if (arg == "z" || arg == "Z") {
        return TimeScale::integers();
    }
    if (arg == "r" || arg == "R") {
        return TimeScale::real();
    }
    if (!arg.empty() && arg.front() == '@') {
        return scale_from_json(read_json_file(arg.substr(1)));
    }
    if (!arg.empty() && arg.front() == '{') {
        return scale_from_json(parse_json_text(arg));
    }
    throw Error("unknown scale '" + arg + "'; use z, r, inline JSON, or @file");
}

GridFunction parse_function_spec(const std::string& spec, const TimeScale& scale,
                                 const Config& config) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "pow2") {
        return pow2_function(scale);
    }
    if (head == "poly") {
        return poly_function(scale, tail);
    }
    if (head == "table") {
        return table_function(scale, tail);
    }
    if (head == "exp" || head == "hatexp") {
        auto kv = parse_kv(tail);
        if (!kv.count("p")) {
            throw Error(head + ": needs p=<rational>");
        }
        const Scalar p{parse_rational(kv.at("p"))};
        const Point t0 = kv.count("t0") ? parse_rational(kv.at("t0")) : Rational(0);
        const ExpParams params = head == "exp" ? ExpParams::delta_exp(p, t0)
                                               : ExpParams::nabla_exp(p, t0);
        return exp_function(params, scale);
    }
    if (head == "mono") {
        auto kv = parse_kv(tail);
        if (!kv.count("k")) {
            throw Error("mono: needs k=<int>");
        }
        const int k = static_cast<int>(to_long(parse_rational(kv.at("k"))));
        const Point t0 = kv.count("t0") ? parse_rational(kv.at("t0")) : Rational(0);
        const MonomialKind kind =
            kv.count("kind") ? parse_monomial_kind(kv.at("kind")) : MonomialKind::Forward;
        return monomial_function(kind, k, t0, scale, config);
    }
    auto kv = parse_kv(tail);
    if (!kv.count("p")) {
        throw Error(head + ": needs p=<rational>");
    }
    const Rational p = parse_rational(kv.at("p"));
    const Point t0 = kv.count("t0") ? parse_rational(kv.at("t0")) : Rational(0);
    return trig_function(parse_trig_family(head), p, t0, scale);
}

DerivKind parse_deriv_kind(const std::string& kind, const std::string& alpha) {
    if (kind == "delta") {
        return DerivKind::delta();
    }
    if (kind == "nabla") {
        return DerivKind::nabla();
    }
    if (kind == "diamond") {
        return DerivKind::diamond(parse_rational(alpha));
    }
    throw Error("unknown derivative kind: '" + kind + "'");
}

MonomialKind parse_monomial_kind(const std::string& kind) {
    if (kind == "forward") {
        return MonomialKind::Forward;
    }
    if (kind == "backward") {
        return MonomialKind::Backward;
    }
    throw Error("unknown monomial kind: '" + kind + "'");
}

TaylorDirection parse_direction(const std::string& direction) {
    if (direction == "delta") {
        return TaylorDirection::Delta;
    }
    if (direction == "nabla") {
        return TaylorDirection::Nabla;
    }
    if (direction == "combined") {
        return TaylorDirection::Combined;
    }
    throw Error("unknown direction: '" + direction + "'");
}

nlohmann::json cmd_monomial(const TimeScale& scale, MonomialKind kind, int k, const Point& t,
                            const Point& t0, bool both, const Config& config) {
    const Scalar value = monomial(kind, k, t, t0, scale, config);
    nlohmann::json out{
        {"cmd", "monomial"},
        {"scale", scale_to_json(scale)},
        {"kind", kind == MonomialKind::Forward ? "forward" : "backward"},
        {"k", k},
        {"t", format_rational(t)},
        {"t0", format_rational(t0)},
        {"result", scalar_to_json(value)},
        {"exact", value.exact()},
    };
    if (both) {
        // hhat_k(t,t0) = (-1)^k h_k(t0,t) and, symmetrically,
        // h_k(t,t0) = (-1)^k hhat_k(t0,t)
        const MonomialKind other =
            kind == MonomialKind::Forward ? MonomialKind::Backward : MonomialKind::Forward;
        Scalar partner = monomial(other, k, t0, t, scale, config);
        if (k % 2 != 0) {
            partner = -partner;
        }
        out["duality_partner"] = scalar_to_json(partner);
        out["duality_holds"] = value == partner;
    }
    return out;
}

nlohmann::json cmd_deriv(const TimeScale& scale, const std::string& fn_spec,
                         const DerivKind& kind, const Point& t, const Config& config) {
    const GridFunction f = parse_function_spec(fn_spec, scale, config);
    const DerivValue d = derivative(f, t, kind, config);
    nlohmann::json out{
        {"cmd", "deriv"},
        {"scale", scale_to_json(scale)},
        {"fn", fn_spec},
        {"t", format_rational(t)},
        {"result", scalar_to_json(d.value)},
        {"exact", d.value.exact()},
    };
    switch (kind.tag) {
        case DerivKind::Tag::Delta:
            out["kind"] = "delta";
            break;
        case DerivKind::Tag::Nabla:
            out["kind"] = "nabla";
            break;
        case DerivKind::Tag::Diamond:
            out["kind"] = "diamond";
            out["alpha"] = format_rational(kind.alpha);
            break;
    }
    if (d.finite_difference) {
        out["numerical_fallback"] = true;
    }
    return out;
}

nlohmann::json cmd_taylor(const TimeScale& scale, const std::string& fn_spec,
                          TaylorDirection direction, const Rational& alpha, int n,
                          const Point& t0, const Point& t, const Config& config) {
    const GridFunction f = parse_function_spec(fn_spec, scale, config);
    const TaylorExpansion expansion = taylor(f, direction, n, t0, t, alpha, config);
    const Scalar target = f(t);
    auto coeff_array = [](const std::vector<Scalar>& coeffs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : coeffs) {
            arr.push_back(scalar_to_json(c));
        }
        return arr;
    };
    nlohmann::json out{
        {"cmd", "taylor"},
        {"scale", scale_to_json(scale)},
        {"fn", fn_spec},
        {"n", n},
        {"t0", format_rational(t0)},
        {"t", format_rational(t)},
        {"partial_sum", scalar_to_json(expansion.partial_sum)},
        {"remainder", scalar_to_json(expansion.remainder)},
        {"reconstructed", scalar_to_json(expansion.reconstructed)},
        {"f_t", scalar_to_json(target)},
        {"reconstruction_ok", expansion.reconstructed == target},
        {"exact", expansion.reconstructed.exact()},
    };
    switch (direction) {
        case TaylorDirection::Delta:
            out["dir"] = "delta";
            out["coefficients"] = coeff_array(expansion.delta_coefficients);
            break;
        case TaylorDirection::Nabla:
            out["dir"] = "nabla";
            out["coefficients"] = coeff_array(expansion.nabla_coefficients);
            break;
        case TaylorDirection::Combined:
            out["dir"] = "combined";
            out["alpha"] = format_rational(expansion.alpha);
            out["delta_coefficients"] = coeff_array(expansion.delta_coefficients);
            out["nabla_coefficients"] = coeff_array(expansion.nabla_coefficients);
            if (expansion.degraded) {
                out["degraded_to"] =
                    expansion.effective_direction == TaylorDirection::Delta ? "delta" : "nabla";
            }
            break;
    }
    return out;
}

nlohmann::json cmd_series(const SeriesSpec& spec, const Point& t, bool force) {
    const SeriesValue result = series_eval(spec, t, force);
    return nlohmann::json{
        {"cmd", "series"},
        {"t", format_rational(t)},
        {"alpha", format_rational(spec.alpha)},
        {"t0", format_rational(spec.t0)},
        {"value", scalar_to_json(result.value)},
        {"exact", result.value.exact()},
        {"report", convergence_report_to_json(result.report)},
    };
}

std::string csv_value(const Scalar& value) {
    if (value.exact() && value.is_real()) {
        return format_rational(value.re());
    }
    std::ostringstream out;
    out.precision(17);
    out << value.to_double();
    return out.str();
}

void cmd_series_sweep(const SeriesSpec& spec, const Point& t_min, const Point& t_max, bool force,
                      std::ostream& out) {
    if (!spec.scale.is_discrete()) {
        throw DomainError("sweep needs a discrete scale");
    }
    if (t_min > t_max) {
        throw DomainError("sweep range is empty");
    }
    std::vector<Point> points;
    if (spec.scale.is_uniform()) {
        const Rational& c = spec.scale.step();
        const Integer start = rat_ceil((t_min - spec.scale.offset()) / c);
        for (Point t = spec.scale.offset() + Rational(start) * c; t <= t_max; t += c) {
            points.push_back(t);
        }
    } else {
        for (const auto& p : spec.scale.points()) {
            if (p >= t_min && p <= t_max) {
                points.push_back(p);
            }
        }
    }
    out << "t,value,verdict,terms_used\n";
    for (const auto& t : points) {
        try {
            const SeriesValue result = series_eval(spec, t, force);
            const int terms = result.report.delta_branch.terms_used +
                              result.report.nabla_branch.terms_used;
            out << format_rational(t) << ',' << csv_value(result.value) << ','
                << to_string(result.report.verdict) << ',' << terms << '\n';
        } catch (const DivergenceError&) {
            out << format_rational(t) << ",,divergent,0\n";
        }
    }
}

}  // namespace cli
}  // namespace tscalc
