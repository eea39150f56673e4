#include "tscalc/json_io.hpp"

#include "tscalc/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <vector>

namespace tscalc {

namespace {

Rational rational_field(const nlohmann::json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_number()) {
        return Rational(j.get<double>());
    }
    throw Error("expected a rational value, got: " + j.dump());
}

}  // namespace

TimeScale scale_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type")) {
        throw Error("scale description needs a \"type\" field");
    }
    const std::string type = j.at("type").get<std::string>();
    if (type == "real") {
        return TimeScale::real();
    }
    if (type == "uniform") {
        const Rational offset = j.contains("offset") ? rational_field(j.at("offset")) : Rational(0);
        if (!j.contains("step")) {
            throw Error("uniform scale needs a \"step\" field");
        }
        return TimeScale::uniform(offset, rational_field(j.at("step")));
    }
    if (type == "finite") {
        if (!j.contains("points")) {
            throw Error("finite scale needs a \"points\" field");
        }
        std::vector<Rational> points;
        for (const auto& p : j.at("points")) {
            points.push_back(rational_field(p));
        }
        return TimeScale::finite(std::move(points));
    }
    throw Error("unknown scale type: '" + type + "'");
}

nlohmann::json scale_to_json(const TimeScale& scale) {
    switch (scale.kind()) {
        case TimeScale::Kind::Real:
            return {{"type", "real"}};
        case TimeScale::Kind::Uniform:
            return {{"type", "uniform"},
                    {"offset", format_rational(scale.offset())},
                    {"step", format_rational(scale.step())}};
        case TimeScale::Kind::Finite: {
            nlohmann::json points = nlohmann::json::array();
            for (const auto& p : scale.points()) {
                points.push_back(format_rational(p));
            }
            return {{"type", "finite"}, {"points", std::move(points)}};
        }
    }
    throw Error("unknown scale kind");
}

CoefficientRule coefficient_rule_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rule")) {
        throw Error("coefficient rule needs a \"rule\" field");
    }
    const std::string rule = j.at("rule").get<std::string>();
    if (rule == "geometric") {
        const Scalar p{rational_field(j.at("p"))};
        const Scalar lead =
            j.contains("lead") ? Scalar(rational_field(j.at("lead"))) : Scalar(1);
        return CoefficientRule::geometric(p, lead);
    }
    if (rule == "explicit") {
        std::vector<Scalar> values;
        for (const auto& v : j.at("values")) {
            values.emplace_back(rational_field(v));
        }
        return CoefficientRule::explicit_list(std::move(values));
    }
    if (rule == "zero") {
        return CoefficientRule::zero();
    }
    throw Error("unknown coefficient rule: '" + rule + "'");
}

SeriesSpec series_spec_from_json(const nlohmann::json& j, const Config& config) {
    SeriesSpec spec;
    spec.policy = config.policy;
    if (j.contains("alpha")) {
        spec.alpha = rational_field(j.at("alpha"));
    }
    if (!j.contains("scale")) {
        throw Error("series spec needs a \"scale\" field");
    }
    spec.scale = scale_from_json(j.at("scale"));
    if (j.contains("t0")) {
        spec.t0 = rational_field(j.at("t0"));
    }
    if (j.contains("a")) {
        spec.a = coefficient_rule_from_json(j.at("a"));
    }
    if (j.contains("b")) {
        spec.b = coefficient_rule_from_json(j.at("b"));
    }
    if (j.contains("policy")) {
        const auto& p = j.at("policy");
        if (p.contains("max_terms")) {
            spec.policy.max_terms = p.at("max_terms").get<int>();
        }
        if (p.contains("abs_tol")) {
            spec.policy.abs_tol = p.at("abs_tol").get<double>();
        }
        if (p.contains("consecutive_small")) {
            spec.policy.consecutive_small = p.at("consecutive_small").get<int>();
        }
    }
    if (spec.alpha < 0 || spec.alpha > 1) {
        throw Error("series weight must lie in [0, 1]");
    }
    return spec;
}

Config config_from_json(const nlohmann::json& j) {
    Config config;
    for (const auto& [key, value] : j.items()) {
        if (key == "fd_step") {
            config.fd_step = value.get<double>();
        } else if (key == "quad_abs_tol") {
            config.quad_abs_tol = value.get<double>();
        } else if (key == "max_monomial_order") {
            config.max_monomial_order = value.get<int>();
        } else if (key == "policy") {
            if (value.contains("max_terms")) {
                config.policy.max_terms = value.at("max_terms").get<int>();
            }
            if (value.contains("abs_tol")) {
                config.policy.abs_tol = value.at("abs_tol").get<double>();
            }
            if (value.contains("consecutive_small")) {
                config.policy.consecutive_small = value.at("consecutive_small").get<int>();
            }
        } else {
            throw Error("unknown config key: '" + key + "'");
        }
    }
    return config;
}

Config load_config(const std::string& path) {
    Config config;
    if (!path.empty()) {
        config = config_from_json(read_json_file(path));
    }
    if (const char* tol = std::getenv("TSCALC_ABS_TOL")) {
        config.policy.abs_tol = std::strtod(tol, nullptr);
    }
    return config;
}

nlohmann::json convergence_report_to_json(const ConvergenceReport& report) {
    nlohmann::json j{
        {"verdict", to_string(report.verdict)},
        {"monomial_ratio", report.monomial_ratio},
        {"bound_M", format_rational(report.bound_m)},
        {"region_I", report.region_i},
        {"region_J", report.region_j},
    };
    auto branch = [](const BranchReport& b) {
        return nlohmann::json{{"verdict", to_string(b.verdict)},
                              {"coeff_ratio", b.coeff_ratio},
                              {"terms_used", b.terms_used},
                              {"exact", b.exact}};
    };
    if (report.delta_branch.evaluated) {
        j["delta_branch"] = branch(report.delta_branch);
        j["coeff_ratio_a"] = report.delta_branch.coeff_ratio;
    }
    if (report.nabla_branch.evaluated) {
        j["nabla_branch"] = branch(report.nabla_branch);
        j["coeff_ratio_b"] = report.nabla_branch.coeff_ratio;
    }
    return j;
}

nlohmann::json scalar_to_json(const Scalar& value) {
    if (value.exact()) {
        if (value.is_real()) {
            return format_rational(value.re());
        }
        return {{"re", format_rational(value.re())}, {"im", format_rational(value.im())}};
    }
    const auto z = value.to_complex();
    if (z.imag() == 0.0) {
        return z.real();
    }
    return {{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace tscalc
