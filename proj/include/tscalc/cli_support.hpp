#pragma once

#include "tscalc/config.hpp"
#include "tscalc/grid_function.hpp"
#include "tscalc/json_io.hpp"
#include "tscalc/monomials.hpp"
#include "tscalc/series.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace tscalc {
namespace cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kDomainError = 2,
    kSingularity = 3,
    kDivergenceWithheld = 4,
};

/// "z" and "r" shorthands for the integers and the real line; otherwise an
/// inline JSON object or @file reference.
TimeScale parse_scale_arg(const std::string& arg);

/// Function-spec mini-grammar:
///   exp:p=<rat>[,t0=<rat>]     delta exponential e_p(., t0)
///   hatexp:p=<rat>[,t0=<rat>]  nabla exponential
///   sin:p= cos:p= sinh:p= cosh:p= and hatsin: ... hatcosh:
///   pow2                       f(t) = 2^t
///   mono:k=<int>[,t0=<rat>][,kind=forward|backward]
///   poly:<rat>,<rat>,...       ordinary polynomial, constant term first
///   table:<path>               two-column CSV "t,value" of rationals
GridFunction parse_function_spec(const std::string& spec, const TimeScale& scale,
                                 const Config& config);

DerivKind parse_deriv_kind(const std::string& kind, const std::string& alpha);
MonomialKind parse_monomial_kind(const std::string& kind);
TaylorDirection parse_direction(const std::string& direction);

nlohmann::json cmd_monomial(const TimeScale& scale, MonomialKind kind, int k, const Point& t,
                            const Point& t0, bool both, const Config& config);

nlohmann::json cmd_deriv(const TimeScale& scale, const std::string& fn_spec,
                         const DerivKind& kind, const Point& t, const Config& config);

nlohmann::json cmd_taylor(const TimeScale& scale, const std::string& fn_spec,
                          TaylorDirection direction, const Rational& alpha, int n,
                          const Point& t0, const Point& t, const Config& config);

nlohmann::json cmd_series(const SeriesSpec& spec, const Point& t, bool force);

/// CSV rows "t,value,verdict,terms_used" over the grid points of
/// [t_min, t_max]; divergent rows leave the value empty unless force.
void cmd_series_sweep(const SeriesSpec& spec, const Point& t_min, const Point& t_max, bool force,
                      std::ostream& out);

/// Decimal rendering used in CSV cells for non-exact values.
std::string csv_value(const Scalar& value);

}  // namespace cli
}  // namespace tscalc
