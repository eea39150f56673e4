// Command-line front end: evaluation, differentiation, Taylor expansion,
// and series diagnostics with JSON-lines (or CSV) output.

#include "tscalc/cli_support.hpp"
#include "tscalc/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace tscalc;

struct Args {
    std::string config_path;
    std::string scale = "z";
    std::string kind = "forward";
    std::string fn;
    std::string deriv_kind = "delta";
    std::string dir = "delta";
    std::string alpha = "1/2";
    std::string t;
    std::string t0;
    std::string spec;
    std::vector<std::string> sweep;
    int k = 0;
    int n = 0;
    bool both = false;
    bool force = false;
    bool csv = false;
};

int dispatch(const CLI::App& app, const Args& args) {
    const Config config = load_config(args.config_path);

    if (app.got_subcommand("monomial")) {
        const TimeScale scale = cli::parse_scale_arg(args.scale);
        std::cout << cli::cmd_monomial(scale, cli::parse_monomial_kind(args.kind), args.k,
                                       parse_rational(args.t), parse_rational(args.t0),
                                       args.both, config)
                  << "\n";
        return cli::kOk;
    }
    if (app.got_subcommand("deriv")) {
        const TimeScale scale = cli::parse_scale_arg(args.scale);
        std::cout << cli::cmd_deriv(scale, args.fn,
                                    cli::parse_deriv_kind(args.deriv_kind, args.alpha),
                                    parse_rational(args.t), config)
                  << "\n";
        return cli::kOk;
    }
    if (app.got_subcommand("taylor")) {
        const TimeScale scale = cli::parse_scale_arg(args.scale);
        std::cout << cli::cmd_taylor(scale, args.fn, cli::parse_direction(args.dir),
                                     parse_rational(args.alpha), args.n,
                                     parse_rational(args.t0), parse_rational(args.t), config)
                  << "\n";
        return cli::kOk;
    }
    if (app.got_subcommand("series")) {
        const nlohmann::json spec_json = !args.spec.empty() && args.spec.front() == '{'
                                             ? parse_json_text(args.spec)
                                             : read_json_file(args.spec);
        const SeriesSpec spec = series_spec_from_json(spec_json, config);
        if (!args.sweep.empty()) {
            cli::cmd_series_sweep(spec, parse_rational(args.sweep.at(0)),
                                  parse_rational(args.sweep.at(1)), args.force, std::cout);
            return cli::kOk;
        }
        if (args.t.empty()) {
            throw Error("series needs -t or --sweep");
        }
        const Point t = parse_rational(args.t);
        if (args.csv) {
            cli::cmd_series_sweep(spec, t, t, args.force, std::cout);
            return cli::kOk;
        }
        std::cout << cli::cmd_series(spec, t, args.force) << "\n";
        return cli::kOk;
    }
    std::cerr << app.help() << "\n";
    return cli::kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculus on time scales: monomials, derivatives, Taylor expansions, series"};
    app.require_subcommand(0, 1);
    Args args;
    app.add_option("--config", args.config_path, "JSON config file");

    auto* mono = app.add_subcommand("monomial", "evaluate a generalized monomial h_k or ĥ_k");
    mono->add_option("--scale", args.scale, "z | r | JSON | @file")->required();
    mono->add_option("--kind", args.kind, "forward | backward");
    mono->add_option("-k", args.k, "order")->required();
    mono->add_option("-t", args.t, "evaluation point")->required();
    mono->add_option("--t0", args.t0, "origin")->required();
    mono->add_flag("--both", args.both, "also print the duality partner");

    auto* deriv = app.add_subcommand("deriv", "differentiate a built-in or tabulated function");
    deriv->add_option("--scale", args.scale, "z | r | JSON | @file")->required();
    deriv
        ->add_option("--fn", args.fn,
                     "function spec (exp:p=1, pow2, mono:k=2, poly:..., table:path)")
        ->required();
    deriv->add_option("--kind", args.deriv_kind, "delta | nabla | diamond");
    deriv->add_option("--alpha", args.alpha, "diamond weight");
    deriv->add_option("-t", args.t, "evaluation point")->required();

    auto* taylor = app.add_subcommand("taylor", "Taylor expansion with exact remainder");
    taylor->add_option("--scale", args.scale, "z | r | JSON | @file")->required();
    taylor->add_option("--fn", args.fn, "function spec")->required();
    taylor->add_option("--dir", args.dir, "delta | nabla | combined");
    taylor->add_option("--alpha", args.alpha, "combined weight");
    taylor->add_option("-n", args.n, "expansion order")->required();
    taylor->add_option("--t0", args.t0, "expansion origin")->required();
    taylor->add_option("-t", args.t, "evaluation point")->required();

    auto* series = app.add_subcommand("series", "evaluate a combined-polynomial series");
    series->add_option("--spec", args.spec, "series spec: JSON file path or inline JSON")
        ->required();
    series->add_option("-t", args.t, "evaluation point");
    series->add_option("--sweep", args.sweep, "t_min t_max grid sweep (CSV output)")
        ->expected(2);
    series->add_flag("--force", args.force,
                     "return truncated values even when judged divergent");
    series->add_flag("--csv", args.csv, "CSV output (implied by --sweep)");

    try {
        app.parse(argc, argv);
        return dispatch(app, args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const tscalc::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kDivergenceWithheld;
    } catch (const tscalc::SingularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kSingularity;
    } catch (const tscalc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kFailure;
    }
}
