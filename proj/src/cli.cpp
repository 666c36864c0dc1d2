#include "resonance/cli.hpp"

#include "resonance/ct_resonance.hpp"
#include "resonance/dt_resonance.hpp"
#include "resonance/figures.hpp"
#include "resonance/report_json.hpp"
#include "resonance/response_oracle.hpp"
#include "resonance/s2z_maps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <regex>

namespace resonance::cli {

namespace {

struct Options {
    double sigma = 0.0;
    double omega = 0.0;
    double a = 0.0;
    double omega0 = 0.0;
    double classify_eps = Tolerances{}.classify_eps;
    std::size_t oracle_samples = 0;
    std::size_t plot_samples = 0;
    std::size_t map_samples = 0;
    bool include_samples = false;
    std::string format = "csv";
    std::string output;
    std::string figure;
    std::string method;
    std::string grid = "200x200";
    std::optional<double> t_max;
};

const std::vector<std::string> kMethodNames{"impulse", "backward", "bilinear"};

void add_ct_pole(CLI::App* cmd, Options& o) {
    cmd->add_option("--sigma", o.sigma, "decay rate sigma0 [rad/s]")->required();
    cmd->add_option("--omega", o.omega, "damped frequency omega0 [rad/s]")->required();
}

void add_dt_pole(CLI::App* cmd, Options& o) {
    cmd->add_option("--a", o.a, "pole magnitude A in (0, 1)")->required();
    cmd->add_option("--omega0", o.omega0, "pole angle Omega0 in (0, pi) [rad]")->required();
}

void add_output(CLI::App* cmd, Options& o) {
    cmd->add_option("-o,--output", o.output, "write to this file instead of stdout");
}

void deliver(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
    } else {
        write_text_file(o.output, text);
    }
}

void deliver_json(const Options& o, std::ostream& out, const json::Json& doc) {
    deliver(o, out, json::dump_canonical(doc) + "\n");
}

Tolerances tolerances(const Options& o) {
    Tolerances tol;
    tol.classify_eps = o.classify_eps;
    return tol;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& spec) {
    static const std::regex pattern(R"((\d+)[xX](\d+))");
    std::smatch m;
    if (!std::regex_match(spec, m, pattern)) {
        throw CLI::ValidationError("--grid", "expected RxA, e.g. 200x200");
    }
    return {std::stoul(m[1].str()), std::stoul(m[2].str())};
}

std::string curve_csv(const MappedCurve& c) {
    std::string text = "param_sigmaT,re,im,radius,angle_rad\n";
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        const auto& z = c.points[k];
        text += json::format_double(c.params[k]) + "," + json::format_double(z.real()) + "," +
                json::format_double(z.imag()) + "," + json::format_double(std::abs(z)) + "," +
                json::format_double(std::arg(z)) + "\n";
    }
    return text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pole-zero resonance analysis toolkit", "resonance"};
    app.require_subcommand(1);
    Options o;

    auto* analyze = app.add_subcommand("analyze", "classify one conjugate pole pair");
    analyze->require_subcommand(1);
    auto* analyze_ct_cmd = analyze->add_subcommand("ct", "continuous-time pole -sigma + j*omega");
    auto* analyze_dt_cmd = analyze->add_subcommand("dt", "discrete-time pole a*exp(j*omega0)");
    for (auto* cmd : {analyze_ct_cmd, analyze_dt_cmd}) {
        cmd->add_option("--classify-eps", o.classify_eps, "marginal tolerance");
        add_output(cmd, o);
    }
    add_ct_pole(analyze_ct_cmd, o);
    add_dt_pole(analyze_dt_cmd, o);

    auto* oracle = app.add_subcommand("oracle", "brute-force frequency-response verifier");
    oracle->require_subcommand(1);
    auto* oracle_ct_cmd = oracle->add_subcommand("ct", "sample |H| on [0, 4 omega_n]");
    auto* oracle_dt_cmd = oracle->add_subcommand("dt", "sample 1/D on [0, pi]");
    for (auto* cmd : {oracle_ct_cmd, oracle_dt_cmd}) {
        cmd->add_option("--samples", o.oracle_samples, "grid size")->default_val(Tolerances{}.oracle_grid);
        cmd->add_flag("--include-samples", o.include_samples, "emit the full sampled response");
        add_output(cmd, o);
    }
    add_ct_pole(oracle_ct_cmd, o);
    add_dt_pole(oracle_dt_cmd, o);

    auto* plot = app.add_subcommand("plot", "emit region and boundary figures");
    plot->add_option("figure", o.figure, "s-region | z-region | mapping-comparison")
        ->required()
        ->check(CLI::IsMember({"s-region", "z-region", "mapping-comparison"}));
    plot->add_option("--format", o.format, "csv | svg | json")->check(CLI::IsMember({"csv", "svg", "json"}));
    plot->add_option("--samples", o.plot_samples, "points per curve")->default_val(721);
    add_output(plot, o);

    auto* map_cmd = app.add_subcommand("map-boundary", "image of the s-plane cone ray under one mapping");
    map_cmd->add_option("--method", o.method, "impulse | backward | bilinear")
        ->required()
        ->check(CLI::IsMember(kMethodNames));
    map_cmd->add_option("--samples", o.map_samples, "points on the curve")->default_val(721);
    map_cmd->add_option("--t-max", o.t_max, "largest sigma*T on the ray");
    map_cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    add_output(map_cmd, o);

    auto* compare = app.add_subcommand("compare-regions", "mapped vs exact z-plane region on a grid");
    compare->add_option("--method", o.method, "impulse | backward | bilinear")
        ->required()
        ->check(CLI::IsMember(kMethodNames));
    compare->add_option("--grid", o.grid, "radial x angular grid size")->default_val("200x200");
    compare->add_option("--classify-eps", o.classify_eps, "marginal tolerance");
    add_output(compare, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (analyze_ct_cmd->parsed()) {
            const CtPolePair p = validate_ct(o.sigma, o.omega);
            deliver_json(o, out, json::analyze_report(p, analyze_ct(p, tolerances(o))));
        } else if (analyze_dt_cmd->parsed()) {
            const DtPolePair p = validate_dt(o.a, o.omega0);
            deliver_json(o, out, json::analyze_report(p, analyze_dt(p, tolerances(o))));
        } else if (oracle_ct_cmd->parsed()) {
            const CtPolePair p = validate_ct(o.sigma, o.omega);
            const json::Json input = {{"sigma", p.sigma0()}, {"omega", p.omega0()}};
            deliver_json(o, out, json::oracle_report(input, "ct", oracle_ct(p, o.oracle_samples), o.include_samples));
        } else if (oracle_dt_cmd->parsed()) {
            const DtPolePair p = validate_dt(o.a, o.omega0);
            const json::Json input = {{"a", p.a()}, {"omega0", p.omega_big0()}};
            deliver_json(o, out, json::oracle_report(input, "dt", oracle_dt(p, o.oracle_samples), o.include_samples));
        } else if (plot->parsed()) {
            const Figure figure = *parse_figure(o.figure);
            const PlotFormat format = *parse_plot_format(o.format);
            if (o.output.empty()) {
                out << render_figure(figure, format, o.plot_samples);
            } else {
                emit_figure({figure, format, o.output, o.plot_samples});
            }
        } else if (map_cmd->parsed()) {
            const MappingMethod method = *parse_mapping_method(o.method);
            const MappedCurve curve = boundary_curve(method, o.map_samples, o.t_max.value_or(default_t_max(method)));
            if (o.format == "json") {
                deliver_json(o, out, json::mapped_curve(curve));
            } else {
                deliver(o, out, curve_csv(curve));
            }
        } else if (compare->parsed()) {
            const MappingMethod method = *parse_mapping_method(o.method);
            const auto [radial, angular] = parse_grid(o.grid);
            deliver_json(o, out, json::region_comparison(compare_regions(method, radial, angular, tolerances(o))));
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::IoError ? kExitInternal : kExitUsage;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace resonance::cli
