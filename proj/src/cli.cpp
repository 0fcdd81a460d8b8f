#include "pendmel/cli.hpp"

#include "pendmel/errors.hpp"
#include "pendmel/serialize.hpp"
#include "pendmel/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <sstream>

namespace pendmel {

namespace {

Perturbation load_input(const std::string& input)
{
    if (std::filesystem::is_regular_file(input))
        return read_perturbation_file(input);
    const auto colon = input.find(':');
    const std::string name = input.substr(0, colon);
    for (const auto& family : preset_families())
        if (family.name == name)
            return preset_from_spec(input);
    throw ArgumentError("'" + input + "' is neither a readable file nor a preset");
}

std::string format_double(double v)
{
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

struct EvalArgs {
    std::string input;
    std::string region = "osc";
    std::vector<double> hs;
    int samples = 0;
    double delta = default_delta;
    double h_max = default_h_max;
    bool csv = false;
    bool json = false;
    bool form = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out)
{
    const Perturbation p = load_input(a.input);
    const Region region = parse_region(a.region);
    const EllipticForm form = build_melnikov(p, region);
    if (a.form) {
        out << dump(to_json(form));
        return exit_ok;
    }
    std::vector<double> hs = a.hs;
    if (a.samples > 0) {
        const auto [lo, hi] = scan_interval(region, {a.delta, a.h_max, default_grid});
        const auto grid = scan_grid(region, lo, hi, std::max(a.samples, 2));
        hs.insert(hs.end(), grid.begin(), grid.end());
    }
    if (hs.empty())
        throw ArgumentError("no energies given; use --h-list or --samples");
    const FormEvaluator eval(form);
    std::vector<double> values;
    for (double h : hs)
        values.push_back(eval(h));
    if (a.json) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < hs.size(); ++i)
            rows.push_back({{"h", hs[i]}, {"value", values[i]}});
        out << dump(Json{{"schema", schema_version},
                         {"kind", "melnikov_values"},
                         {"region", std::string(to_string(region))},
                         {"values", rows}});
        return exit_ok;
    }
    out << "h,value\n";
    for (std::size_t i = 0; i < hs.size(); ++i)
        out << format_double(hs[i]) << ',' << format_double(values[i]) << '\n';
    return exit_ok;
}

struct ZerosArgs {
    std::string input;
    std::string region = "osc";
    double delta = default_delta;
    double h_max = default_h_max;
    int grid = default_grid;
};

int cmd_zeros(const ZerosArgs& a, std::ostream& out, std::ostream& err)
{
    const Perturbation p = load_input(a.input);
    const Region region = parse_region(a.region);
    const ScanOptions options{a.delta, a.h_max, a.grid};
    const ZeroReport report = analyze(p, region, options);
    out << dump(to_json(report));
    if (build_melnikov(p, region).is_zero()) {
        err << "Melnikov function is identically zero on the " << to_string(region) << " region";
        if (report.bound && report.bound->kind == BoundKind::Center)
            err << " (center persists)";
        err << '\n';
        return exit_identically_zero;
    }
    return exit_ok;
}

struct VerifyArgs {
    VerifyOptions options;
    bool csv = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    const VerifyReport report = verify_closed_forms(a.options);
    if (a.csv) {
        out << "region,n,power,max_relative_error,worst_h\n";
        for (const auto& e : report.entries)
            out << to_string(e.region) << ',' << e.n << ',' << e.power << ',' << format_double(e.max_relative_error)
                << ',' << format_double(e.worst_h) << '\n';
    } else {
        Json entries = Json::array();
        for (const auto& e : report.entries)
            entries.push_back({{"region", std::string(to_string(e.region))},
                               {"n", e.n},
                               {"power", e.power},
                               {"max_relative_error", e.max_relative_error},
                               {"worst_h", e.worst_h}});
        out << dump(Json{{"schema", schema_version},
                         {"kind", "verify_report"},
                         {"status", report.pass ? "PASS" : "FAIL"},
                         {"tolerance", a.options.tolerance},
                         {"max_relative_error", report.max_relative_error},
                         {"entries", entries}});
    }
    if (!report.pass) {
        err << "closed forms disagree with quadrature: max relative error " << report.max_relative_error << '\n';
        return exit_verify_breach;
    }
    return exit_ok;
}

int cmd_ect(int r, int cap, std::ostream& out, std::ostream& err)
{
    const Certificate cert = pnova_check(r, cap);
    out << dump(to_json(cert));
    if (cert.status != CertificateStatus::Pass) {
        err << to_string(cert.status) << ": " << cert.message << '\n';
        return exit_ect_failure;
    }
    return exit_ok;
}

struct ConfigArgs {
    std::string preset;
    int param_grid = 41;
    int samples = 0;
    std::uint64_t seed = 1;
    int n = 4;
    int r = 1;
    double delta = default_delta;
    double h_max = default_h_max;
    int grid = default_grid;
    int monotonicity_samples = 400;
};

int cmd_config(const ConfigArgs& a, std::ostream& out)
{
    const PresetFamily& family = preset_family(a.preset);
    std::vector<int> structure;
    for (const auto& name : family.structure)
        structure.push_back(name == "r" ? a.r : a.n);
    const int k = static_cast<int>(family.coefficients.size());
    std::vector<std::vector<Rational>> points;
    if (k == 0)
        points.emplace_back();
    else if (a.samples > 0)
        points = random_points(k, a.samples, a.seed);
    else
        points = grid_points(k, a.param_grid);
    const ScanOptions options{a.delta, a.h_max, a.grid};
    const SweepResult sweep = sweep_configurations(family, structure, points, options);
    Json j = to_json(sweep);
    j["sampling"] = a.samples > 0 ? Json{{"mode", "random"}, {"draws", a.samples}, {"seed", a.seed}}
                                  : Json{{"mode", "grid"}, {"per_axis", k == 0 ? 1 : a.param_grid}};
    if (family.name == "ex1") {
        Json mono = Json::object();
        for (Region region : {Region::Oscillatory, Region::RotaryPlus}) {
            const Monotonicity m = quotient_monotonicity(region, a.monotonicity_samples, options);
            mono[std::string(to_string(region))] = {
                {"decreasing", m.decreasing}, {"max_difference", m.max_difference}, {"samples", m.samples}};
        }
        j["quotient_monotonicity"] = mono;
    }
    out << dump(j);
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Melnikov functions of the perturbed pendulum: closed forms, zeros, bounds and ECT certificates",
                 "pendmel"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate M(h) from its closed form");
    eval_cmd->add_option("input", eval.input, "Perturbation JSON file or preset spec such as morozov:4")->required();
    eval_cmd->add_option("--region", eval.region, "osc, plus or minus")->capture_default_str();
    eval_cmd->add_option("--h-list", eval.hs, "Energies, comma separated")->delimiter(',');
    eval_cmd->add_option("--samples", eval.samples, "Add this many scan-grid energies (plot data)");
    eval_cmd->add_option("--delta", eval.delta, "Distance kept from h = 0 and h = 2")->capture_default_str();
    eval_cmd->add_option("--hmax", eval.h_max, "Upper end of the rotary scan")->capture_default_str();
    auto* eval_csv = eval_cmd->add_flag("--csv", eval.csv, "CSV output (default)");
    eval_cmd->add_flag("--json", eval.json, "JSON output")->excludes(eval_csv);
    eval_cmd->add_flag("--form", eval.form, "Print the exact closed form instead of values");

    ZerosArgs zeros;
    auto* zeros_cmd = app.add_subcommand("zeros", "Count zeros of M on a region and report the bound");
    zeros_cmd->add_option("input", zeros.input, "Perturbation JSON file or preset spec")->required();
    zeros_cmd->add_option("--region", zeros.region, "osc, plus or minus")->capture_default_str();
    zeros_cmd->add_option("--delta", zeros.delta, "Distance kept from h = 0 and h = 2")->capture_default_str();
    zeros_cmd->add_option("--hmax", zeros.h_max, "Upper end of the rotary scan")->capture_default_str();
    zeros_cmd->add_option("--grid", zeros.grid, "Scan grid size (at least 64)")->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against direct quadrature");
    verify_cmd->add_option("--n-max", verify.options.n_max, "Largest cosine power")->capture_default_str();
    verify_cmd->add_option("--r-max", verify.options.r_max, "Largest r in I_{n,2r+1}")->capture_default_str();
    verify_cmd->add_option("--samples", verify.options.samples, "Energies per region")->capture_default_str();
    verify_cmd->add_flag("--csv", verify.csv, "CSV output instead of JSON");
    verify_cmd->add_flag("--inject-sign-flip", verify.options.inject_sign_flip)->group("");

    int ect_r = 2;
    int ect_cap = default_ect_cap;
    auto* ect_cmd = app.add_subcommand("ect", "Certify {int y^(2s+1) dx, s <= r} as an ECT-system");
    ect_cmd->add_option("--r", ect_r, "Largest s")->capture_default_str();
    ect_cmd->add_option("--cap", ect_cap, "Largest r accepted")->capture_default_str();

    ConfigArgs config;
    auto* config_cmd = app.add_subcommand("config", "Sweep a preset and list realized configurations [c-;c0;c+]");
    config_cmd->add_option("preset", config.preset, "ex1, ex2, morozov, josephson, eq5 or sharp_r1")->required();
    config_cmd->add_option("--param-grid", config.param_grid, "Grid points per coefficient axis in [-1, 1]")
        ->capture_default_str();
    config_cmd->add_option("--samples", config.samples, "Random draws instead of a grid");
    config_cmd->add_option("--seed", config.seed, "Seed for random draws")->capture_default_str();
    config_cmd->add_option("--n", config.n, "Structure parameter n")->capture_default_str();
    config_cmd->add_option("--r", config.r, "Structure parameter r")->capture_default_str();
    config_cmd->add_option("--delta", config.delta, "Distance kept from h = 0 and h = 2")->capture_default_str();
    config_cmd->add_option("--hmax", config.h_max, "Upper end of the rotary scan")->capture_default_str();
    config_cmd->add_option("--grid", config.grid, "Scan grid size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    }

    try {
        if (*eval_cmd)
            return cmd_eval(eval, out);
        if (*zeros_cmd)
            return cmd_zeros(zeros, out, err);
        if (*verify_cmd)
            return cmd_verify(verify, out, err);
        if (*ect_cmd)
            return cmd_ect(ect_r, ect_cap, out, err);
        if (*config_cmd)
            return cmd_config(config, out);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const IdenticallyZeroError& e) {
        err << e.what() << '\n';
        return exit_identically_zero;
    } catch (const ZeroWronskianError& e) {
        err << e.what() << '\n';
        return exit_ect_failure;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}

}  // namespace pendmel
