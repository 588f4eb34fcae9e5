#include "gls/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "gls/conditions.hpp"
#include "gls/geometry.hpp"
#include "gls/io.hpp"
#include "gls/model.hpp"
#include "gls/sweep.hpp"
#include "gls/verify.hpp"
#include "gls/version.hpp"

namespace gls {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelOptions {
    double gamma1 = 1.0;
    double eta = 1.0;
    double phi1 = 0.0;
    double dphi = 0.0;
    double gamma_loss = 0.0;
    bool sagnac = false;
};

struct AxisOptions {
    double delta_min = -8.0, delta_max = 8.0;
    std::size_t delta_count = 321;
    double scan_min = 0.0, scan_max = 4.0 * std::numbers::pi;
    std::size_t scan_count = 321;
    std::vector<CLI::Option*> delta_opts, scan_opts;
};

struct OutputOptions {
    std::string csv_path;
    std::string svg_path;
    std::string trajectory_path;
    std::string quantity;
};

void add_model_options(CLI::App* app, ModelOptions& m)
{
    app->add_option("--gamma1", m.gamma1, "Decay rate per point of |e>-|g> (sets the unit)")->capture_default_str();
    app->add_option("--eta", m.eta, "Gamma2 / Gamma1")->capture_default_str();
    app->add_option("--phi1", m.phi1, "Phase k d (rad)")->capture_default_str();
    app->add_option("--dphi", m.dphi, "phi1 - phi2 (rad)")->capture_default_str();
    app->add_option("--gamma-loss", m.gamma_loss, "Intrinsic dissipation of |e>")->capture_default_str();
    app->add_flag("--sagnac", m.sagnac, "Also evaluate the Sagnac-coupled model");
}

void add_axis_options(CLI::App* app, AxisOptions& a)
{
    a.delta_opts = {app->add_option("--delta-min", a.delta_min, "Detuning axis start"),
                    app->add_option("--delta-max", a.delta_max, "Detuning axis end"),
                    app->add_option("--delta-count", a.delta_count, "Detuning axis points")};
    a.scan_opts = {app->add_option("--scan-min", a.scan_min, "Scan (dphi or eta) axis start"),
                   app->add_option("--scan-max", a.scan_max, "Scan axis end"),
                   app->add_option("--scan-count", a.scan_count, "Scan axis points")};
}

void add_output_options(CLI::App* app, OutputOptions& o)
{
    app->add_option("-o,--output", o.csv_path, "CSV output file (default stdout)");
    app->add_option("--svg", o.svg_path, "Also write an SVG heatmap of --quantity");
    app->add_option("--trajectory", o.trajectory_path, "Also write the per-column extremum of --quantity as CSV");
    app->add_option("--quantity", o.quantity, "T1, R1, Tc, loss, T1_tilde, Tc_tilde, loss_tilde");
}

bool given(const std::vector<CLI::Option*>& opts, std::size_t i)
{
    return opts[i]->count() > 0;
}

void apply_axis_overrides(const AxisOptions& a, SweepSpec& spec)
{
    if (given(a.delta_opts, 0)) spec.delta_axis.min = a.delta_min;
    if (given(a.delta_opts, 1)) spec.delta_axis.max = a.delta_max;
    if (given(a.delta_opts, 2)) spec.delta_axis.count = a.delta_count;
    if (given(a.scan_opts, 0)) spec.scan_axis.min = a.scan_min;
    if (given(a.scan_opts, 1)) spec.scan_axis.max = a.scan_max;
    if (given(a.scan_opts, 2)) spec.scan_axis.count = a.scan_count;
}

json complex_json(cdouble z)
{
    json j;
    j["re"] = json_number(z.real());
    j["im"] = json_number(z.imag());
    return j;
}

ModelParams model_params(const ModelOptions& m)
{
    ModelParams p = ModelParams::from_ratio(m.gamma1, m.eta, m.phi1, m.dphi, m.gamma_loss);
    p.validate();
    return p;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path);
}

Quantity resolve_quantity(const std::string& name, const SweepSpec& spec, Quantity fallback)
{
    if (name.empty()) return fallback;
    const auto q = parse_quantity(name);
    if (!q) throw UsageError("unknown quantity: " + name);
    if (is_sagnac_quantity(*q) && !spec.sagnac) throw UsageError(name + " needs --sagnac");
    return *q;
}

std::string trajectory_csv(const SweepSpec& spec, Quantity q)
{
    const auto target = target_for_quantity(q);
    if (!target) throw UsageError("no extremum target for " + std::string(quantity_name(q)));
    const auto points = extremum_trajectory(spec, *target);
    std::string s = "# ";
    s += kProgramName;
    s += " v";
    s += kVersion;
    s += '\n';
    s += spec.mode == SweepMode::DeltaDphi ? "dphi" : "eta";
    s += ",flat,delta,";
    s += quantity_name(q);
    s += '\n';
    for (const auto& p : points) {
        s += format_number(p.scan_value);
        s += p.flat ? ",1," : ",0,";
        if (!p.flat) {
            s += format_number(p.delta);
            s += ',';
            s += format_number(p.value);
        } else {
            s += ',';
        }
        s += '\n';
    }
    return s;
}

int emit_sweep(const SweepSpec& spec, const OutputOptions& o, Quantity default_q, const std::string& title,
               std::ostream& out)
{
    spec.validate();
    const Quantity q = resolve_quantity(o.quantity, spec, default_q);
    const SweepResult result = run_sweep(spec, worker_threads_from_env());

    std::ostringstream csv;
    write_sweep_csv(result, csv);
    write_text(o.csv_path, csv.str(), out);

    if (!o.svg_path.empty()) {
        HeatmapSpec h;
        h.title = title + " " + std::string(quantity_name(q));
        h.x_label = spec.mode == SweepMode::DeltaDphi ? "dphi (rad)" : "eta";
        h.y_label = "delta / gamma1";
        h.x_min = spec.scan_axis.min;
        h.x_max = spec.scan_axis.max;
        h.y_min = spec.delta_axis.min;
        h.y_max = spec.delta_axis.max;
        std::ostringstream svg;
        write_svg_heatmap(result.values(q), result.rows(), result.cols(), h, svg);
        write_text(o.svg_path, svg.str(), out);
    }
    if (!o.trajectory_path.empty()) write_text(o.trajectory_path, trajectory_csv(spec, q), out);
    return kExitOk;
}

int cmd_amplitudes(const ModelOptions& m, double delta, std::ostream& out)
{
    const ModelParams p = model_params(m);
    const auto a = giant_lambda_amplitudes(p, delta);
    const auto eff = effective_params(p);

    json j;
    j["delta"] = json_number(delta);
    j["gamma1"] = json_number(p.gamma1);
    j["gamma2"] = json_number(p.gamma2);
    j["eta"] = json_number(m.eta);
    j["phi1"] = json_number(p.phi1);
    j["phi2"] = json_number(p.phi2);
    j["dphi"] = json_number(m.dphi);
    j["gamma_loss"] = json_number(p.gamma_loss);
    j["amplitudes"] = {{"t1", complex_json(a.t1)},
                       {"r1", complex_json(a.r1)},
                       {"t2", complex_json(a.t2)},
                       {"r2", complex_json(a.r2)}};
    j["T1"] = json_number(a.T1);
    j["R1"] = json_number(a.R1);
    j["Tc"] = json_number(a.Tc);
    j["loss"] = json_number(a.loss);
    j["effective"] = {{"delta_shift", json_number(eff.delta_shift)},
                      {"gamma1_eff", json_number(eff.gamma1_eff)},
                      {"gamma2_eff", json_number(eff.gamma2_eff)},
                      {"gamma_eff", json_number(eff.gamma_eff)},
                      {"eta_eff", eff.eta_eff ? json_number(*eff.eta_eff) : json(nullptr)}};
    if (m.sagnac) {
        const auto s = sagnac_amplitudes(p, delta);
        j["sagnac"] = {{"t1_tilde", complex_json(s.t1_tilde)},
                       {"t2_tilde", complex_json(s.t2_tilde)},
                       {"T1_tilde", json_number(s.T1_tilde)},
                       {"Tc_tilde", json_number(s.Tc_tilde)},
                       {"loss", json_number(s.loss)}};
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_conditions(const ModelOptions& m, double tol, std::ostream& out)
{
    const ConditionReport r = analyze(m.phi1, m.dphi, m.gamma1, m.eta, tol);
    json j;
    j["phi1"] = json_number(m.phi1);
    j["dphi"] = json_number(m.dphi);
    j["phi2"] = json_number(m.phi1 - m.dphi);
    j["gamma1"] = json_number(m.gamma1);
    j["eta"] = json_number(m.eta);
    j["tolerance_used"] = json_number(r.tolerance_used);
    j["fipt"] = r.fipt;
    j["fipt_multiple"] = r.fipt ? json(r.fipt_multiple) : json(nullptr);
    j["total_reflection"] =
        r.total_reflection ? json{{"delta_star", json_number(r.total_reflection->delta_star)}} : json(nullptr);
    j["conversion_possible"] = r.optimal_conversion.has_value();
    j["optimal_conversion"] = r.optimal_conversion
                                  ? json{{"eta_star", json_number(r.optimal_conversion->eta_star)},
                                         {"delta_star", json_number(r.optimal_conversion->delta_star)}}
                                  : json(nullptr);
    out << j.dump(2) << '\n';
    return kExitOk;
}

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

int cmd_verify(std::size_t draws, std::uint64_t seed, bool lattice, std::ostream& out)
{
    if (draws == 0) throw UsageError("--draws must be >= 1");
    int failures = 0, checks = 0;
    auto line = [&](bool pass, const std::string& text) {
        ++checks;
        if (!pass) ++failures;
        out << (pass ? "PASS " : "FAIL ") << text << '\n';
    };

    const OracleReport r = run_oracle_suite(draws, seed);
    const std::string over = " over " + std::to_string(r.draws) + " draws (seed " + std::to_string(seed) + ", " +
                             std::to_string(r.singular) + " singular)";
    line(r.singular < r.draws && r.max_rel_dev <= 1e-10,
         "closed form vs linear solve: max relative deviation " + sci(r.max_rel_dev) + " (tol 1e-10)" + over);
    line(r.singular < r.draws && r.max_rel_dev_sagnac <= 1e-10,
         "sagnac closed form vs linear solve: max relative deviation " + sci(r.max_rel_dev_sagnac) + " (tol 1e-10)");
    line(r.max_unitarity <= 1e-12, "unitarity |T1+R1+Tc-1|: max " + sci(r.max_unitarity) + " (tol 1e-12)");
    line(r.max_unitarity_sagnac <= 1e-12,
         "sagnac unitarity |T1~+Tc~-1|: max " + sci(r.max_unitarity_sagnac) + " (tol 1e-12)");
    line(r.max_t2_r2 <= 1e-14, "||t2|-|r2||: max " + sci(r.max_t2_r2) + " (tol 1e-14)");
    line(r.max_Tc <= 0.5 + 1e-12, "conversion bound: max Tc " + format_number(r.max_Tc, 15) + " (<= 0.5 + 1e-12)");

    if (lattice) {
        const auto rows = run_lattice_suite();
        for (const auto& row : rows) {
            const auto& c = row.comparison;
            out << "  lattice " << row.name << " sigma=" << format_number(row.sigma) << " n_sites=" << row.n_sites
                << " T1=" << format_number(c.lattice.T1_est, 6) << "/" << format_number(c.analytic.T1, 6)
                << " R1=" << format_number(c.lattice.R1_est, 6) << "/" << format_number(c.analytic.R1, 6)
                << " Tc=" << format_number(c.lattice.Tc_est, 6) << "/" << format_number(c.analytic.Tc, 6)
                << " residual=" << sci(c.lattice.residual_atom_population) << " dev=" << sci(c.max_abs_dev)
                << " drift=" << sci(c.max_norm_drift) << '\n';
        }
        for (const auto& v : judge_lattice_suite(rows)) {
            line(v.pass, "lattice " + v.name + ": dev(sigma=40) " + sci(v.dev_at_40) + " (tol 0.03), " +
                             (v.monotone ? "monotone" : "not monotone") + " over sigma 20/40/80, norm drift " +
                             sci(v.max_norm_drift) + " (tol 1e-8)");
        }
    }
    out << (failures == 0 ? "PASS" : "FAIL") << " (" << (checks - failures) << "/" << checks << " checks)\n";
    return failures == 0 ? kExitOk : kExitFailure;
}

struct GeometryOptions {
    double d = 0, v_g = 0, omega_e = 0, omega_f = 0, gamma_sum = 0;
    std::string preset;
    CLI::Option *d_opt = nullptr, *v_opt = nullptr, *e_opt = nullptr, *f_opt = nullptr, *g_opt = nullptr;
};

int cmd_geometry(const GeometryOptions& o, std::ostream& out)
{
    GeometryParams g;
    if (!o.preset.empty()) {
        if (o.preset != "gaas") throw UsageError("unknown preset: " + o.preset);
        g = gaas_preset();
    }
    if (o.d_opt->count()) g.d = o.d;
    if (o.v_opt->count()) g.v_g = o.v_g;
    if (o.e_opt->count()) g.omega_e = o.omega_e;
    if (o.f_opt->count()) g.omega_f = o.omega_f;
    std::optional<double> decay;
    if (o.g_opt->count()) decay = o.gamma_sum;

    const GeometryPhases p = phases_from_geometry(g, decay);
    json j;
    j["d"] = json_number(g.d);
    j["v_g"] = json_number(g.v_g);
    j["omega_e"] = json_number(g.omega_e);
    j["omega_f"] = json_number(g.omega_f);
    j["phi1"] = json_number(p.phi1);
    j["phi1_over_2pi"] = json_number(p.phi1 / (2.0 * std::numbers::pi));
    j["dphi"] = json_number(p.dphi);
    j["dphi_over_pi"] = json_number(p.dphi / std::numbers::pi);
    j["delay"] = json_number(p.delay);
    j["markov_parameter"] = decay ? json_number(p.delay * *decay) : json(nullptr);
    j["markov_warning"] = p.markov_warning;
    out << j.dump(2) << '\n';
    return kExitOk;
}

bool is_given(const std::vector<std::string>& args, const std::string& flag)
{
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

std::optional<std::string> config_path(const std::vector<std::string>& args)
{
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file");
            return args[i + 1];
        }
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

std::optional<bool> parse_bool(std::string v)
{
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    return std::nullopt;
}

// Appends config-file values as --key=value unless the command line already
// sets the key.  Keys unknown to every subcommand are usage errors; keys of
// other subcommands are ignored.
void inject_config(CLI::App& app, std::vector<std::string>& args)
{
    const auto path = config_path(args);
    if (!path) return;
    const auto values = read_config_file(*path);

    CLI::App* sub = nullptr;
    for (const auto& a : args) {
        if (!a.empty() && a[0] != '-') {
            sub = app.get_subcommand_no_throw(a);
            if (sub) break;
        }
    }
    if (!sub) return;

    const std::vector<std::string> original = args;
    for (const auto& [key, value] : values) {
        if (key == "config") throw UsageError("config file cannot set config");
        const std::string flag = "--" + key;
        if (is_given(original, flag)) continue;
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        if (!opt) {
            bool known = false;
            for (const CLI::App* other : app.get_subcommands({})) known = known || other->get_option_no_throw(flag);
            if (!known) throw UsageError("unknown config key: " + key);
            continue;
        }
        if (opt->get_expected_max() == 0) {
            const auto b = parse_bool(value);
            if (!b) throw UsageError("config key " + key + " expects true or false");
            if (*b) args.push_back(flag);
        } else {
            args.push_back(flag + "=" + value);
        }
    }
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int number = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string{};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(f, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(number) + ": expected key=value");
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw std::runtime_error(path + ":" + std::to_string(number) + ": empty key");
        out[key] = trim(t.substr(eq + 1));
    }
    return out;
}

unsigned worker_threads_from_env()
{
    const char* env = std::getenv("GLS_THREADS");
    if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
    const std::string s(env);
    unsigned v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v == 0) {
        throw std::invalid_argument("GLS_THREADS must be a positive integer, got '" + s + "'");
    }
    return v;
}

int run_cli(const std::vector<std::string>& input_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Single-photon scattering off a giant Lambda-type atom coupled to a waveguide at two points",
                 std::string(kProgramName)};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    std::string config_file;

    ModelOptions amp_model;
    double amp_delta = 0.0;
    auto* amp = app.add_subcommand("amplitudes", "Point evaluation (JSON)");
    add_model_options(amp, amp_model);
    amp->add_option("--delta", amp_delta, "Detuning")->capture_default_str();

    ModelOptions sweep_model;
    AxisOptions sweep_axes;
    OutputOptions sweep_out;
    std::string sweep_mode = "delta-dphi";
    auto* sweep = app.add_subcommand("sweep", "Grid over delta and dphi or eta (CSV)");
    add_model_options(sweep, sweep_model);
    add_axis_options(sweep, sweep_axes);
    add_output_options(sweep, sweep_out);
    sweep->add_option("--mode", sweep_mode, "delta-dphi or delta-eta")->capture_default_str();

    ModelOptions cond_model;
    double cond_tol = kDefaultManifoldTol;
    auto* cond = app.add_subcommand("conditions", "Analytic condition report (JSON)");
    cond->add_option("--gamma1", cond_model.gamma1, "Decay rate per point of |e>-|g>")->capture_default_str();
    cond->add_option("--eta", cond_model.eta, "Gamma2 / Gamma1")->capture_default_str();
    cond->add_option("--phi1", cond_model.phi1, "Phase k d (rad)")->capture_default_str();
    cond->add_option("--dphi", cond_model.dphi, "phi1 - phi2 (rad)")->capture_default_str();
    cond->add_option("--tol", cond_tol, "Distance to an odd multiple of pi counted as on it (rad)")
        ->capture_default_str();

    std::string figure_id;
    bool figure_list = false;
    AxisOptions figure_axes;
    OutputOptions figure_out;
    auto* fig = app.add_subcommand("figure", "Published panel layouts (CSV, optional SVG)");
    fig->add_option("id", figure_id, "Panel id, e.g. fig2a");
    fig->add_flag("--list", figure_list, "Print the panel ids");
    add_axis_options(fig, figure_axes);
    add_output_options(fig, figure_out);

    std::size_t draws = 10000;
    std::uint64_t seed = 1;
    bool with_lattice = false;
    auto* ver = app.add_subcommand("verify", "Closed forms vs linear solve, optionally vs lattice runs");
    ver->add_option("--draws", draws, "Random configurations")->capture_default_str();
    ver->add_option("--seed", seed, "Seed for the random draws")->capture_default_str();
    ver->add_flag("--lattice", with_lattice, "Add the time-domain lattice comparison");

    GeometryOptions geo;
    auto* geom = app.add_subcommand("geometry", "Phases from a physical layout (JSON)");
    geo.d_opt = geom->add_option("--d", geo.d, "Coupling point separation (m)");
    geo.v_opt = geom->add_option("--v-g", geo.v_g, "Group velocity (m/s)");
    geo.e_opt = geom->add_option("--omega-e", geo.omega_e, "Transition angular frequency (rad/s)");
    geo.f_opt = geom->add_option("--omega-f", geo.omega_f, "Lower-level splitting (rad/s)");
    geo.g_opt = geom->add_option("--gamma-sum", geo.gamma_sum, "Gamma1 + Gamma2 (rad/s) for the Markov check");
    geom->add_option("--preset", geo.preset, "gaas");

    for (auto* sub : {amp, sweep, cond, fig, ver, geom}) {
        sub->add_option("--config", config_file, "key=value file; flags override it");
    }

    std::vector<std::string> args = input_args;
    try {
        inject_config(app, args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        for (const auto* sub : app.get_subcommands()) {
            err << sub->help();
            return kExitUsage;
        }
        err << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*amp) return cmd_amplitudes(amp_model, amp_delta, out);
        if (*cond) return cmd_conditions(cond_model, cond_tol, out);
        if (*ver) return cmd_verify(draws, seed, with_lattice, out);
        if (*geom) return cmd_geometry(geo, out);
        if (*sweep) {
            SweepSpec spec;
            const auto mode = parse_sweep_mode(sweep_mode);
            if (!mode) throw UsageError("unknown mode: " + sweep_mode);
            spec.mode = *mode;
            spec.phi1 = sweep_model.phi1;
            spec.eta = sweep_model.eta;
            spec.dphi = sweep_model.dphi;
            spec.gamma1 = sweep_model.gamma1;
            spec.gamma_loss = sweep_model.gamma_loss;
            spec.sagnac = sweep_model.sagnac;
            if (spec.mode == SweepMode::DeltaEta) spec.scan_axis = Axis{0.0, 4.0, 321};
            apply_axis_overrides(sweep_axes, spec);
            return emit_sweep(spec, sweep_out, spec.sagnac ? Quantity::TcTilde : Quantity::Tc, "sweep", out);
        }
        if (*fig) {
            if (figure_list) {
                for (const auto& id : figure_ids()) out << id << '\n';
                return kExitOk;
            }
            if (figure_id.empty()) throw UsageError("figure needs an id (see figure --list)");
            FigurePreset preset = figure_preset(figure_id);
            apply_axis_overrides(figure_axes, preset.spec);
            return emit_sweep(preset.spec, figure_out, preset.quantity, preset.id, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SingularPointError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace gls
