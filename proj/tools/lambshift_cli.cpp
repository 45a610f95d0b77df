// lambshift — command-line front end: single points, sweeps, figure data,
// validity checks and transmon circuit conversion.
//
// Exit codes: 0 success, 2 configuration error, 3 numeric failure, 4 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lambshift/lambshift.hpp"

namespace {

using namespace lambshift;

constexpr int exit_config = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

struct PointOptions {
    double omega_a{1.0};
    double omega_r{1.25};
    double lambda{0.01};
    double g{0.02};
    bool normalized{true};

    SystemParams params() const {
        if (!normalized) return {omega_a, omega_r, lambda, g};
        return {omega_a, omega_r * omega_a, lambda * omega_a, g * omega_a};
    }
};

struct FockOptions {
    std::size_t n_atom{FockConfig::default_levels};
    std::size_t n_res{FockConfig::default_levels};
    FockConfig cfg() const { return {n_atom, n_res}; }
};

struct OutputOptions {
    std::string out;
    std::string format{"csv"};

    OutputFormat parsed() const { return format == "json" ? OutputFormat::json : OutputFormat::csv; }

    void emit(const Table& t) const {
        if (out.empty()) {
            write_table(t, parsed(), std::cout);
        } else {
            save_table(t, parsed(), out);
        }
    }
};

void add_point_options(CLI::App* app, PointOptions& o) {
    app->add_option("--omega-a", o.omega_a, "Atom frequency")->capture_default_str();
    app->add_option("--omega-r", o.omega_r, "Resonator frequency")->capture_default_str();
    app->add_option("--lambda", o.lambda, "Anharmonicity")->capture_default_str();
    app->add_option("--g", o.g, "Coupling strength")->capture_default_str();
    app->add_flag("--normalized,!--absolute", o.normalized,
                  "Interpret omega-r, lambda and g in units of omega-a (default)");
}

void add_fock_options(CLI::App* app, FockOptions& o) {
    app->add_option("--n-atom", o.n_atom, "Atom Fock levels")->capture_default_str();
    app->add_option("--n-res", o.n_res, "Resonator Fock levels")->capture_default_str();
}

void add_output_options(CLI::App* app, OutputOptions& o) {
    app->add_option("--out", o.out, "Output file (default: stdout)");
    app->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

std::vector<Route> parse_routes(const std::vector<std::string>& names) {
    std::vector<Route> out;
    for (const auto& n : names) {
        if (n == "all") {
            out.assign(all_routes.begin(), all_routes.end());
            continue;
        }
        auto r = route_from_string(n);
        if (!r) throw ConfigError("unknown route '" + n + "'");
        out.push_back(*r);
    }
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

int run_shifts(const PointOptions& po, const FockOptions& fo, const std::vector<std::string>& routes,
               std::optional<double> tol, const OutputOptions& oo, bool table_requested) {
    const SystemParams p = po.params();
    Table t;
    t.kind = "shifts";
    t.columns = {"omega_a_bar", "omega_r_bar", "delta_nm", "chi_a", "chi_r", "chi_ar",
                 "delta_omega_a", "vacuum_fraction"};
    std::vector<std::string> names;
    std::vector<std::string> notes;
    const ValidityReport base = check_point(p);
    for (Route r : parse_routes(routes)) {
        TableRow row;
        row.flags = base;
        try {
            ShiftSet s = (r == Route::numeric && tol) ? converge(p, fo.cfg(), *tol).shifts
                                                      : compute_shifts(p, r, fo.cfg());
            row.values = {s.omega_a_bar, s.omega_r_bar, s.delta_nm, s.chi_a,
                          s.chi_r,       s.chi_ar,      s.delta_omega_a};
            row.values.push_back(s.delta_omega_a != 0.0 ? std::optional(vacuum_fraction(s))
                                                         : std::nullopt);
            notes.emplace_back(s.flagged ? "outside validity window" : "");
        } catch (const ResourceLimit&) {
            throw;
        } catch (const NumericFailure& e) {
            row.values.assign(t.columns.size(), std::nullopt);
            detail::raise_flag_for(e, row.flags);
            notes.emplace_back(e.what());
        }
        names.emplace_back(to_string(r));
        t.rows.push_back(std::move(row));
    }

    if (!table_requested) {
        // Route name goes into the first column for machine-readable output.
        Table out;
        out.kind = "shifts";
        out.columns = {"route_index"};
        out.columns.insert(out.columns.end(), t.columns.begin(), t.columns.end());
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            TableRow row = t.rows[i];
            row.values.insert(row.values.begin(), static_cast<double>(i));
            out.rows.push_back(std::move(row));
        }
        oo.emit(out);
        return 0;
    }

    std::cout << "# " << p.describe() << "\n";
    std::cout << std::left << std::setw(13) << "route";
    for (const auto& c : t.columns) std::cout << std::setw(20) << c;
    std::cout << "flags\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::cout << std::setw(13) << names[i];
        for (const auto& v : t.rows[i].values) std::cout << std::setw(20) << format_cell(v);
        std::cout << t.rows[i].flags.joined();
        if (!notes[i].empty()) std::cout << "  (" << notes[i] << ")";
        std::cout << "\n";
    }
    return 0;
}

void print_report(const SystemParams& p, const ValidityReport& r, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        j["omega_a"] = p.omega_a();
        j["omega_r"] = p.omega_r();
        j["lambda"] = p.lambda();
        j["g"] = p.g();
        j["near_resonance"] = r.near_resonance;
        j["straddling"] = r.straddling;
        j["unstable"] = r.unstable;
        j["label_ambiguous"] = r.label_ambiguous;
        auto num = [](double x) {
            return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
        };
        j["coupling_ratio"] = num(r.coupling_ratio);
        j["straddling_window"] = num(r.straddling_window);
        j["anharmonicity_ratio"] = num(r.anharmonicity_ratio);
        j["stability_ratio"] = num(r.stability_ratio);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "# " << p.describe() << "\n"
              << "near_resonance   " << r.near_resonance << "   g/|Delta| = " << fmt(r.coupling_ratio)
              << " (threshold " << dispersive_ratio_threshold << ")\n"
              << "straddling       " << r.straddling << "   lambda/window = "
              << fmt(r.anharmonicity_ratio) << ", window = " << fmt(r.straddling_window)
              << " (threshold " << straddling_ratio_threshold << ")\n"
              << "unstable         " << r.unstable << "   4g^2/((omega_a+lambda)omega_r) = "
              << fmt(r.stability_ratio) << "\n"
              << "label_ambiguous  " << r.label_ambiguous << "\n";
}

// Pull "--config PATH" / "--config=PATH" out of the raw arguments.
std::optional<std::string> find_config_path(const std::vector<std::string>& tokens) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "--config" && i + 1 < tokens.size()) return tokens[i + 1];
        if (tokens[i].rfind("--config=", 0) == 0) return tokens[i].substr(9);
    }
    return std::nullopt;
}

int run(int argc, char** argv) {
    std::vector<std::string> tokens(argv + 1, argv + argc);

    CLI::App app{"Dispersive-shift decomposition for a weakly anharmonic oscillator coupled to a "
                 "resonator"};
    app.require_subcommand(1);
    std::string config_path;

    // shifts
    PointOptions shifts_point;
    FockOptions shifts_fock;
    OutputOptions shifts_out;
    std::vector<std::string> shifts_routes{"all"};
    std::optional<double> shifts_tol;
    auto* shifts = app.add_subcommand("shifts", "All routes at one parameter point");
    add_point_options(shifts, shifts_point);
    add_fock_options(shifts, shifts_fock);
    add_output_options(shifts, shifts_out);
    shifts->add_option("--routes", shifts_routes, "Routes (numeric,normal_mode,rwa,beyond_rwa,all)")
        ->delimiter(',');
    shifts->add_option("--tol", shifts_tol, "Converge the numeric route to this tolerance");
    shifts->add_option("--config", config_path, "key=value config file");

    // sweep
    PointOptions sweep_point;
    FockOptions sweep_fock;
    OutputOptions sweep_out;
    std::vector<std::string> sweep_routes{"all"};
    std::string swept{"detuning"};
    std::string spacing{"linear"};
    double sweep_start = -0.5;
    double sweep_stop = 0.9;
    std::size_t sweep_count = 181;
    unsigned sweep_threads = 0;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter over a grid");
    add_point_options(sweep, sweep_point);
    add_fock_options(sweep, sweep_fock);
    add_output_options(sweep, sweep_out);
    sweep->add_option("--routes", sweep_routes, "Routes")->delimiter(',');
    sweep->add_option("--swept", swept, "Swept parameter, in units of omega-a")
        ->check(CLI::IsMember({"detuning", "anharmonicity", "coupling"}))
        ->capture_default_str();
    sweep->add_option("--start", sweep_start)->capture_default_str();
    sweep->add_option("--stop", sweep_stop)->capture_default_str();
    sweep->add_option("--count", sweep_count)->capture_default_str();
    sweep->add_option("--spacing", spacing)
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    sweep->add_option("--threads", sweep_threads, "Worker threads (0: all cores)");
    sweep->add_option("--config", config_path, "key=value config file");

    // figure
    std::string figure_name;
    FigureOverrides fig;
    std::optional<double> fig_lambda, fig_g, fig_detuning, fig_start, fig_stop;
    std::optional<std::size_t> fig_count;
    FockOptions fig_fock;
    OutputOptions fig_out;
    auto* figure = app.add_subcommand("figure", "Canonical data for one figure");
    figure->add_option("which", figure_name, "fig2a | fig2b | fig2c | fig3")
        ->required()
        ->check(CLI::IsMember({"fig2a", "fig2b", "fig2c", "fig3"}));
    figure->add_option("--lambda", fig_lambda, "lambda/omega_a (default 0.01)");
    figure->add_option("--g", fig_g, "g/omega_a (default 0.02)");
    figure->add_option("--detuning", fig_detuning, "Fixed Delta/omega_a for fig2c (default 0.25)");
    figure->add_option("--start", fig_start);
    figure->add_option("--stop", fig_stop);
    figure->add_option("--count", fig_count);
    figure->add_option("--threads", fig.threads);
    add_fock_options(figure, fig_fock);
    add_output_options(figure, fig_out);
    figure->add_option("--config", config_path, "key=value config file");

    // check
    PointOptions check_point_opts;
    std::string check_format{"text"};
    auto* check = app.add_subcommand("check", "Validity report for one parameter point");
    add_point_options(check, check_point_opts);
    check->add_option("--format", check_format)
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    check->add_option("--config", config_path, "key=value config file");

    // convert
    double l_j = 0.0;
    double cap = 0.0;
    std::string convert_format{"text"};
    auto* convert = app.add_subcommand("convert", "Transmon L_J, C (SI) to model parameters");
    convert->add_option("--lj", l_j, "Josephson inductance [H]")->required();
    convert->add_option("--c", cap, "Capacitance [F]")->required();
    convert->add_option("--format", convert_format)
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    convert->add_option("--config", config_path, "key=value config file");

    if (auto path = find_config_path(tokens)) {
        const auto extra = config_args(load_config_file(*path), tokens);
        tokens.insert(tokens.end(), extra.begin(), extra.end());
    }
    std::vector<std::string> args{argv[0]};
    args.insert(args.end(), tokens.begin(), tokens.end());
    std::vector<char*> cargs;
    for (auto& a : args) cargs.push_back(a.data());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    if (*shifts) {
        const bool table = shifts->count("--format") == 0 && shifts_out.out.empty();
        return run_shifts(shifts_point, shifts_fock, shifts_routes, shifts_tol, shifts_out, table);
    }
    if (*sweep) {
        SweepSpec spec;
        spec.swept = *swept_from_string(swept);
        spec.range = {sweep_start, sweep_stop, sweep_count,
                      spacing == "log" ? Spacing::log : Spacing::linear};
        spec.fixed = sweep_point.params();
        spec.cfg = sweep_fock.cfg();
        spec.routes = parse_routes(sweep_routes);
        spec.threads = sweep_threads;
        sweep_out.emit(sweep_table(spec, run_sweep(spec)));
        return 0;
    }
    if (*figure) {
        fig.lambda = fig_lambda;
        fig.g = fig_g;
        fig.detuning = fig_detuning;
        fig.start = fig_start;
        fig.stop = fig_stop;
        fig.count = fig_count;
        fig.cfg = fig_fock.cfg();
        fig_out.emit(figure_data(*figure_from_string(figure_name), fig));
        return 0;
    }
    if (*check) {
        const SystemParams p = check_point_opts.params();
        print_report(p, check_point(p), check_format == "json");
        return 0;
    }
    if (*convert) {
        const TransmonParams t = transmon_params(TransmonCircuit(l_j, cap));
        if (convert_format == "json") {
            nlohmann::ordered_json j;
            j["omega_a"] = t.omega_a;
            j["lambda"] = t.lambda;
            j["phi_zpf"] = t.phi_zpf;
            j["lambda_over_omega_a"] = t.lambda / t.omega_a;
            std::cout << j.dump(2) << "\n";
        } else {
            constexpr double two_pi = 6.283185307179586;
            std::cout << "omega_a             " << fmt(t.omega_a) << " rad/s  ("
                      << fmt(t.omega_a / two_pi) << " Hz)\n"
                      << "lambda              " << fmt(t.lambda) << " rad/s  ("
                      << fmt(t.lambda / two_pi) << " Hz)\n"
                      << "phi_zpf             " << fmt(t.phi_zpf) << " Wb\n"
                      << "lambda/omega_a      " << fmt(t.lambda / t.omega_a) << "\n";
        }
        return 0;
    }
    return exit_config;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lambshift::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case lambshift::ErrorKind::config: return exit_config;
            case lambshift::ErrorKind::numeric: return exit_numeric;
            case lambshift::ErrorKind::io: return exit_io;
        }
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric;
    }
}
