// chiralsep: propagate the three-state loop scheme, scan its parameters,
// and locate the critical pulse areas of maximum enantio-contrast.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chiralsep/analysis.hpp"
#include "chiralsep/errors.hpp"

using json = nlohmann::ordered_json;
using namespace chiralsep;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitAnalysisFailed = 4;

std::string fmt9(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", x);
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw std::invalid_argument("cannot write output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

// Shared run parameters; each subcommand registers the subset it uses.
struct Params {
    double tau = 1.0;
    double width = 1.0;
    double area_pi = 1.234;
    double phase = M_PI / 2.0;
    std::string chirality = "L";
    double q_scale = 1.0;
    int steps = 4000;
    double tmax = 0.0;           // 0 = auto window
    int points = 300;
    double amin_pi = 0.1;
    double amax_pi = 3.0;
    std::vector<double> tau_list;
    std::vector<double> bracket{0.3, 2.5};
    double tol = 1e-4;
    bool record = false;
    std::string out;
    std::string config_file;   // consumed before parsing; kept for --help

    PulseConfig pulse_config() const {
        PulseConfig cfg;
        cfg.omega0 = amplitude_for_area(area_pi * M_PI, width);
        cfg.tau = tau;
        cfg.width = width;
        cfg.phi = phase;
        cfg.chirality = chirality_from_string(chirality);
        cfg.q_scale = q_scale;
        cfg.validate_and_normalize();
        return cfg;
    }

    TimeGrid grid(const PulseConfig& cfg) const {
        TimeGrid g = tmax > 0.0 ? TimeGrid{-tmax, tmax, steps}
                                : TimeGrid::default_for(cfg, steps);
        g.validate();
        return g;
    }
};

void add_pulse_flags(CLI::App* sub, Params& p, bool with_phase_chirality) {
    sub->add_option("--tau", p.tau, "pulse delay, units of T");
    sub->add_option("--width", p.width, "pulse width T");
    sub->add_option("--area", p.area_pi, "P/S pulse area, units of pi");
    sub->add_option("--q-scale", p.q_scale, "multiplier on the counterdiabatic condition");
    if (with_phase_chirality) {
        sub->add_option("--phase", p.phase, "Q-field phase, radians");
        sub->add_option("--chirality", p.chirality, "handedness, L or R")
            ->check(CLI::IsMember({"L", "R"}));
    }
}

void add_grid_flags(CLI::App* sub, Params& p) {
    sub->add_option("--steps", p.steps, "number of propagation steps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tmax", p.tmax, "half-width of the time window (0 = auto)");
}

void add_io_flags(CLI::App* sub, Params& p) {
    sub->add_option("--out", p.out, "output file (default: stdout)");
    // --config is handled before parsing; registered here so it is listed
    // in help and accepted as a known flag
    sub->add_option("--config", p.config_file, "JSON config file, keys = long flag names");
}

json config_echo(const CLI::App* sub, const Params& p) {
    json j;
    auto has = [&](const char* name) { return sub->get_option_no_throw(name) != nullptr; };
    if (has("--tau") && !has("--bracket")) j["tau"] = p.tau;
    if (has("--width")) j["width"] = p.width;
    if (has("--area")) j["area"] = p.area_pi;
    if (has("--phase")) j["phase"] = p.phase;
    if (has("--chirality")) j["chirality"] = p.chirality;
    if (has("--q-scale")) j["q-scale"] = p.q_scale;
    if (has("--amin")) j["amin"] = p.amin_pi;
    if (has("--amax")) j["amax"] = p.amax_pi;
    if (has("--points")) j["points"] = p.points;
    if (has("--steps")) j["steps"] = p.steps;
    if (has("--tmax")) j["tmax"] = p.tmax;
    if (has("--record")) j["record"] = p.record;
    return j;
}

void write_scan_csv(Output& out, const std::string& name, const json& echo,
                    const ScanResult& scan) {
    auto& os = out.stream();
    os << "# chiralsep scan " << name << "\n";
    os << "# config: " << echo.dump() << "\n";
    os << "param,p3_L,p3_R,contrast\n";
    for (const auto& row : scan.rows)
        os << fmt9(row.value) << ',' << fmt9(row.p3_left) << ',' << fmt9(row.p3_right)
           << ',' << fmt9(row.contrast) << "\n";
}

int cmd_pulses(const CLI::App* sub, const Params& p) {
    const PulseConfig cfg = p.pulse_config();
    const TimeGrid grid = p.grid(cfg);
    Output out(p.out);
    auto& os = out.stream();
    os << "# chiralsep pulses\n";
    os << "# config: " << config_echo(sub, p).dump() << "\n";
    os << "t,omega_p,omega_s,omega_q,theta\n";
    for (int k = 0; k <= grid.n_steps; ++k) {
        const double t = grid.t_start + k * grid.dt();
        const FieldSample s = evaluate_fields(cfg, t);
        os << fmt9(s.t) << ',' << fmt9(s.omega_p) << ',' << fmt9(s.omega_s) << ','
           << fmt9(s.omega_q) << ',' << fmt9(s.theta) << "\n";
    }
    return 0;
}

int cmd_propagate(const CLI::App* sub, const Params& p) {
    const PulseConfig cfg = p.pulse_config();
    const TimeGrid grid = p.grid(cfg);
    const PropagationResult result = propagate(cfg, grid, Frame::bare, p.record);
    Output out(p.out);
    auto& os = out.stream();
    os << "# chiralsep propagate\n";
    os << "# config: " << config_echo(sub, p).dump() << "\n";
    os << "t,p1,p2,p3\n";
    if (p.record) {
        for (const auto& row : result.trajectory)
            os << fmt9(row[0]) << ',' << fmt9(row[1]) << ',' << fmt9(row[2]) << ','
               << fmt9(row[3]) << "\n";
    } else {
        os << fmt9(grid.t_end) << ',' << fmt9(result.populations[0]) << ','
           << fmt9(result.populations[1]) << ',' << fmt9(result.populations[2]) << "\n";
    }
    return 0;
}

int cmd_scan(const CLI::App* sub, const Params& p, const std::string& kind) {
    PulseConfig cfg = p.pulse_config();
    const TimeGrid grid = p.grid(cfg);
    Output out(p.out);
    if (kind == "area") {
        write_scan_csv(out, "area", config_echo(sub, p),
                       scan_area(cfg, p.amin_pi, p.amax_pi, p.points, grid));
    } else {
        write_scan_csv(out, "phase", config_echo(sub, p),
                       scan_phase(cfg, p.points, grid));
    }
    return 0;
}

int cmd_find_area(const Params& p) {
    if (p.bracket.size() != 2)
        throw std::invalid_argument("--bracket requires exactly two values: lo,hi");
    const TimeGrid grid{-1.0, 1.0, p.steps};   // window is rebuilt per delay
    const auto table = critical_area_table(p.tau_list, {p.bracket[0], p.bracket[1]},
                                           grid, p.tol);
    json doc = json::array();
    int succeeded = 0;
    for (const auto& row : table) {
        json entry;
        entry["tau_over_T"] = row.tau_over_width;
        if (row.result) {
            entry["area_star_pi"] = row.result->area_star_pi;
            entry["p3_min"] = row.result->p3_min;
            ++succeeded;
        } else {
            entry["error"] = row.error;
        }
        doc.push_back(entry);
    }
    Output out(p.out);
    out.stream() << doc.dump(2) << "\n";
    return (succeeded > 0 || table.empty()) ? 0 : kExitAnalysisFailed;
}

// Pulls --config out of the raw arguments, loads the JSON file, and returns
// its keys as --key=value tokens to be injected after the subcommand name.
// Flag overrides work because every option takes the last value given.
std::vector<std::string> expand_config(std::vector<std::string>& args, const CLI::App& app) {
    std::string path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config") {
            if (it + 1 == args.end()) throw std::invalid_argument("--config requires a file");
            path = *(it + 1);
            it = args.erase(it, it + 2);
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (path.empty()) return {};
    if (args.empty())
        throw std::invalid_argument("--config requires a subcommand");

    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands(nullptr))
        if (s->get_name() == args.front()) sub = s;
    if (sub == nullptr)
        throw std::invalid_argument("unknown subcommand '" + args.front() + "'");

    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json cfg;
    try {
        in >> cfg;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    if (!cfg.is_object())
        throw std::invalid_argument("config file must hold a flat JSON object");

    std::vector<std::string> tokens;
    for (const auto& [key, value] : cfg.items()) {
        if (sub->get_option_no_throw("--" + key) == nullptr)
            throw std::invalid_argument("config file " + path + ": unknown key '" + key +
                                        "' for subcommand '" + sub->get_name() + "'");
        const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
        tokens.push_back("--" + key + "=" + v);
    }
    return tokens;
}

int run(int argc, char** argv) {
    CLI::App app{"Three-state chiral-molecule loop scheme: propagation, scans, "
                 "and critical-area search"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    Params p;
    std::string scan_kind;

    auto* pulses = app.add_subcommand("pulses", "tabulate the P, S and Q pulse shapes");
    add_pulse_flags(pulses, p, false);
    add_grid_flags(pulses, p);
    add_io_flags(pulses, p);

    auto* prop = app.add_subcommand("propagate", "integrate the Schrodinger equation");
    add_pulse_flags(prop, p, true);
    add_grid_flags(prop, p);
    prop->add_flag("--record", p.record, "emit the full population trajectory");
    add_io_flags(prop, p);

    auto* scan = app.add_subcommand("scan", "sweep pulse area or Q phase for both "
                                            "handednesses");
    scan->add_option("kind", scan_kind, "what to sweep: area or phase")
        ->required()
        ->check(CLI::IsMember({"area", "phase"}));
    add_pulse_flags(scan, p, true);
    scan->add_option("--amin", p.amin_pi, "area scan lower bound, units of pi");
    scan->add_option("--amax", p.amax_pi, "area scan upper bound, units of pi");
    scan->add_option("--points", p.points, "number of scan points")
        ->check(CLI::PositiveNumber);
    add_grid_flags(scan, p);
    add_io_flags(scan, p);

    auto* find = app.add_subcommand("find-area", "locate critical pulse areas A*");
    find->add_option("--tau", p.tau_list, "delay values tau/T, comma-separated")
        ->delimiter(',');
    find->add_option("--bracket", p.bracket, "search bracket lo,hi in units of pi")
        ->delimiter(',')
        ->expected(2);
    find->add_option("--tol", p.tol, "bracket tolerance, units of pi")
        ->check(CLI::PositiveNumber);
    find->add_option("--steps", p.steps, "number of propagation steps")
        ->check(CLI::PositiveNumber);
    add_io_flags(find, p);

    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> injected = expand_config(args, app);
    if (!injected.empty())
        args.insert(args.begin() + 1, injected.begin(), injected.end());

    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (pulses->parsed()) return cmd_pulses(pulses, p);
    if (prop->parsed()) return cmd_propagate(prop, p);
    if (scan->parsed()) return cmd_scan(scan, p, scan_kind);
    return cmd_find_area(p);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
