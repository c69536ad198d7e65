#include "chiralsep/analysis.hpp"

#include <array>
#include <cmath>

#include "chiralsep/errors.hpp"

namespace chiralsep {

namespace {

ScanRow make_row(double value, const PulseConfig& cfg, const TimeGrid& grid) {
    const auto [p3l, p3r] = final_populations_both(cfg, grid);
    return {value, p3l, p3r, std::abs(p3l - p3r)};
}

} // namespace

ScanResult scan_area(const PulseConfig& cfg_base, double a_min_pi, double a_max_pi,
                     int n_points, const TimeGrid& grid) {
    if (!(a_min_pi >= 0.0) || !(a_min_pi < a_max_pi))
        throw std::invalid_argument("area scan requires 0 <= a_min < a_max");
    if (n_points < 2) throw std::invalid_argument("area scan requires n_points >= 2");

    ScanResult result{"area_pi", {}, cfg_base};
    result.rows.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double a_pi = a_min_pi + (a_max_pi - a_min_pi) * i / (n_points - 1);
        PulseConfig cfg = cfg_base;
        cfg.omega0 = amplitude_for_area(a_pi * M_PI, cfg.width);
        result.rows.push_back(make_row(a_pi, cfg, grid));
    }
    return result;
}

ScanResult scan_phase(const PulseConfig& cfg_base, int n_points, const TimeGrid& grid) {
    if (n_points < 2) throw std::invalid_argument("phase scan requires n_points >= 2");

    ScanResult result{"phase_rad", {}, cfg_base};
    result.rows.reserve(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double phi = 2.0 * M_PI * i / n_points;   // [0, 2pi), endpoint excluded
        PulseConfig cfg = cfg_base;
        cfg.phi = phi;
        result.rows.push_back(make_row(phi, cfg, grid));
    }
    return result;
}

CriticalArea find_critical_area(double tau_over_width, std::pair<double, double> bracket_pi,
                                const TimeGrid& grid, double tol_pi) {
    if (!(tau_over_width > 0.0))
        throw std::invalid_argument("critical-area search requires tau > 0");
    if (!(bracket_pi.first < bracket_pi.second))
        throw std::invalid_argument("bracket must satisfy lo < hi");
    if (!(tol_pi > 0.0)) throw std::invalid_argument("tolerance must be > 0");

    PulseConfig cfg;
    cfg.tau = tau_over_width;
    cfg.width = 1.0;
    cfg.phi = M_PI / 2.0;
    cfg.chirality = Chirality::R;
    cfg.q_scale = 1.0;

    auto p3_right = [&](double a_pi) {
        PulseConfig c = cfg;
        c.omega0 = amplitude_for_area(a_pi * M_PI, c.width);
        return propagate(c, grid, Frame::bare).populations[2];
    };

    // Coarse presample to localize the minimum; a minimum at an endpoint
    // means the bracket does not enclose one.
    constexpr int n_pre = 13;
    double best_x = 0.0, best_f = 0.0;
    int best_i = -1;
    std::array<double, n_pre> xs{}, fs{};
    for (int i = 0; i < n_pre; ++i) {
        xs[i] = bracket_pi.first + (bracket_pi.second - bracket_pi.first) * i / (n_pre - 1);
        fs[i] = p3_right(xs[i]);
        if (best_i < 0 || fs[i] < best_f) {
            best_i = i;
            best_x = xs[i];
            best_f = fs[i];
        }
    }
    if (best_i == 0 || best_i == n_pre - 1)
        throw BracketError("P3_R appears monotone on the bracket [" +
                           std::to_string(bracket_pi.first) + "pi, " +
                           std::to_string(bracket_pi.second) + "pi]");

    // Golden-section on the bracketing triple.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = xs[best_i - 1];
    double hi = xs[best_i + 1];
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = p3_right(x1);
    double f2 = p3_right(x2);
    int iterations = 0;
    while (hi - lo > tol_pi) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = p3_right(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = p3_right(x2);
        }
        ++iterations;
    }

    const double a_star = 0.5 * (lo + hi);
    return {tau_over_width, a_star, p3_right(a_star), iterations};
}

std::vector<CriticalAreaRow> critical_area_table(const std::vector<double>& tau_values,
                                                 std::pair<double, double> bracket_pi,
                                                 const TimeGrid& grid, double tol_pi) {
    std::vector<CriticalAreaRow> table;
    table.reserve(tau_values.size());
    for (double tau : tau_values) {
        CriticalAreaRow row{tau, std::nullopt, ""};
        try {
            PulseConfig cfg;
            cfg.tau = tau;
            const TimeGrid row_grid = TimeGrid::default_for(cfg, grid.n_steps);
            row.result = find_critical_area(tau, bracket_pi, row_grid, tol_pi);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        table.push_back(row);
    }
    return table;
}

} // namespace chiralsep
