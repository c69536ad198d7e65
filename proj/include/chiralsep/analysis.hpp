#ifndef CHIRALSEP_ANALYSIS_HPP
#define CHIRALSEP_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiralsep/propagator.hpp"

namespace chiralsep {

struct ScanRow {
    double value;
    double p3_left;
    double p3_right;
    double contrast;   ///< |P3_L - P3_R|
};

struct ScanResult {
    std::string parameter;          ///< "area_pi" | "phase_rad"
    std::vector<ScanRow> rows;      ///< sorted ascending in value
    PulseConfig base;               ///< fixed-config snapshot
};

struct CriticalArea {
    double tau_over_width;
    double area_star_pi;   ///< located critical area, in units of pi
    double p3_min;         ///< residual P3_R at the optimum
    int iterations;
};

struct CriticalAreaRow {
    double tau_over_width;
    std::optional<CriticalArea> result;
    std::string error;     ///< empty on success
};

/// P3_L and P3_R vs the P/S pulse area on a uniform grid [a_min_pi, a_max_pi]
/// (units of pi). The Q pulse depends only on tau and T, so it is the same
/// for every row.
ScanResult scan_area(const PulseConfig& cfg_base, double a_min_pi, double a_max_pi,
                     int n_points, const TimeGrid& grid);

/// P3_L and P3_R vs the Q-field phase on a uniform grid over [0, 2pi).
ScanResult scan_phase(const PulseConfig& cfg_base, int n_points, const TimeGrid& grid);

/// Locate the pulse area A* (units of pi) where P3_R touches zero, by
/// golden-section minimization of A -> P3_R(A) inside the bracket. The
/// bracket is first coarse-sampled; a minimum at a bracket endpoint raises
/// BracketError.
CriticalArea find_critical_area(double tau_over_width, std::pair<double, double> bracket_pi,
                                const TimeGrid& grid, double tol_pi = 1e-4);

/// find_critical_area per delay value; a failing row carries its error
/// message instead of aborting the table. The time window is rebuilt per
/// delay with the step count of the supplied grid.
std::vector<CriticalAreaRow> critical_area_table(const std::vector<double>& tau_values,
                                                 std::pair<double, double> bracket_pi,
                                                 const TimeGrid& grid, double tol_pi = 1e-4);

} // namespace chiralsep

#endif
