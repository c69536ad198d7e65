#ifndef CHIRALSEP_PULSE_MODEL_HPP
#define CHIRALSEP_PULSE_MODEL_HPP

#include <stdexcept>
#include <string>

namespace chiralsep {

enum class Chirality { L, R };

inline double chirality_sign(Chirality c) {
    return c == Chirality::L ? +1.0 : -1.0;
}

std::string to_string(Chirality c);
Chirality chirality_from_string(const std::string& s);

/// All experiment parameters for one run. Times are in units of the pulse
/// width T, Rabi frequencies in units of 1/T.
struct PulseConfig {
    double omega0 = 0.0;     ///< peak Rabi frequency of the P and S pulses
    double tau = 1.0;        ///< pulse delay
    double width = 1.0;      ///< pulse width T
    double phi = 0.0;        ///< phase of the Q coupling, normalized to [0, 2pi)
    Chirality chirality = Chirality::L;
    double q_scale = 1.0;    ///< multiplier on the counterdiabatic condition

    /// Throws std::invalid_argument if any invariant is violated; maps phi
    /// into [0, 2pi).
    void validate_and_normalize();
};

/// Instantaneous field values at one time.
struct FieldSample {
    double t;
    double omega_p;
    double omega_s;
    double omega_q;      ///< counterdiabatic pulse, chirality sign NOT applied
    double theta;        ///< mixing angle, in [0, pi/2]
    double theta_dot;
    double omega_rms;    ///< sqrt(omega_p^2 + omega_s^2)
};

struct TimeGrid {
    double t_start;
    double t_end;
    int n_steps;

    void validate() const;
    double dt() const { return (t_end - t_start) / n_steps; }

    /// Symmetric window [-(tau/2 + 5T), +(tau/2 + 5T)]; Gaussian tails are
    /// below e^{-25} at the boundary.
    static TimeGrid default_for(const PulseConfig& cfg, int n_steps = 4000);
};

/// Gaussian P/S envelopes, mixing angle, and counterdiabatic Q pulse at
/// time t. theta comes from the closed form atan(exp(2 tau t / T^2)) so the
/// wings stay well-defined where both Gaussians underflow.
FieldSample evaluate_fields(const PulseConfig& cfg, double t);

/// A = Omega0 * T * sqrt(pi) for the Gaussian P and S pulses.
double pulse_area(const PulseConfig& cfg);

/// Inverse of pulse_area: Omega0 = A / (T sqrt(pi)).
double amplitude_for_area(double area, double width);

} // namespace chiralsep

#endif
