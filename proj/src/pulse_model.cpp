#include "chiralsep/pulse_model.hpp"

#include <cmath>

namespace chiralsep {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;
}

std::string to_string(Chirality c) {
    return c == Chirality::L ? "L" : "R";
}

Chirality chirality_from_string(const std::string& s) {
    if (s == "L") return Chirality::L;
    if (s == "R") return Chirality::R;
    throw std::invalid_argument("chirality must be 'L' or 'R', got '" + s + "'");
}

void PulseConfig::validate_and_normalize() {
    if (!(omega0 >= 0.0)) throw std::invalid_argument("omega0 must be >= 0");
    if (!(width > 0.0)) throw std::invalid_argument("width must be > 0");
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    if (!(q_scale >= 0.0)) throw std::invalid_argument("q_scale must be >= 0");
    if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
}

void TimeGrid::validate() const {
    if (!(t_start < t_end)) throw std::invalid_argument("time grid requires t_start < t_end");
    if (n_steps < 1) throw std::invalid_argument("time grid requires n_steps >= 1");
}

TimeGrid TimeGrid::default_for(const PulseConfig& cfg, int n_steps) {
    const double half = cfg.tau / 2.0 + 5.0 * cfg.width;
    return TimeGrid{-half, half, n_steps};
}

FieldSample evaluate_fields(const PulseConfig& cfg, double t) {
    const double T2 = cfg.width * cfg.width;
    const double dp = t - cfg.tau / 2.0;
    const double ds = t + cfg.tau / 2.0;

    FieldSample s;
    s.t = t;
    s.omega_p = cfg.omega0 * std::exp(-dp * dp / T2);
    s.omega_s = cfg.omega0 * std::exp(-ds * ds / T2);
    s.omega_rms = std::hypot(s.omega_p, s.omega_s);

    // tan(theta) = omega_p/omega_s reduces to exp(2 tau t / T^2); evaluate
    // theta and theta_dot from that closed form, not from the envelope ratio.
    const double u = 2.0 * cfg.tau * t / T2;
    s.theta = std::atan(std::exp(u));
    s.theta_dot = (cfg.tau / T2) / std::cosh(u);
    s.omega_q = cfg.q_scale * 2.0 * s.theta_dot;
    return s;
}

double pulse_area(const PulseConfig& cfg) {
    return cfg.omega0 * cfg.width * std::sqrt(M_PI);
}

double amplitude_for_area(double area, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("pulse width must be > 0");
    if (!(area >= 0.0)) throw std::invalid_argument("pulse area must be >= 0");
    return area / (width * std::sqrt(M_PI));
}

} // namespace chiralsep
