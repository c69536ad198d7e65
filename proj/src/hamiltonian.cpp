#include "chiralsep/hamiltonian.hpp"

#include <cmath>
#include <complex>

namespace chiralsep {

using std::complex;

namespace {

Eigen::Matrix3d transform_matrix(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3d w;
    w << s * r, c, s * r,
        -r, 0.0, r,
        c * r, -s, c * r;
    return w;
}

} // namespace

HamiltonianMatrix bare_hamiltonian(const FieldSample& sample, double phi, Chirality chirality) {
    const double sign = chirality_sign(chirality);
    const complex<double> q = 0.5 * sign * sample.omega_q *
                              std::exp(complex<double>(0.0, phi));
    Eigen::Matrix3cd h;
    h << 0.0, 0.5 * sample.omega_p, q,
        0.5 * sample.omega_p, 0.0, 0.5 * sample.omega_s,
        std::conj(q), 0.5 * sample.omega_s, 0.0;
    return {h, Frame::bare};
}

HamiltonianMatrix base_hamiltonian(const FieldSample& sample) {
    Eigen::Matrix3cd h;
    h << 0.0, 0.5 * sample.omega_p, 0.0,
        0.5 * sample.omega_p, 0.0, 0.5 * sample.omega_s,
        0.0, 0.5 * sample.omega_s, 0.0;
    return {h, Frame::bare};
}

EigenSystem eigensystem(const FieldSample& sample) {
    EigenSystem es;
    es.eps_minus = -0.5 * sample.omega_rms;
    es.eps_zero = 0.0;
    es.eps_plus = 0.5 * sample.omega_rms;
    es.theta = sample.theta;
    es.w = transform_matrix(sample.theta);
    return es;
}

HamiltonianMatrix adiabatic_hamiltonian(const FieldSample& sample, Chirality chirality) {
    // coupling (theta_dot -+ omega_q/2), upper sign for L
    const double cpl = sample.theta_dot - chirality_sign(chirality) * 0.5 * sample.omega_q;
    const complex<double> ic(0.0, cpl / std::sqrt(2.0));
    const double e = 0.5 * sample.omega_rms;
    Eigen::Matrix3cd h;
    h << -e, ic, 0.0,
        -ic, 0.0, -ic,
        0.0, ic, e;
    return {h, Frame::adiabatic};
}

HamiltonianMatrix adiabatic_hamiltonian_numeric(const PulseConfig& cfg, double t,
                                                double deriv_step) {
    if (!(deriv_step > 0.0)) throw std::invalid_argument("deriv_step must be > 0");
    const FieldSample s = evaluate_fields(cfg, t);
    const Eigen::Matrix3d w = transform_matrix(s.theta);
    const Eigen::Matrix3d wdot =
        (transform_matrix(evaluate_fields(cfg, t + deriv_step).theta) -
         transform_matrix(evaluate_fields(cfg, t - deriv_step).theta)) /
        (2.0 * deriv_step);
    const Eigen::Matrix3cd h = bare_hamiltonian(s, cfg.phi, cfg.chirality).m;
    Eigen::Matrix3cd ha = w.transpose() * h * w -
                          complex<double>(0.0, 1.0) * (w.transpose() * wdot).cast<complex<double>>();
    return {ha, Frame::adiabatic};
}

} // namespace chiralsep
