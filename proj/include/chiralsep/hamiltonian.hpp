#ifndef CHIRALSEP_HAMILTONIAN_HPP
#define CHIRALSEP_HAMILTONIAN_HPP

#include <Eigen/Dense>

#include "chiralsep/pulse_model.hpp"

namespace chiralsep {

enum class Frame { bare, adiabatic };

/// 3x3 Hermitian matrix over {|1>,|2>,|3>} (bare) or {|e->,|e0>,|e+>}
/// (adiabatic).
struct HamiltonianMatrix {
    Eigen::Matrix3cd m;
    Frame frame;
};

/// Eigenvalues and the orthogonal transform W of the Q-free Hamiltonian at
/// one time. Columns of w are |e->, |e0>, |e+> in that order.
struct EigenSystem {
    double eps_minus;
    double eps_zero;
    double eps_plus;
    Eigen::Matrix3d w;
    double theta;
};

/// Full loop Hamiltonian: (1/2) [[0, Wp, +-Wq e^{i phi}], [Wp, 0, Ws],
/// [+-Wq e^{-i phi}, Ws, 0]], + for L, - for R handedness.
HamiltonianMatrix bare_hamiltonian(const FieldSample& sample, double phi, Chirality chirality);

/// Loop Hamiltonian with the Q coupling removed (real symmetric).
HamiltonianMatrix base_hamiltonian(const FieldSample& sample);

/// Analytic eigensystem of the Q-free Hamiltonian: eps = -W/2, 0, +W/2 and
/// the transform built from sample.theta.
EigenSystem eigensystem(const FieldSample& sample);

/// Closed-form adiabatic-frame Hamiltonian, valid for phi = pi/2 only:
/// diagonal (-W/2, 0, +W/2) with couplings (i/sqrt2)(theta_dot -+ Wq/2),
/// upper sign for L.
HamiltonianMatrix adiabatic_hamiltonian(const FieldSample& sample, Chirality chirality);

/// Adiabatic-frame Hamiltonian computed numerically as W^T H W - i W^T Wdot,
/// with Wdot by central differences over +-deriv_step in time. Independent
/// cross-check of the closed form (uses cfg.phi and cfg.chirality).
HamiltonianMatrix adiabatic_hamiltonian_numeric(const PulseConfig& cfg, double t,
                                                double deriv_step = 1e-5);

} // namespace chiralsep

#endif
