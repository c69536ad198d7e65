#ifndef CHIRALSEP_PROPAGATOR_HPP
#define CHIRALSEP_PROPAGATOR_HPP

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chiralsep/hamiltonian.hpp"
#include "chiralsep/pulse_model.hpp"

namespace chiralsep {

struct StateVector {
    Eigen::Vector3cd amps;
    Frame frame;
};

struct PropagationResult {
    StateVector final_state;
    /// Final populations in the bare basis {|1>,|2>,|3>}, whichever frame
    /// the propagation ran in.
    std::array<double, 3> populations;
    /// (t, P1, P2, P3) rows in the frame's own basis; empty unless recording.
    std::vector<std::array<double, 4>> trajectory;
    /// max |norm^2 - 1| seen over the run
    double norm_drift;
};

/// One midpoint-exponential step: exp(-i h_mid dt) * state by spectral
/// decomposition of the 3x3 Hermitian generator. Throws
/// std::invalid_argument if h_mid is not Hermitian to tolerance.
Eigen::Vector3cd step(const HamiltonianMatrix& h_mid, const Eigen::Vector3cd& state, double dt);

/// Integrate i psi' = H(t) psi from |1> over the grid, in the bare or
/// adiabatic frame (adiabatic requires phi = pi/2, where the closed-form
/// frame Hamiltonian is available). Throws NumericalFailure if the norm
/// drifts by more than 1e-6.
PropagationResult propagate(const PulseConfig& cfg, const TimeGrid& grid, Frame frame,
                            bool record = false);

/// Run both chiralities with otherwise identical parameters; returns
/// (P3_L, P3_R).
std::pair<double, double> final_populations_both(PulseConfig cfg, const TimeGrid& grid);

} // namespace chiralsep

#endif
