#include "chiralsep/propagator.hpp"

#include <cmath>
#include <complex>

#include "chiralsep/errors.hpp"

namespace chiralsep {

using std::complex;

Eigen::Vector3cd step(const HamiltonianMatrix& h_mid, const Eigen::Vector3cd& state, double dt) {
    if (!std::isfinite(dt)) throw std::invalid_argument("step requires a finite dt");
    const Eigen::Matrix3cd& h = h_mid.m;
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("step requires a Hermitian Hamiltonian");

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(h);
    Eigen::Vector3cd c = es.eigenvectors().adjoint() * state;
    for (int i = 0; i < 3; ++i)
        c[i] *= std::exp(complex<double>(0.0, -es.eigenvalues()[i] * dt));
    return es.eigenvectors() * c;
}

PropagationResult propagate(const PulseConfig& cfg, const TimeGrid& grid, Frame frame,
                            bool record) {
    grid.validate();
    constexpr double half_pi = 1.5707963267948966;
    if (frame == Frame::adiabatic && std::abs(cfg.phi - half_pi) > 1e-12)
        throw std::invalid_argument(
            "adiabatic-frame propagation is only available at phi = pi/2");

    const double dt = grid.dt();
    Eigen::Vector3cd psi;
    if (frame == Frame::bare) {
        psi << 1.0, 0.0, 0.0;
    } else {
        // |1> expressed in the adiabatic basis at t_start (theta there is
        // tiny but nonzero for a finite window)
        const EigenSystem es0 = eigensystem(evaluate_fields(cfg, grid.t_start));
        psi = es0.w.transpose().cast<complex<double>>() * Eigen::Vector3cd(1.0, 0.0, 0.0);
    }

    PropagationResult result;
    result.norm_drift = 0.0;
    if (record) {
        result.trajectory.reserve(grid.n_steps + 1);
        result.trajectory.push_back({grid.t_start, std::norm(psi[0]), std::norm(psi[1]),
                                     std::norm(psi[2])});
    }

    for (int k = 0; k < grid.n_steps; ++k) {
        const double t_mid = grid.t_start + (k + 0.5) * dt;
        const FieldSample s = evaluate_fields(cfg, t_mid);
        const HamiltonianMatrix h = frame == Frame::bare
                                        ? bare_hamiltonian(s, cfg.phi, cfg.chirality)
                                        : adiabatic_hamiltonian(s, cfg.chirality);
        psi = step(h, psi, dt);

        const double drift = std::abs(psi.squaredNorm() - 1.0);
        if (drift > result.norm_drift) result.norm_drift = drift;
        if (drift > 1e-6)
            throw NumericalFailure("norm drift " + std::to_string(drift) +
                                   " exceeds 1e-6; refine the time grid");

        if (record)
            result.trajectory.push_back({grid.t_start + (k + 1) * dt, std::norm(psi[0]),
                                         std::norm(psi[1]), std::norm(psi[2])});
    }

    result.final_state = StateVector{psi, frame};

    Eigen::Vector3cd bare = psi;
    if (frame == Frame::adiabatic) {
        const EigenSystem es_end = eigensystem(evaluate_fields(cfg, grid.t_end));
        bare = es_end.w.cast<complex<double>>() * psi;
    }
    result.populations = {std::norm(bare[0]), std::norm(bare[1]), std::norm(bare[2])};
    return result;
}

std::pair<double, double> final_populations_both(PulseConfig cfg, const TimeGrid& grid) {
    cfg.chirality = Chirality::L;
    const double p3_left = propagate(cfg, grid, Frame::bare).populations[2];
    cfg.chirality = Chirality::R;
    const double p3_right = propagate(cfg, grid, Frame::bare).populations[2];
    return {p3_left, p3_right};
}

} // namespace chiralsep
