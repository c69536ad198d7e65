// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "chiralsep/analysis.hpp"
#include "chiralsep/errors.hpp"

using namespace chiralsep;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

PulseConfig config_for(double area_pi, Chirality ch, double tau, double phi = M_PI / 2.0) {
    PulseConfig cfg;
    cfg.omega0 = amplitude_for_area(area_pi * M_PI, 1.0);
    cfg.tau = tau;
    cfg.phi = phi;
    cfg.chirality = ch;
    cfg.validate_and_normalize();
    return cfg;
}

// 1. A* = 0.891pi, 1.035pi, 1.234pi, 1.510pi for tau/T = 0.6..1.2, each
//    within 0.005pi, residual below 1e-5, under 30 s total.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> taus{0.6, 0.8, 1.0, 1.2};
    const std::vector<double> expected{0.891, 1.035, 1.234, 1.510};
    const TimeGrid grid{-1.0, 1.0, 4000};
    const auto table = critical_area_table(taus, {0.3, 2.5}, grid, 1e-4);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = table.size() == taus.size() && seconds < 30.0;
    std::ostringstream detail;
    for (size_t i = 0; i < table.size() && ok; ++i) {
        if (!table[i].result) {
            ok = false;
            detail << table[i].error;
            break;
        }
        const auto& ca = *table[i].result;
        detail << "A*(" << taus[i] << ")=" << ca.area_star_pi << "pi ";
        if (std::abs(ca.area_star_pi - expected[i]) > 0.005 || ca.p3_min >= 1e-5) ok = false;
    }
    detail << "in " << seconds << " s";
    report(1, "critical-area table", ok, detail.str());
}

// 2. P3 = 1 within 1e-6 for L handedness across 50 areas in [0.2pi, 3pi].
void criterion_2() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double area = 0.2 + (3.0 - 0.2) * i / 49.0;
        const PulseConfig cfg = config_for(area, Chirality::L, 1.0);
        const double p3 = propagate(cfg, TimeGrid::default_for(cfg), Frame::bare)
                              .populations[2];
        worst = std::max(worst, std::abs(p3 - 1.0));
    }
    std::ostringstream detail;
    detail << "max |P3_L - 1| = " << worst;
    report(2, "shortcut exactness", worst < 1e-6, detail.str());
}

// 3. Phase scan anchors at A = 1.234pi, tau = T.
void criterion_3() {
    PulseConfig base = config_for(1.234, Chirality::L, 1.0);
    const TimeGrid grid = TimeGrid::default_for(base);
    const auto scan = scan_phase(base, 8, grid);

    const bool anchors = std::abs(scan.rows[2].p3_left - 1.0) < 1e-4 &&
                         scan.rows[2].p3_right < 1e-4 &&
                         scan.rows[6].p3_left < 1e-4 &&
                         std::abs(scan.rows[6].p3_right - 1.0) < 1e-4;
    const bool degenerate =
        std::abs(scan.rows[0].p3_left - scan.rows[0].p3_right) < 1e-8 &&
        std::abs(scan.rows[4].p3_left - scan.rows[4].p3_right) < 1e-8;

    std::ostringstream detail;
    detail << "pi/2: (" << scan.rows[2].p3_left << ", " << scan.rows[2].p3_right
           << "), 3pi/2: (" << scan.rows[6].p3_left << ", " << scan.rows[6].p3_right << ")";
    report(3, "phase contrast", anchors && degenerate, detail.str());
}

// 4. Bare vs adiabatic frame agree on final bare-basis populations to 1e-8
//    over 100 random configs.
void criterion_4() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> tau_dist(0.5, 1.5);
    std::uniform_real_distribution<double> area_dist(0.5, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PulseConfig cfg = config_for(area_dist(rng),
                                           (i % 2 == 0) ? Chirality::L : Chirality::R,
                                           tau_dist(rng));
        const TimeGrid grid = TimeGrid::default_for(cfg, 50000);
        const auto bare = propagate(cfg, grid, Frame::bare);
        const auto adia = propagate(cfg, grid, Frame::adiabatic);
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(bare.populations[k] - adia.populations[k]));
    }
    std::ostringstream detail;
    detail << "max population diff = " << worst;
    report(4, "frame equivalence", worst < 1e-8, detail.str());
}

// 5. Closed-form adiabatic Hamiltonian vs numeric W^T H W - i W^T Wdot over
//    1000 random (config, time) samples.
void criterion_5() {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> amp(0.05, 4.0);
    std::uniform_real_distribution<double> tau(0.2, 1.6);
    std::uniform_real_distribution<double> qs(0.0, 2.0);
    std::uniform_real_distribution<double> time(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        PulseConfig cfg;
        cfg.omega0 = amp(rng);
        cfg.tau = tau(rng);
        cfg.phi = M_PI / 2.0;
        cfg.q_scale = qs(rng);
        cfg.chirality = (i % 2 == 0) ? Chirality::L : Chirality::R;
        const double t = time(rng);
        const Eigen::Matrix3cd closed =
            adiabatic_hamiltonian(evaluate_fields(cfg, t), cfg.chirality).m;
        const Eigen::Matrix3cd numeric = adiabatic_hamiltonian_numeric(cfg, t).m;
        worst = std::max(worst, (closed - numeric).cwiseAbs().maxCoeff());
    }
    std::ostringstream detail;
    detail << "max entry diff = " << worst;
    report(5, "closed form vs numeric transform", worst < 1e-8, detail.str());
}

// 6. Norm drift below 1e-9 at the default grid; stepper order in [1.8, 2.2].
void criterion_6() {
    const PulseConfig cfg = config_for(1.234, Chirality::R, 1.0);
    const double drift =
        propagate(cfg, TimeGrid::default_for(cfg), Frame::bare).norm_drift;

    auto final_amps = [&](int n) {
        return propagate(cfg, TimeGrid::default_for(cfg, n), Frame::bare).final_state.amps;
    };
    const Eigen::Vector3cd ref = final_amps(16000);
    const double e_coarse = (final_amps(1000) - ref).norm();
    const double e_fine = (final_amps(2000) - ref).norm();
    const double order = std::log2(e_coarse / e_fine);

    std::ostringstream detail;
    detail << "drift = " << drift << ", order = " << order;
    report(6, "unitarity and convergence order", drift < 1e-9 && order > 1.8 && order < 2.2,
           detail.str());
}

// 7. Chirality <-> phase identity, zero-delay degeneracy, theta symmetry.
void criterion_7() {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> area(0.4, 2.8);
    std::uniform_real_distribution<double> tau(0.5, 1.4);

    bool identity_ok = true;
    double worst_identity = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double phi = phase(rng);
        const double a = area(rng);
        const double d = tau(rng);
        const TimeGrid grid = TimeGrid::default_for(config_for(a, Chirality::R, d, phi));
        const double right =
            propagate(config_for(a, Chirality::R, d, phi), grid, Frame::bare).populations[2];
        const double shifted = propagate(config_for(a, Chirality::L, d, phi + M_PI), grid,
                                         Frame::bare).populations[2];
        worst_identity = std::max(worst_identity, std::abs(right - shifted));
        if (worst_identity > 1e-10) identity_ok = false;
    }

    PulseConfig degenerate = config_for(1.5, Chirality::L, 0.0);
    const auto [p3l, p3r] = final_populations_both(degenerate,
                                                   TimeGrid::default_for(degenerate));
    const bool degenerate_ok = p3l == p3r;

    double worst_theta = 0.0;
    std::uniform_real_distribution<double> time(-8.0, 8.0);
    for (int i = 0; i < 200; ++i) {
        PulseConfig cfg = config_for(1.0, Chirality::L, tau(rng));
        const double t = time(rng);
        worst_theta = std::max(worst_theta,
                               std::abs(evaluate_fields(cfg, t).theta +
                                        evaluate_fields(cfg, -t).theta - M_PI / 2.0));
    }

    std::ostringstream detail;
    detail << "identity diff = " << worst_identity << ", tau=0 equal = "
           << (degenerate_ok ? "yes" : "no") << ", theta symmetry = " << worst_theta;
    report(7, "symmetry suite",
           identity_ok && degenerate_ok && worst_theta < 1e-12, detail.str());
}

// 8. Identical CLI invocations produce byte-identical output.
void criterion_8() {
    const std::string cli = CHIRALSEP_CLI_PATH;
    auto capture = [&](const std::string& args, const std::string& tag) {
        const std::string path = "/tmp/chiralsep_acceptance_" + tag;
        const int status = std::system((cli + " " + args + " > " + path).c_str());
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::remove(path.c_str());
        return std::make_pair(WEXITSTATUS(status), buffer.str());
    };

    bool ok = true;
    for (const std::string args :
         {std::string("scan phase --points 12 --steps 1000"),
          std::string("find-area --tau 0.8,1.0 --steps 1500"),
          std::string("propagate --chirality R --area 1.234 --record --steps 500")}) {
        const auto a = capture(args, "a");
        const auto b = capture(args, "b");
        if (a.first != 0 || a.second != b.second || a.second.empty()) ok = false;
    }
    report(8, "CLI determinism", ok, ok ? "byte-identical reruns" : "outputs differ");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
