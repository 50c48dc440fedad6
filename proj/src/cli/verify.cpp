// Copyright 2026 The QCS Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcs/cli.hpp"
#include "qcs/entanglement_measures.hpp"
#include "qcs/evolution.hpp"
#include "qcs/gates.hpp"

namespace qcs::cli {

namespace {

enum class Severity { Hard, Warn };

struct Check {
    std::string name;
    double tolerance;
    Severity severity;
    std::function<double()> measure;
};

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    Complex point(double r = 3.0) { return {uniform(-r, r), uniform(-r, r)}; }

    PureState state(int n_qubits) {
        CVector v(Eigen::Index{1} << n_qubits);
        std::normal_distribution<double> g;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            v(i) = Complex{g(rng_), g(rng_)};
        }
        return PureState::normalized(v);
    }

    UnitaryGate unitary() {
        // Random SU(2) element from a normalized quaternion.
        std::normal_distribution<double> g;
        double q[4];
        double n = 0.0;
        for (double &x : q) {
            x = g(rng_);
            n += x * x;
        }
        n = std::sqrt(n);
        const Complex a{q[0] / n, q[1] / n};
        const Complex b{q[2] / n, q[3] / n};
        CMatrix m(2, 2);
        m << a, b, -std::conj(b), std::conj(a);
        return UnitaryGate(m);
    }

  private:
    std::mt19937_64 rng_;
};

double point_gap(const ComplexPoint &a, const ComplexPoint &b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() == b.is_infinite() ? 0.0 : INFINITY;
    }
    return std::abs(a.value() - b.value());
}

double grid_max(const std::function<double(Complex)> &f) {
    double worst = 0.0;
    for (int iy = 0; iy <= 40; ++iy) {
        for (int ix = 0; ix <= 40; ++ix) {
            worst = std::max(worst, f({-4.0 + 0.2 * ix, -4.0 + 0.2 * iy}));
        }
    }
    return worst;
}

std::vector<Check> build_checks(std::uint64_t seed) {
    std::vector<Check> checks;
    auto add = [&](std::string name, double tol, Severity sev, std::function<double()> fn) {
        checks.push_back({std::move(name), tol, sev, std::move(fn)});
    };

    add("geometry.cross_ratio_invariance", 1e-10, Severity::Hard, [seed] {
        Sampler s(seed);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const ComplexPoint p = s.point(), p1 = s.point(), p2 = s.point(), p3 = s.point();
            const MobiusMap m(s.point(1.0), s.point(1.0), s.point(1.0), s.point(1.0));
            const Complex before = cross_ratio(p, p1, p2, p3).value();
            const ComplexPoint after = cross_ratio(m(p), m(p1), m(p2), m(p3));
            worst = std::max(worst, point_gap(after, ComplexPoint{before}) / (1.0 + std::abs(before)));
        }
        return worst;
    });
    add("geometry.symmetric_point_involution", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 1);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const ComplexPoint p = s.point();
            for (SymmetryKind k : {SymmetryKind::Conjugate, SymmetryKind::NegConjugate, SymmetryKind::UnitCircle,
                                   SymmetryKind::Antipodal}) {
                worst = std::max(worst, point_gap(symmetric_point(symmetric_point(p, k), k), p));
            }
        }
        return worst;
    });
    add("geometry.stereo_round_trip", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 2);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const ComplexPoint p = s.point();
            worst = std::max(worst, point_gap(stereo_project(stereo_lift(p)), p) / (1.0 + std::abs(p.value())));
        }
        return worst;
    });
    add("geometry.hadamard_symmetric_points", 1e-10, Severity::Hard, [seed] {
        Sampler s(seed + 3);
        const MobiusMap h = induced_mobius(gate_hadamard());
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const ComplexPoint p = s.point();
            const ComplexPoint ph = h(p);
            const ComplexPoint star = h(symmetric_point(p, SymmetryKind::UnitCircle));
            const ComplexPoint anti = h(symmetric_point(p, SymmetryKind::Antipodal));
            if (ph.is_infinite() || star.is_infinite() || anti.is_infinite()) {
                continue;
            }
            const double scale = 1.0 + std::abs(ph.value());
            worst = std::max(worst, std::abs(star.value() + std::conj(ph.value())) / scale);
            worst = std::max(worst, point_gap(anti, symmetric_point(ph, SymmetryKind::Antipodal)) /
                                        (1.0 + std::abs(anti.value())));
        }
        return worst;
    });
    add("coherent.antipodal_orthogonality", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 4);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const ComplexPoint p = s.point();
            worst = std::max(worst, std::abs(overlap(symmetric_state(p, SymmetryKind::Antipodal), coherent(p))));
        }
        return worst;
    });
    add("coherent.spin_j_overlap_closed_form", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 5);
        double worst = 0.0;
        for (int twice_j = 1; twice_j <= 5; ++twice_j) {
            for (int i = 0; i < 100; ++i) {
                const ComplexPoint a = s.point(2.0), b = s.point(2.0);
                const Complex direct = spin_j_overlap(spin_j_coherent(twice_j, a), spin_j_coherent(twice_j, b));
                worst = std::max(worst, std::abs(direct - spin_j_overlap_closed_form(twice_j, a, b)));
                const ComplexPoint anti = symmetric_point(b, SymmetryKind::Antipodal);
                worst = std::max(worst, std::abs(spin_j_overlap(spin_j_coherent(twice_j, anti),
                                                                spin_j_coherent(twice_j, b))));
            }
        }
        return worst;
    });
    add("coherent.antipodal_expansion", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 6);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const PureState phi = s.state(1);
            const ComplexPoint p = s.point();
            const auto [e1, e2] = expand_in_antipodal_basis(phi, p);
            const CVector rebuilt =
                e1 * coherent(p).amplitudes() + e2 * symmetric_state(p, SymmetryKind::Antipodal).amplitudes();
            worst = std::max(worst, (rebuilt - phi.amplitudes()).norm());
            worst = std::max(worst, std::abs(std::norm(e1) + std::norm(e2) - 1.0));
        }
        return worst;
    });
    add("gates.mobius_commutation", 1e-10, Severity::Hard, [seed] {
        Sampler s(seed + 7);
        double worst = 0.0;
        for (const UnitaryGate &g : std::vector<UnitaryGate>{gate_not(), gate_hadamard(), gate_phase(0.7), coherent_generator(ComplexPoint{Complex{0.3, -0.4}})}) {
            const MobiusMap m = induced_mobius(g);
            for (int i = 0; i < 100; ++i) {
                const ComplexPoint p = s.point();
                const ComplexPoint lhs = state_ratio(g.apply(coherent(p)));
                const ComplexPoint rhs = m(p);
                if (lhs.is_finite() && rhs.is_finite()) {
                    worst = std::max(worst, std::abs(lhs.value() - rhs.value()) / (1.0 + std::abs(rhs.value())));
                } else {
                    worst = std::max(worst, point_gap(lhs, rhs));
                }
            }
        }
        return worst;
    });
    add("basis.orthonormality", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 8);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ComplexPoint p = s.point();
            const EntangledBasis2 b = entangled_basis_2q(p);
            CMatrix m(4, 4);
            m << b.p_plus.amplitudes(), b.p_minus.amplitudes(), b.g_plus.amplitudes(), b.g_minus.amplitudes();
            worst = std::max(worst, unitarity_defect(m));
            const auto cb = coherent_basis_2q(p);
            CMatrix c(4, 4);
            c << cb[0].amplitudes(), cb[1].amplitudes(), cb[2].amplitudes(), cb[3].amplitudes();
            worst = std::max(worst, unitarity_defect(c));
        }
        return worst;
    });
    add("basis.generated_from_bell", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 9);
        const auto bell = bell_states();
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ComplexPoint p = s.point();
            const UnitaryGate u = coherent_generator_product(p, 2);
            const EntangledBasis2 b = entangled_basis_2q(p);
            const PureState *targets[4] = {&b.p_plus, &b.g_plus, &b.p_minus, &b.g_minus};
            for (int k = 0; k < 4; ++k) {
                worst = std::max(worst, 1.0 - phase_insensitive_overlap(u.apply(bell[k]), *targets[k]));
            }
        }
        return worst;
    });
    add("measures.maximal_entanglement", 1e-12, Severity::Hard, [] {
        return grid_max([](Complex z) {
            const EntangledBasis2 b = entangled_basis_2q(z);
            double worst = 0.0;
            for (StateId id : kTwoQubitStates) {
                worst = std::max(worst, std::abs(concurrence_det(b.get(id)) - 1.0));
                worst = std::max(worst, std::abs(concurrence_rdm(b.get(id)) - 1.0));
            }
            return worst;
        });
    });
    add("measures.reduced_density_identity", 1e-12, Severity::Hard, [] {
        return grid_max([](Complex z) {
            const EntangledBasis2 b = entangled_basis_2q(z);
            double worst = 0.0;
            for (StateId id : kTwoQubitStates) {
                const DensityMatrix r = partial_trace(density(b.get(id)), {0});
                worst = std::max(worst, (r.matrix() - 0.5 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff());
                worst = std::max(worst, std::abs(r.purity() - 0.5));
            }
            return worst;
        });
    });
    add("measures.spin_averages_vanish", 1e-12, Severity::Hard, [] {
        return grid_max([](Complex z) {
            const EntangledBasis2 b = entangled_basis_2q(z);
            double worst = 0.0;
            for (StateId id : kTwoQubitStates) {
                worst = std::max(worst, spin_sum_averages(b.get(id)).max_abs());
            }
            return worst;
        });
    });
    add("measures.three_route_agreement", 1e-10, Severity::Hard, [seed] {
        Sampler s(seed + 10);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const PureState phi = s.state(2);
            const double det = concurrence_det(phi);
            worst = std::max(worst, std::abs(det - concurrence_rdm(phi)));
            worst = std::max(worst, std::abs(det - concurrence_from_expansion(expand_in_entangled_basis(phi, s.point()))));
        }
        return worst;
    });
    add("measures.local_unitary_invariance", 1e-10, Severity::Hard, [seed] {
        Sampler s(seed + 11);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const PureState phi = s.state(2);
            const UnitaryGate v = tensor(s.unitary(), s.unitary());
            worst = std::max(worst, std::abs(concurrence_det(phi) - concurrence_det(v.apply(phi))));
        }
        return worst;
    });

    const CouplingParams xyz = CouplingParams::xyz_pm(0.7, -0.3, 1.1);
    for (StateId id : {StateId::PPlus, StateId::PMinus, StateId::GPlus, StateId::GMinus, StateId::PGPlus,
                       StateId::PGMinus}) {
        add("models.closed_vs_direct.xyz." + std::string(to_string(id)), 1e-10, Severity::Hard, [xyz, id] {
            double worst = 0.0;
            for (int iy = 0; iy <= 20; ++iy) {
                for (int ix = 0; ix <= 20; ++ix) {
                    const ComplexPoint p{-2.0 + 0.2 * ix, -2.0 + 0.2 * iy};
                    worst = std::max(worst, std::abs(q_symbol_closed(xyz, id, p).closed_minus_direct()));
                }
            }
            return worst;
        });
    }
    add("models.closed_vs_direct.xxz.P+", 1e-10, Severity::Warn, [] {
        const CouplingParams c = CouplingParams::xxz(1.0, -2.0);
        double worst = 0.0;
        for (int iy = 0; iy <= 20; ++iy) {
            for (int ix = 0; ix <= 20; ++ix) {
                const ComplexPoint p{-2.0 + 0.2 * ix, -2.0 + 0.2 * iy};
                worst = std::max(worst, std::abs(q_symbol_closed(c, StateId::PPlus, p).closed_minus_direct()));
            }
        }
        return worst;
    });
    add("models.constant_q_symbols", 1e-10, Severity::Hard, [] {
        const CouplingParams xxx = CouplingParams::xxx(1.3, 0.8);
        const CouplingParams xyz = CouplingParams::xyz(0.4, -1.2, 0.9);
        double worst = 0.0;
        for (int iy = 0; iy <= 20; ++iy) {
            for (int ix = 0; ix <= 20; ++ix) {
                const ComplexPoint p{-2.0 + 0.2 * ix, -2.0 + 0.2 * iy};
                worst = std::max(worst, std::abs(q_symbol_direct(xxx, StateId::PPlus, p) + 1.3 * 0.64 / 2.0));
                worst = std::max(worst, std::abs(q_symbol_direct(xyz, StateId::GMinus, p) + (0.9 / 2.0 + xyz.j_plus)));
            }
        }
        return worst;
    });
    add("models.spectral_bounds", 1e-12, Severity::Hard, [seed] {
        Sampler s(seed + 12);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const CouplingParams c = CouplingParams::xyz(s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2));
            for (StateId id : {StateId::PPlus, StateId::GPlus, StateId::PGPlus, StateId::PGMinus}) {
                const Eigen::VectorXd ev = hamiltonian(c, qubit_count(id)).eigenvalues();
                const double q = q_symbol_direct(c, id, s.point());
                worst = std::max({worst, ev.minCoeff() - q, q - ev.maxCoeff()});
            }
        }
        return std::max(0.0, worst);
    });

    const CouplingParams xx = CouplingParams::xx(1.0);
    add("evolution.unitarity_group_law_energy", 1e-10, Severity::Hard, [seed, xx] {
        Sampler s(seed + 13);
        const HermitianOperator h = hamiltonian(CouplingParams::xyz(0.8, -0.5, 1.3), 2);
        const Propagator u(h, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const PureState phi = s.state(2);
            const double t1 = s.uniform(0, 5), t2 = s.uniform(0, 5);
            const PureState a = u.evolve(u.evolve(phi, t1), t2);
            const PureState b = u.evolve(phi, t1 + t2);
            worst = std::max(worst, (a.amplitudes() - b.amplitudes()).norm());
            worst = std::max(worst, std::abs((u.matrix(t1) * phi.amplitudes()).norm() - 1.0));
            worst = std::max(worst, std::abs(h.expectation(a) - h.expectation(phi)));
        }
        (void)xx;
        return worst;
    });
    add("evolution.fidelity_revival_2pi", 1e-9, Severity::Hard, [xx] {
        double worst = 0.0;
        for (double theta : {0.0, kPi / 8, kPi / 4, 3 * kPi / 8}) {
            const ComparedSeries f = fidelity_series(xx, ComplexPoint{std::cos(theta), std::sin(theta)}, {2 * kPi});
            worst = std::max(worst, 1.0 - f.numeric.values[0]);
        }
        return worst;
    });
    add("evolution.printed_fidelity_vs_numeric", 1e-8, Severity::Warn, [xx] {
        double worst = 0.0;
        const std::vector<double> grid = uniform_time_grid(0.0, 4 * kPi, 0.01);
        for (double theta : {0.0, kPi / 8, kPi / 4, 3 * kPi / 8}) {
            worst = std::max(worst,
                             fidelity_series(xx, ComplexPoint{std::cos(theta), std::sin(theta)}, grid).max_deviation);
        }
        return worst;
    });
    add("evolution.printed_concurrence_vs_numeric", 1e-8, Severity::Warn, [xx] {
        double worst = 0.0;
        const std::vector<double> grid = uniform_time_grid(0.0, 4 * kPi, 0.01);
        for (double theta : {0.0, kPi / 8, kPi / 4, 3 * kPi / 8}) {
            worst = std::max(worst,
                             concurrence_series(xx, ComplexPoint{std::cos(theta), std::sin(theta)}, grid).max_deviation);
        }
        return worst;
    });
    return checks;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

} // namespace

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    out << "# qcs verify seed=" << cfg.seed << "\n";
    out << "status,check,max_deviation,tolerance\n";
    int failures = 0;
    int warnings = 0;
    for (const Check &c : build_checks(cfg.seed)) {
        double dev = 0.0;
        std::string status;
        try {
            dev = c.measure();
            const bool ok = dev <= c.tolerance;
            status = ok ? "PASS" : (c.severity == Severity::Warn ? "WARN" : "FAIL");
        } catch (const std::exception &e) {
            dev = INFINITY;
            status = "FAIL";
        }
        failures += status == "FAIL" ? 1 : 0;
        warnings += status == "WARN" ? 1 : 0;
        out << status << "," << c.name << "," << fmt(dev) << "," << fmt(c.tolerance) << "\n";
    }
    out << "# summary failures=" << failures << " warnings=" << warnings << "\n";
    return failures == 0 ? kExitOk : kExitCheckFailure;
}

} // namespace qcs::cli
