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
#include <cmath>

#include <gtest/gtest.h>

#include "qcs/entangled_basis.hpp"
#include "qcs/entanglement_measures.hpp"
#include "qcs/errors.hpp"
#include "qcs/evolution.hpp"

using namespace qcs;

namespace {

ComplexPoint unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

double max_abs_diff(const std::vector<double> &a, double v) {
    double worst = 0.0;
    for (double x : a) {
        worst = std::max(worst, std::abs(x - v));
    }
    return worst;
}

} // namespace

TEST(Evolve, TrivialCases) {
    const PureState phi = entangled_basis_2q(Complex{0.3, 0.2}).g_plus;
    const HermitianOperator h = hamiltonian(CouplingParams::xyz(1.0, 0.5, -0.2), 2);
    EXPECT_LE((evolve(h, phi, 0.0, 1.0).amplitudes() - phi.amplitudes()).norm(), 1e-14);
    const HermitianOperator zero = hamiltonian(CouplingParams::xyz(0.0, 0.0, 0.0), 2);
    EXPECT_LE((evolve(zero, phi, 7.5, 1.0).amplitudes() - phi.amplitudes()).norm(), 1e-14);
    EXPECT_THROW((void)evolve(h, entangled_basis_3q(0.0).pg_plus, 1.0, 1.0), DimensionMismatch);
}

TEST(Evolve, XxModelPhaseOnSingleExcitationAmplitudes) {
    const double j = 1.3;
    const double t = 0.77;
    const PureState p0 = entangled_basis_2q(Complex{0.4, 0.9}).p_plus;
    const PureState pt = evolve(hamiltonian(CouplingParams::xx(j), 2), p0, t, 1.0);
    const Complex phase = std::polar(1.0, -j * t);
    EXPECT_NEAR(std::abs(pt[0] - p0[0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(pt[3] - p0[3]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(pt[1] - phase * p0[1]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(pt[2] - phase * p0[2]), 0.0, 1e-12);
}

TEST(Evolve, GroupLawUnitarityEnergy) {
    const HermitianOperator h = hamiltonian(CouplingParams::xyz(0.9, -0.3, 1.4), 3);
    const Propagator u(h, 0.8);
    const PureState phi = entangled_basis_3q(Complex{0.6, -0.2}).pg_minus;
    const PureState a = u.evolve(u.evolve(phi, 1.1), 2.3);
    const PureState b = u.evolve(phi, 3.4);
    EXPECT_LE((a.amplitudes() - b.amplitudes()).norm(), 1e-10);
    EXPECT_LE(unitarity_defect(u.matrix(5.0)), 1e-12);
    EXPECT_NEAR(h.expectation(b), h.expectation(phi), 1e-10);
}

TEST(TimeGrid, UniformAndValidated) {
    const std::vector<double> g = uniform_time_grid(0.0, 1.0, 0.25);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_DOUBLE_EQ(g.back(), 1.0);
    EXPECT_THROW((void)uniform_time_grid(0.0, 1.0, 0.0), BadParams);
    TimeSeries bad{{0.0, 0.0}, {1.0, 1.0}};
    EXPECT_THROW(bad.validate(), InvariantViolation);
}

TEST(Concurrence, RealPsiStaysConstant) {
    const std::vector<double> grid = uniform_time_grid(0.0, 10.0, 0.05);
    const ComparedSeries s = concurrence_series(CouplingParams::xx(1.0), 0.7, grid);
    EXPECT_LE(max_abs_diff(s.numeric.values, s.numeric.values.front()), 1e-12);
    EXPECT_NEAR(s.numeric.values.front(), 1.0, 1e-12);
}

TEST(Concurrence, ImaginaryUnitPeriod) {
    const CouplingParams xx = CouplingParams::xx(1.0);
    const std::vector<double> grid = uniform_time_grid(0.0, 3.0, 0.1);
    std::vector<double> shifted;
    for (double t : grid) {
        shifted.push_back(t + kPi);
    }
    const ComparedSeries a = concurrence_series(xx, Complex{0, 1}, grid);
    const ComparedSeries b = concurrence_series(xx, Complex{0, 1}, shifted);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(a.numeric.values[i], b.numeric.values[i], 1e-12);
    }
}

TEST(Concurrence, PrintedFormsAreEvaluatedAlongside) {
    const std::vector<double> grid = uniform_time_grid(0.0, 4 * kPi, 0.05);
    const ComparedSeries s = concurrence_series(CouplingParams::xx(1.0), unit(kPi / 8), grid);
    ASSERT_TRUE(s.closed_form.has_value());
    EXPECT_EQ(s.closed_form->values.size(), grid.size());
    // The reading cos^2(2 theta) is off; the deviation is measured, not hidden.
    EXPECT_GT(s.max_deviation, 1e-3);
    EXPECT_NEAR(concurrence_closed_form_theta(0.0, 1.0, 0.3, 1.0), 1.0, 1e-12);
}

TEST(Concurrence, NoClosedFormOffUnitCircle) {
    const ComparedSeries s = concurrence_series(CouplingParams::xx(1.0), Complex{0.5, 0.5}, {0.0, 1.0});
    EXPECT_FALSE(s.closed_form.has_value());
    EXPECT_EQ(s.max_deviation, 0.0);
}

TEST(Fidelity, ThetaZeroIsConstantOne) {
    const ComparedSeries f = fidelity_series(CouplingParams::xx(1.0), 1.0, uniform_time_grid(0.0, 4 * kPi, 0.01));
    EXPECT_LE(max_abs_diff(f.numeric.values, 1.0), 1e-12);
    EXPECT_LE(f.max_deviation, 1e-12);
}

TEST(Fidelity, PrintedFormDipsAtHalfPi) {
    EXPECT_NEAR(fidelity_closed_form(kPi / 4, 1.0, kPi / 2, 1.0), 0.0, 1e-12);
}

TEST(Fidelity, OracleValues) {
    // Spectral evolution gives 1 - sin^2(2 theta) sin^2(J t / 2 hbar).
    const double j = 0.9;
    const double hbar = 1.2;
    const CouplingParams xx = CouplingParams::xx(j, hbar);
    for (double theta : {kPi / 8, kPi / 4, 3 * kPi / 8}) {
        const std::vector<double> grid = uniform_time_grid(0.0, 4 * kPi * hbar / j, 0.1);
        const ComparedSeries f = fidelity_series(xx, unit(theta), grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double s = std::sin(j * grid[i] / (2 * hbar));
            EXPECT_NEAR(f.numeric.values[i], 1.0 - std::pow(std::sin(2 * theta), 2) * s * s, 1e-12);
        }
    }
}

TEST(Fidelity, ReturnsToOneAtTwoPi) {
    for (double theta : {0.0, kPi / 8, kPi / 4, 3 * kPi / 8}) {
        const ComparedSeries f = fidelity_series(CouplingParams::xx(2.0), unit(theta), {2 * kPi / 2.0});
        EXPECT_GE(f.numeric.values[0], 1.0 - 1e-9);
    }
}

TEST(Revival, QuarterPiRevivesAtTwoPi) {
    const RevivalResult r = revival_time(CouplingParams::xx(1.0), unit(kPi / 4));
    ASSERT_EQ(r.status, RevivalStatus::Found);
    EXPECT_NEAR(r.time, 2 * kPi, 1e-8);
    const ComparedSeries f = fidelity_series(CouplingParams::xx(1.0), unit(kPi / 4), {kPi, r.time});
    EXPECT_GE(f.numeric.values[1], 1.0 - 1e-9);
    // pi hbar / J is where the printed expression returns to one; the evolved state does not.
    EXPECT_LT(f.numeric.values[0], 0.5);
}

TEST(Revival, ScalesWithCoupling) {
    const RevivalResult r = revival_time(CouplingParams::xx(2.0, 0.5), unit(kPi / 8));
    ASSERT_EQ(r.status, RevivalStatus::Found);
    EXPECT_NEAR(r.time, 2 * kPi * 0.5 / 2.0, 1e-8);
}

TEST(Revival, ThetaZeroAlwaysOne) {
    EXPECT_EQ(revival_time(CouplingParams::xx(1.0), 1.0).status, RevivalStatus::AlwaysOne);
}

TEST(Revival, IncommensurateSpectrumGivesNoRevival) {
    const RevivalResult r = revival_time(CouplingParams::xyz(1.0, std::sqrt(2.0), std::sqrt(5.0) - 1.0),
                                         Complex{0.3, 0.8});
    EXPECT_EQ(r.status, RevivalStatus::NoRevival);
}
