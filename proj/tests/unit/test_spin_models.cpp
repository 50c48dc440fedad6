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
#include "qcs/errors.hpp"
#include "qcs/spin_models.hpp"

using namespace qcs;

namespace {

int count_kind(const std::vector<Extremum> &xs, ExtremumKind kind) {
    int n = 0;
    for (const Extremum &e : xs) {
        n += e.kind == kind ? 1 : 0;
    }
    return n;
}

} // namespace

TEST(Couplings, FactoriesAndValidation) {
    const CouplingParams p = CouplingParams::xyz_pm(1.0, 1.5, -4.0);
    EXPECT_DOUBLE_EQ(p.jx, 2.5);
    EXPECT_DOUBLE_EQ(p.jy, -0.5);
    const CouplingParams z = CouplingParams::xxz_delta(2.0, -0.5);
    EXPECT_DOUBLE_EQ(z.jz, -1.0);
    EXPECT_THROW((void)CouplingParams::xxz(0.0, 1.0), BadParams);
    EXPECT_THROW((void)CouplingParams::xxx(1.0, 0.0), BadParams);
    EXPECT_THROW((void)CouplingParams::xyz(NAN, 0.0, 0.0), BadParams);
}

TEST(Hamiltonian, ZeroCouplingsGiveZeroMatrix) {
    const HermitianOperator h = hamiltonian(CouplingParams::xyz(0.0, 0.0, 0.0), 3);
    EXPECT_EQ(h.matrix().rows(), 8);
    EXPECT_EQ(h.matrix().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Hamiltonian, Hermitian) {
    for (const CouplingParams &c : {CouplingParams::xxx(0.7, 1.3), CouplingParams::xxz(1.0, -2.0),
                                    CouplingParams::xyz(0.3, -1.1, 2.0)}) {
        for (int n : {2, 3}) {
            EXPECT_LE(hermiticity_defect(hamiltonian(c, n).matrix()), 1e-14);
        }
    }
    EXPECT_THROW((void)hamiltonian(CouplingParams::xxx(1.0), 4), BadParams);
}

TEST(Hamiltonian, AllPairsScalesSymmetricStatesByHalf) {
    const CouplingParams chain = CouplingParams::xyz(0.4, -0.9, 1.2);
    const CouplingParams all = chain.with_bonds(Bonds::AllPairs);
    const ComplexPoint p{0.3, 0.5};
    EXPECT_NEAR(q_symbol_direct(all, StateId::PGPlus, p), 1.5 * q_symbol_direct(chain, StateId::PGPlus, p), 1e-12);
}

TEST(QSymbol, DirectExamples) {
    const CouplingParams xxx = CouplingParams::xxx(2.0, 0.5);
    for (const Complex z : {Complex{0, 0}, Complex{1, -1}, Complex{-2.5, 0.3}}) {
        EXPECT_NEAR(q_symbol_direct(xxx, StateId::PPlus, z), -2.0 * 0.25 / 2.0, 1e-12);
    }
    const CouplingParams xyz = CouplingParams::xyz_pm(1.0, 1.5, -4.0);
    EXPECT_NEAR(q_symbol_direct(xyz, StateId::PPlus, 0.0), -0.5, 1e-12);
    for (const Complex z : {Complex{0, 0}, Complex{0.4, 2}, Complex{-3, -1}}) {
        EXPECT_NEAR(q_symbol_direct(xyz, StateId::GMinus, z), -(-4.0 / 2 + 1.0), 1e-12);
    }
}

TEST(QSymbol, ClosedExamples) {
    const ClosedFormValue xxz = q_symbol_closed(CouplingParams::xxz(1.0, -2.0), StateId::PPlus, 0.0);
    EXPECT_NEAR(xxz.value, 2.0, 1e-12);
    EXPECT_NEAR(xxz.direct, -1.0, 1e-12);
    EXPECT_NEAR(xxz_p_plus_closed_xy(CouplingParams::xxz(1.0, -2.0), 0.0, 0.0), 2.0, 1e-12);

    EXPECT_NEAR(q_symbol_closed(CouplingParams::xyz_pm(-1.0, -0.2, 0.5), StateId::PGMinus, 0.0).value, -1.5, 1e-12);
    EXPECT_NEAR(q_symbol_closed(CouplingParams::xyz_pm(1.0, 0.0, 0.0), StateId::GPlus, std::polar(1.0, kPi / 4)).value,
                0.0, 1e-12);
}

TEST(QSymbol, ClosedMatchesDirectForXyz) {
    const CouplingParams c = CouplingParams::xyz_pm(0.6, -1.3, 0.8);
    for (StateId id : {StateId::PPlus, StateId::PMinus, StateId::GPlus, StateId::GMinus, StateId::PGPlus,
                       StateId::PGMinus}) {
        for (double x = -2.0; x <= 2.0; x += 0.4) {
            for (double y = -2.0; y <= 2.0; y += 0.4) {
                EXPECT_LE(std::abs(q_symbol_closed(c, id, Complex{x, y}).closed_minus_direct()), 1e-10)
                    << to_string(id) << " at " << x << "," << y;
            }
        }
    }
}

TEST(QSymbol, FormulaUnavailable) {
    EXPECT_FALSE(has_closed_form(Model::XXZ, StateId::GPlus));
    EXPECT_THROW((void)q_symbol_closed(CouplingParams::xxz(1.0, 2.0), StateId::GPlus, 0.0), FormulaUnavailable);
    EXPECT_THROW(QSymbolEvaluator(CouplingParams::xxx(1.0), StateId::PGPlus, QSource::Closed), FormulaUnavailable);
}

TEST(QSymbol, BoundedBySpectrum) {
    const CouplingParams c = CouplingParams::xyz(1.2, -0.4, 0.7);
    const Eigen::VectorXd ev = hamiltonian(c, 3).eigenvalues();
    for (double x = -3.0; x <= 3.0; x += 0.5) {
        const double q = q_symbol_direct(c, StateId::PGMinus, Complex{x, 0.5 * x});
        EXPECT_GE(q, ev.minCoeff() - 1e-12);
        EXPECT_LE(q, ev.maxCoeff() + 1e-12);
    }
}

TEST(Surface, XxxIsConstant) {
    const SurfaceGrid g = energy_surface(CouplingParams::xxx(1.0), StateId::PPlus);
    EXPECT_TRUE(g.constant);
    EXPECT_TRUE(g.extrema.empty());
    EXPECT_EQ(g.nx(), 121);
    EXPECT_EQ(g.ny(), 121);
}

TEST(Surface, XxzPrintedFormHasTwoMirrorMinima) {
    SurfaceOptions opt;
    opt.source = QSource::Closed;
    const SurfaceGrid g = energy_surface(CouplingParams::xxz(1.0, -2.0), StateId::PPlus, opt);
    ASSERT_EQ(g.extrema.size(), 2u);
    EXPECT_EQ(count_kind(g.extrema, ExtremumKind::Min), 2);
    EXPECT_NEAR(g.extrema[0].y, -g.extrema[1].y, 1e-6);
    EXPECT_NEAR(g.extrema[0].x, g.extrema[1].x, 1e-6);
    ASSERT_TRUE(g.closed_minus_direct.has_value());
}

TEST(Surface, PgPlusHasTwoMinimaTwoMaxima) {
    const CouplingParams c = CouplingParams::xyz_pm(-1.0, -1.0, -1.0);
    const SurfaceGrid g = energy_surface(c, StateId::PGPlus);
    ASSERT_EQ(g.extrema.size(), 4u);
    EXPECT_EQ(count_kind(g.extrema, ExtremumKind::Min), 2);
    EXPECT_EQ(count_kind(g.extrema, ExtremumKind::Max), 2);
    const QSymbolEvaluator f(c, StateId::PGPlus, QSource::Direct);
    for (const Extremum &e : g.extrema) {
        EXPECT_LT(q_symbol_gradient_norm(f, e.x, e.y), 1e-6);
    }
}

TEST(Surface, IndependentOfThreadCount) {
    const CouplingParams c = CouplingParams::xyz_pm(-1.5, -1.5, 1.5);
    SurfaceOptions one;
    one.threads = 1;
    SurfaceOptions four;
    four.threads = 4;
    const SurfaceGrid a = energy_surface(c, StateId::GPlus, one);
    const SurfaceGrid b = energy_surface(c, StateId::GPlus, four);
    EXPECT_EQ(a.values, b.values);
    ASSERT_EQ(a.extrema.size(), b.extrema.size());
    for (std::size_t i = 0; i < a.extrema.size(); ++i) {
        EXPECT_EQ(a.extrema[i].x, b.extrema[i].x);
        EXPECT_EQ(a.extrema[i].value, b.extrema[i].value);
    }
}

TEST(Surface, BadWindowRejected) {
    SurfaceOptions opt;
    opt.step = 0.0;
    EXPECT_THROW((void)energy_surface(CouplingParams::xxx(1.0), StateId::PPlus, opt), BadParams);
}

TEST(Refine, ConstantSeedReturnedUnchanged) {
    const RefinedExtremum r = refine_extremum(CouplingParams::xxx(1.0), StateId::PPlus, {0.4, -0.2}, QSource::Direct);
    EXPECT_EQ(r.kind, ExtremumKind::Constant);
    EXPECT_DOUBLE_EQ(r.x, 0.4);
    EXPECT_DOUBLE_EQ(r.y, -0.2);
    EXPECT_NEAR(r.value, -0.5, 1e-12);
}

TEST(Refine, ConvergesToKnownMinimum) {
    const RefinedExtremum r = refine_extremum(CouplingParams::xyz_pm(-1.0, -1.0, -1.0), StateId::PGPlus, {0.9, 0.1},
                                              QSource::Direct);
    EXPECT_EQ(r.kind, ExtremumKind::Min);
    EXPECT_NEAR(r.x, 1.0, 1e-5);
    EXPECT_NEAR(r.y, 0.0, 1e-5);
    EXPECT_NEAR(r.value, -2.0, 1e-10);
}
