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
#include "qcs/gates.hpp"

using namespace qcs;

namespace {

CMatrix columns(std::initializer_list<const PureState *> states) {
    CMatrix m(static_cast<Eigen::Index>((*states.begin())->dim()), static_cast<Eigen::Index>(states.size()));
    Eigen::Index k = 0;
    for (const PureState *s : states) {
        m.col(k++) = s->amplitudes();
    }
    return m;
}

} // namespace

TEST(StateId, ParseAndPrint) {
    for (StateId id : {StateId::PPlus, StateId::PMinus, StateId::GPlus, StateId::GMinus, StateId::PGPlus,
                       StateId::PGMinus}) {
        EXPECT_EQ(parse_state_id(to_string(id)), id);
    }
    EXPECT_FALSE(parse_state_id("Q+").has_value());
    EXPECT_EQ(qubit_count(StateId::PGMinus), 3);
    EXPECT_EQ(qubit_count(StateId::GPlus), 2);
}

TEST(ProductStates, OriginIsComputationalBasis) {
    EXPECT_NEAR(std::abs(product_state(0.0, 0.0)[0]), 1.0, 1e-15);
    const auto basis = coherent_basis_2q(0.0);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(basis[k][k]), 1.0, 1e-15);
    }
}

TEST(BellStates, Standard) {
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = bell_states();
    EXPECT_NEAR(bell[0][0].real(), r, 1e-15);
    EXPECT_NEAR(bell[0][3].real(), r, 1e-15);
    EXPECT_NEAR(bell[1][1].real(), r, 1e-15);
    EXPECT_NEAR(bell[1][2].real(), r, 1e-15);
    EXPECT_NEAR(bell[2][3].real(), -r, 1e-15);
    EXPECT_NEAR(bell[3][2].real(), -r, 1e-15);
}

TEST(EntangledBasis2, BellLimit) {
    const auto bell = bell_states();
    const EntangledBasis2 b = entangled_basis_2q(0.0);
    EXPECT_GE(phase_insensitive_overlap(b.p_plus, bell[0]), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(b.g_plus, bell[1]), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(b.p_minus, bell[2]), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(b.g_minus, bell[3]), 1.0 - 1e-12);
}

TEST(EntangledBasis2, GMinusIsSingletForAnyPoint) {
    const auto bell = bell_states();
    for (const Complex z : {Complex{0.3, 0.7}, Complex{-2, 1}, Complex{5, 0}}) {
        EXPECT_GE(phase_insensitive_overlap(entangled_basis_2q(z).g_minus, bell[3]), 1.0 - 1e-12);
    }
}

TEST(EntangledBasis2, OrthonormalOnGrid) {
    for (double x = -4.0; x <= 4.0; x += 0.5) {
        for (double y = -4.0; y <= 4.0; y += 0.5) {
            const EntangledBasis2 b = entangled_basis_2q(Complex{x, y});
            EXPECT_LE(unitarity_defect(columns({&b.p_plus, &b.p_minus, &b.g_plus, &b.g_minus})), 1e-12);
        }
    }
}

TEST(EntangledBasis2, GeneratedFromBellByLocalUnitary) {
    const ComplexPoint p{-0.6, 1.9};
    const UnitaryGate uu = coherent_generator_product(p, 2);
    const auto bell = bell_states();
    const EntangledBasis2 b = entangled_basis_2q(p);
    EXPECT_GE(phase_insensitive_overlap(uu.apply(bell[0]), b.p_plus), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(uu.apply(bell[2]), b.p_minus), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(uu.apply(bell[1]), b.g_plus), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(uu.apply(bell[3]), b.g_minus), 1.0 - 1e-12);
}

TEST(EntangledBasis2, InfinityRejected) {
    EXPECT_THROW((void)entangled_basis_2q(ComplexPoint::infinity()), InfinitePoint);
}

TEST(EntangledBasis3, GhzAndWLimits) {
    const EntangledBasis3 b = entangled_basis_3q(0.0);
    CVector ghz = CVector::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    CVector w = CVector::Zero(8);
    w(1) = w(2) = w(4) = 1.0 / std::sqrt(3.0);
    EXPECT_GE(phase_insensitive_overlap(b.pg_plus, PureState(ghz)), 1.0 - 1e-12);
    EXPECT_GE(phase_insensitive_overlap(b.pg_minus, PureState(w)), 1.0 - 1e-12);
}

TEST(EntangledBasis3, NormalizedAwayFromOrigin) {
    for (const Complex z : {Complex{0.5, 0.5}, Complex{-3, 0.1}, Complex{0, 2}}) {
        const EntangledBasis3 b = entangled_basis_3q(z);
        EXPECT_NEAR(b.pg_plus.amplitudes().norm(), 1.0, 1e-12);
        EXPECT_NEAR(b.pg_minus.amplitudes().norm(), 1.0, 1e-12);
    }
}

TEST(Expansion, Examples) {
    const ComplexPoint p{0.4, -0.3};
    const BellExpansion e = expand_in_entangled_basis(entangled_basis_2q(p).p_plus, p);
    EXPECT_NEAR(std::abs(e.b_plus), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(e.b_minus) + std::abs(e.c_plus) + std::abs(e.c_minus), 0.0, 1e-12);

    const BellExpansion z = expand_in_entangled_basis(PureState::basis(2, 0), 0.0);
    EXPECT_NEAR(std::abs(z.b_plus), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(z.b_minus), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(z.c_plus) + std::abs(z.c_minus), 0.0, 1e-12);
}

TEST(Expansion, RoundTrip) {
    const PureState phi = PureState::normalized(CVector{{Complex{1, 2}, Complex{-0.5, 0}, Complex{0, 3}, Complex{1, 1}}});
    const ComplexPoint p{2.2, -0.7};
    const BellExpansion e = expand_in_entangled_basis(phi, p);
    EXPECT_NEAR(e.norm2(), 1.0, 1e-12);
    EXPECT_LE((reconstruct_from_expansion(e, p).amplitudes() - phi.amplitudes()).norm(), 1e-12);
}
