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

#include "qcs/errors.hpp"
#include "qcs/gates.hpp"

using namespace qcs;

namespace {

double gate_distance(const UnitaryGate &g, const CMatrix &want) { return (g.matrix() - want).cwiseAbs().maxCoeff(); }

} // namespace

TEST(Gates, Unitary) {
    for (const UnitaryGate &g : {gate_not(), gate_hadamard(), gate_phase(1.3), gate_cnot(), gate_identity(3)}) {
        EXPECT_LE(unitarity_defect(g.matrix()), 1e-12);
    }
    EXPECT_THROW(UnitaryGate(CMatrix::Ones(2, 2)), InvariantViolation);
    EXPECT_THROW(UnitaryGate(CMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST(Gates, ActionOnBasisStates) {
    EXPECT_NEAR(std::abs(gate_not().apply(PureState::basis(1, 0))[1]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(gate_cnot().apply(PureState::basis(2, 2))[3]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(gate_cnot().apply(PureState::basis(2, 1))[1]), 1.0, 1e-15);
    EXPECT_THROW((void)gate_cnot().apply(PureState::basis(1, 0)), DimensionMismatch);
}

TEST(Gates, CoherentGenerator) {
    EXPECT_LE(gate_distance(coherent_generator(0.0), CMatrix::Identity(2, 2)), 1e-15);
    CMatrix want(2, 2);
    want << 1.0, -1.0, 1.0, 1.0;
    want /= std::sqrt(2.0);
    EXPECT_LE(gate_distance(coherent_generator(1.0), want), 1e-15);
    EXPECT_THROW((void)coherent_generator(ComplexPoint::infinity()), InfinitePoint);
}

TEST(Gates, CoherentGeneratorMapsBasisToAntipodalPair) {
    const ComplexPoint p{0.8, -0.4};
    const UnitaryGate u = coherent_generator(p);
    EXPECT_NEAR(phase_insensitive_overlap(u.apply(PureState::basis(1, 0)), coherent(p)), 1.0, 1e-12);
    EXPECT_NEAR(
        phase_insensitive_overlap(u.apply(PureState::basis(1, 1)), symmetric_state(p, SymmetryKind::Antipodal)),
        1.0, 1e-12);
}

TEST(InducedMobius, PrintedMaps) {
    const ComplexPoint p{0.3, 1.1};
    const Complex z = p.value();
    EXPECT_TRUE(induced_mobius(gate_not())(p).approx_equal(1.0 / z, 1e-12));
    EXPECT_TRUE(induced_mobius(gate_hadamard())(p).approx_equal((1.0 - z) / (1.0 + z), 1e-12));
    EXPECT_TRUE(induced_mobius(gate_phase(0.7))(p).approx_equal(std::polar(1.0, 0.7) * z, 1e-12));
    EXPECT_THROW((void)induced_mobius(gate_cnot()), DimensionMismatch);
}

TEST(InducedMobius, CommutesWithStateRatio) {
    const UnitaryGate g = coherent_generator(Complex{-0.2, 0.5}) * gate_hadamard() * gate_phase(0.4);
    const MobiusMap m = induced_mobius(g);
    for (const Complex z : {Complex{0, 0}, Complex{1.5, -0.5}, Complex{-3, 2}}) {
        const ComplexPoint lhs = state_ratio(g.apply(coherent(z)));
        EXPECT_TRUE(lhs.approx_equal(m(z), 1e-10 * (1.0 + std::abs(m(z).value()))));
    }
}

TEST(StateRatio, ZeroFirstAmplitudeIsInfinity) {
    EXPECT_TRUE(state_ratio(PureState::basis(1, 1)).is_infinite());
}

TEST(CoherentHadamardBasis, OriginGivesPlusMinus) {
    const auto [a, b] = coherent_hadamard_basis(0.0);
    EXPECT_NEAR(phase_insensitive_overlap(a, coherent(1.0)), 1.0, 1e-12);
    EXPECT_NEAR(phase_insensitive_overlap(b, coherent(-1.0)), 1.0, 1e-12);
}

TEST(CoherentHadamardBasis, OrthonormalAndGeneratedFromPlusMinus) {
    const ComplexPoint p{0.9, 0.2};
    const auto [a, b] = coherent_hadamard_basis(p);
    EXPECT_LE(std::abs(overlap(a, b)), 1e-12);
    const UnitaryGate u = coherent_generator(p);
    EXPECT_NEAR(std::abs(overlap(u.apply(coherent(1.0)), a)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(overlap(u.apply(coherent(-1.0)), b)), 1.0, 1e-12);
}

TEST(Tensor, KroneckerOrder) {
    const UnitaryGate xi = tensor(gate_not(), gate_identity(1));
    EXPECT_NEAR(std::abs(xi.apply(PureState::basis(2, 0))[2]), 1.0, 1e-15);
}
