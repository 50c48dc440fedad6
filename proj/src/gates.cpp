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
#include "qcs/gates.hpp"

#include <cmath>

#include "qcs/errors.hpp"

namespace qcs {

UnitaryGate::UnitaryGate(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || (matrix_.rows() != 2 && matrix_.rows() != 4 && matrix_.rows() != 8)) {
        throw DimensionMismatch("UnitaryGate: matrix must be 2x2, 4x4 or 8x8");
    }
    if (!(unitarity_defect(matrix_) <= kUnitarityTolerance)) {
        throw InvariantViolation("UnitaryGate: matrix is not unitary");
    }
}

PureState UnitaryGate::apply(const PureState &s) const {
    if (s.dim() != dim()) {
        throw DimensionMismatch("UnitaryGate::apply: state and gate dimensions differ");
    }
    return PureState::normalized(matrix_ * s.amplitudes());
}

UnitaryGate gate_identity(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 3) {
        throw DimensionMismatch("gate_identity: n_qubits must be 1, 2 or 3");
    }
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    return UnitaryGate(CMatrix::Identity(dim, dim));
}

UnitaryGate gate_not() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return UnitaryGate(m);
}

UnitaryGate gate_hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(2, 2);
    m << s, s, s, -s;
    return UnitaryGate(m);
}

UnitaryGate gate_phase(double theta) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = std::polar(1.0, theta);
    return UnitaryGate(m);
}

UnitaryGate gate_cnot() {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return UnitaryGate(m);
}

UnitaryGate tensor(const UnitaryGate &left, const UnitaryGate &right) {
    return UnitaryGate(kron(left.matrix(), right.matrix()));
}

UnitaryGate coherent_generator(const ComplexPoint &p) {
    if (p.is_infinite()) {
        throw InfinitePoint("coherent_generator: point at infinity; compose gate_not() with coherent_generator(0)");
    }
    const Complex z = p.value();
    const double n = std::hypot(1.0, std::abs(z));
    CMatrix m(2, 2);
    m << 1.0 / n, -std::conj(z) / n, z / n, 1.0 / n;
    return UnitaryGate(m);
}

UnitaryGate coherent_generator_product(const ComplexPoint &p, int n_qubits) {
    const UnitaryGate u = coherent_generator(p);
    switch (n_qubits) {
    case 1:
        return u;
    case 2:
        return tensor(u, u);
    case 3:
        return tensor(tensor(u, u), u);
    default:
        throw DimensionMismatch("coherent_generator_product: n_qubits must be 1, 2 or 3");
    }
}

ComplexPoint state_ratio(const PureState &s) {
    if (s.n_qubits() != 1) {
        throw DimensionMismatch("state_ratio: one-qubit state required");
    }
    if (s[0] == Complex{0.0, 0.0}) {
        return ComplexPoint::infinity();
    }
    return ComplexPoint{s[1] / s[0]};
}

MobiusMap induced_mobius(const UnitaryGate &g) {
    if (g.dim() != 2) {
        throw DimensionMismatch("induced_mobius: one-qubit gate required");
    }
    // g (1, psi)^T = (g00 + g01 psi, g10 + g11 psi)^T
    const CMatrix &m = g.matrix();
    return {m(1, 1), m(1, 0), m(0, 1), m(0, 0)};
}

std::pair<PureState, PureState> coherent_hadamard_basis(const ComplexPoint &p) {
    const CVector a = coherent(p).amplitudes();
    const CVector b = symmetric_state(p, SymmetryKind::Antipodal).amplitudes();
    const double s = 1.0 / std::sqrt(2.0);
    return {PureState::normalized(s * (a + b)), PureState::normalized(s * (a - b))};
}

} // namespace qcs
