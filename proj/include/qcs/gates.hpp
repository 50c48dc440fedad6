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
#pragma once

#include <utility>

#include "qcs/coherent_states.hpp"
#include "qcs/complex_geometry.hpp"
#include "qcs/linalg.hpp"

namespace qcs {

/// Dense unitary on 1, 2 or 3 qubits.
class UnitaryGate {
  public:
    static constexpr double kUnitarityTolerance = 1e-12;

    /// Throws DimensionMismatch unless the matrix is square of size 2, 4
    /// or 8, and InvariantViolation when U^dagger U deviates from I.
    explicit UnitaryGate(CMatrix matrix);

    [[nodiscard]] Eigen::Index dim() const { return matrix_.rows(); }
    [[nodiscard]] const CMatrix &matrix() const { return matrix_; }
    [[nodiscard]] UnitaryGate adjoint() const { return UnitaryGate(matrix_.adjoint()); }

    [[nodiscard]] PureState apply(const PureState &s) const;

    /// Matrix product: (f * g) applies g first.
    friend UnitaryGate operator*(const UnitaryGate &f, const UnitaryGate &g) {
        return UnitaryGate(f.matrix_ * g.matrix_);
    }

  private:
    CMatrix matrix_;
};

UnitaryGate gate_identity(int n_qubits = 1);
UnitaryGate gate_not();
UnitaryGate gate_hadamard();
/// diag(1, e^{i theta})
UnitaryGate gate_phase(double theta);
/// Control on qubit 1 (leftmost), target on qubit 2.
UnitaryGate gate_cnot();

/// left (x) right, left acting on the most significant qubits.
UnitaryGate tensor(const UnitaryGate &left, const UnitaryGate &right);

/// U = (1/sqrt(1+|psi|^2)) [[1, -conj(psi)], [psi, 1]], so that U|0> is the
/// coherent state and U|1> its antipodal partner. Throws InfinitePoint for
/// the point at infinity; use gate_not() * coherent_generator(0) there.
UnitaryGate coherent_generator(const ComplexPoint &p);

/// U (x) U (two qubits) or U (x) U (x) U (three qubits).
UnitaryGate coherent_generator_product(const ComplexPoint &p, int n_qubits);

/// Label of a one-qubit state under the ratio convention
/// amplitude(|1>) / amplitude(|0>); infinity when amplitude(|0>) == 0.
ComplexPoint state_ratio(const PureState &s);

/// Moebius map induced on state_ratio labels by a one-qubit gate:
/// ratio(g|psi>) == induced_mobius(g)(psi).
MobiusMap induced_mobius(const UnitaryGate &g);

/// (|psi> + |-psi*>)/sqrt(2), (|psi> - |-psi*>)/sqrt(2).
std::pair<PureState, PureState> coherent_hadamard_basis(const ComplexPoint &p);

} // namespace qcs
