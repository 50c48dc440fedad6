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

#include <vector>

#include "qcs/coherent_states.hpp"
#include "qcs/entangled_basis.hpp"
#include "qcs/linalg.hpp"

namespace qcs {

/// Hermitian, unit-trace, positive semidefinite matrix over 1..3 qubits.
class DensityMatrix {
  public:
    /// Checks hermiticity and trace within 1e-12 and eigenvalues >= -1e-10.
    explicit DensityMatrix(CMatrix rho);

    [[nodiscard]] const CMatrix &matrix() const { return rho_; }
    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] double trace() const { return rho_.trace().real(); }
    /// tr(rho^2)
    [[nodiscard]] double purity() const;

  private:
    CMatrix rho_;
    int n_qubits_;
};

DensityMatrix density(const PureState &phi);

/// Reduces onto the qubits in `keep` (0 = leftmost); the kept qubits retain
/// their relative order. Throws BadSubsystem unless `keep` is a nonempty
/// proper subset of distinct valid indices.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep);

/// 2 |t00 t11 - t01 t10|
double concurrence_det(const PureState &phi);

/// sqrt(2 (1 - tr rho_B^2)) with rho_B the reduction onto qubit 0.
double concurrence_rdm(const PureState &phi);

/// |b+^2 - b-^2 - c+^2 + c-^2| with complex squares.
double concurrence_from_expansion(const BellExpansion &e);

struct SpinAverages {
    double sz_plus;        ///< <Sz (x) I + I (x) Sz>
    double sz_minus;       ///< <Sz (x) I - I (x) Sz>
    Complex raise_plus;    ///< <S+ (x) I + I (x) S+>
    Complex raise_minus;   ///< <S+ (x) I - I (x) S+>

    [[nodiscard]] double max_abs() const;
};

SpinAverages spin_sum_averages(const PureState &phi, double hbar = 1.0);

} // namespace qcs
