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

#include "qcs/linalg.hpp"

// Single-site spin operators in the hbar convention
//   S+|1> = hbar|0>, S-|0> = hbar|1>, Sz|0> = +hbar/2 |0>,
// and bare Pauli matrices.
namespace qcs::spin {

inline CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

inline CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

inline CMatrix s_z(double hbar) { return 0.5 * hbar * pauli_z(); }

inline CMatrix s_raise(double hbar) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = hbar;
    return m;
}

inline CMatrix s_lower(double hbar) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(1, 0) = hbar;
    return m;
}

/// `op` acting on qubit `site` (0 = leftmost) of an n-qubit register.
inline CMatrix embed(const CMatrix &op, int site, int n_qubits) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < n_qubits; ++q) {
        out = kron(out, q == site ? op : CMatrix::Identity(2, 2));
    }
    return out;
}

/// a on `i`, b on `j`.
inline CMatrix bond(const CMatrix &a, int i, const CMatrix &b, int j, int n_qubits) {
    return embed(a, i, n_qubits) * embed(b, j, n_qubits);
}

} // namespace qcs::spin
