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

#include "qcs/complex_geometry.hpp"
#include "qcs/linalg.hpp"

namespace qcs {

/**
 * Normalized pure state of 1, 2 or 3 qubits.
 *
 * Amplitudes are indexed |q1 q2 ... qn> with qubit 1 the most significant
 * bit, so the rightmost qubit varies fastest. The global phase is whatever
 * the constructing formula produces; compare states with
 * `phase_insensitive_overlap`.
 */
class PureState {
  public:
    static constexpr double kNormTolerance = 1e-12;

    /// Validates length 2^n (n in 1..3) and unit norm within kNormTolerance.
    explicit PureState(CVector amplitudes);

    /// Rescales to unit norm first; throws InvariantViolation on a zero vector.
    static PureState normalized(CVector amplitudes);

    static PureState basis(int n_qubits, Eigen::Index index);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] Eigen::Index dim() const { return amplitudes_.size(); }
    [[nodiscard]] const CVector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

    /// Tensor product; this state is the leftmost factor.
    [[nodiscard]] PureState tensor(const PureState &right) const;

  private:
    CVector amplitudes_;
    int n_qubits_ = 0;
};

/// Spin-j state over |j, m>, m = -j..j (index 0 is m = -j).
class SpinJState {
  public:
    SpinJState(int twice_j, CVector amplitudes);

    [[nodiscard]] int twice_j() const { return twice_j_; }
    [[nodiscard]] double j() const { return 0.5 * twice_j_; }
    [[nodiscard]] const CVector &amplitudes() const { return amplitudes_; }

  private:
    int twice_j_;
    CVector amplitudes_;
};

/// (|0> + psi|1>)/sqrt(1+|psi|^2); the point at infinity gives |1>.
PureState coherent(const ComplexPoint &p);

/// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
PureState from_bloch(double theta, double phi);

/**
 * Coherent state at the symmetric point of `p`.
 *
 * UnitCircle and Antipodal use fixed-phase forms
 * (conj(psi), 1)/sqrt(1+|psi|^2) and (-conj(psi), 1)/sqrt(1+|psi|^2), which
 * stay well defined at psi = 0. The antipodal state is orthogonal to
 * coherent(p).
 */
PureState symmetric_state(const ComplexPoint &p, SymmetryKind kind);

/// <s1|s2>, conjugate-linear in the first argument.
Complex overlap(const PureState &s1, const PureState &s2);

/// |<s1|s2>|; equals 1 iff the states agree up to global phase.
double phase_insensitive_overlap(const PureState &s1, const PureState &s2);

/// Coefficients of phi = e1 |psi> + e2 |-psi*> in the orthonormal antipodal basis.
std::pair<Complex, Complex> expand_in_antipodal_basis(const PureState &phi, const ComplexPoint &p);

/// Spin-j coherent state; twice_j = 2j >= 1.
SpinJState spin_j_coherent(int twice_j, const ComplexPoint &p);

/// Direct summation of <s1|s2>.
Complex spin_j_overlap(const SpinJState &s1, const SpinJState &s2);

/// (1 + conj(phi) psi)^{2j} / ((1+|phi|^2)^j (1+|psi|^2)^j) for finite points.
Complex spin_j_overlap_closed_form(int twice_j, const ComplexPoint &phi, const ComplexPoint &psi);

} // namespace qcs
