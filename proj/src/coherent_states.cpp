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
#include "qcs/coherent_states.hpp"

#include <cmath>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

int qubit_count(Eigen::Index dim) {
    switch (dim) {
    case 2:
        return 1;
    case 4:
        return 2;
    case 8:
        return 3;
    default:
        throw DimensionMismatch("PureState: amplitude vector length must be 2, 4 or 8");
    }
}

// sqrt(1 + |z|^2) without overflow.
double coherent_norm(Complex z) { return std::hypot(1.0, std::abs(z)); }

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

Complex ipow(Complex z, int k) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < k; ++i) {
        r *= z;
    }
    return r;
}

} // namespace

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    n_qubits_ = qubit_count(amplitudes_.size());
    const double norm2 = amplitudes_.squaredNorm();
    if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
        throw InvariantViolation("PureState: amplitudes are not normalized");
    }
}

PureState PureState::normalized(CVector amplitudes) {
    const double n = amplitudes.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvariantViolation("PureState::normalized: zero or non-finite vector");
    }
    return PureState(amplitudes / n);
}

PureState PureState::basis(int n_qubits, Eigen::Index index) {
    if (n_qubits < 1 || n_qubits > 3) {
        throw DimensionMismatch("PureState::basis: n_qubits must be 1, 2 or 3");
    }
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (index < 0 || index >= dim) {
        throw DimensionMismatch("PureState::basis: index out of range");
    }
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return PureState(v);
}

PureState PureState::tensor(const PureState &right) const {
    if (n_qubits_ + right.n_qubits_ > 3) {
        throw DimensionMismatch("PureState::tensor: more than three qubits");
    }
    return PureState::normalized(kron(amplitudes_, right.amplitudes_));
}

SpinJState::SpinJState(int twice_j, CVector amplitudes) : twice_j_(twice_j), amplitudes_(std::move(amplitudes)) {
    if (twice_j_ < 1) {
        throw BadParams("SpinJState: 2j must be a positive integer");
    }
    if (amplitudes_.size() != twice_j_ + 1) {
        throw DimensionMismatch("SpinJState: expected 2j + 1 amplitudes");
    }
    if (!(std::abs(amplitudes_.squaredNorm() - 1.0) <= 1e-12)) {
        throw InvariantViolation("SpinJState: amplitudes are not normalized");
    }
}

PureState coherent(const ComplexPoint &p) {
    CVector v(2);
    if (p.is_infinite()) {
        v << 0.0, 1.0;
        return PureState(v);
    }
    const Complex z = p.value();
    const double n = coherent_norm(z);
    v << 1.0 / n, z / n;
    return PureState::normalized(v);
}

PureState from_bloch(double theta, double phi) {
    CVector v(2);
    v << std::cos(0.5 * theta), std::sin(0.5 * theta) * std::polar(1.0, phi);
    return PureState::normalized(v);
}

PureState symmetric_state(const ComplexPoint &p, SymmetryKind kind) {
    switch (kind) {
    case SymmetryKind::Conjugate:
    case SymmetryKind::NegConjugate:
        return coherent(symmetric_point(p, kind));
    case SymmetryKind::UnitCircle:
    case SymmetryKind::Antipodal: {
        if (p.is_infinite()) {
            return PureState::basis(1, 0);
        }
        const Complex z = p.value();
        const double n = coherent_norm(z);
        const double sign = kind == SymmetryKind::UnitCircle ? 1.0 : -1.0;
        CVector v(2);
        v << sign * std::conj(z) / n, 1.0 / n;
        return PureState::normalized(v);
    }
    }
    throw BadParams("symmetric_state: unknown symmetry kind");
}

Complex overlap(const PureState &s1, const PureState &s2) {
    if (s1.dim() != s2.dim()) {
        throw DimensionMismatch("overlap: states have different qubit counts");
    }
    return s1.amplitudes().dot(s2.amplitudes());
}

double phase_insensitive_overlap(const PureState &s1, const PureState &s2) { return std::abs(overlap(s1, s2)); }

std::pair<Complex, Complex> expand_in_antipodal_basis(const PureState &phi, const ComplexPoint &p) {
    if (phi.n_qubits() != 1) {
        throw DimensionMismatch("expand_in_antipodal_basis: one-qubit state required");
    }
    const Complex c1 = phi[0];
    const Complex c2 = phi[1];
    if (p.is_infinite()) {
        // |psi> -> |1>, |-psi*> -> |0>
        return {c2, c1};
    }
    const Complex z = p.value();
    const double n = coherent_norm(z);
    return {(c1 + c2 * std::conj(z)) / n, (-z * c1 + c2) / n};
}

SpinJState spin_j_coherent(int twice_j, const ComplexPoint &p) {
    if (twice_j < 1) {
        throw BadParams("spin_j_coherent: 2j must be a positive integer");
    }
    CVector v = CVector::Zero(twice_j + 1);
    if (p.is_infinite()) {
        v(twice_j) = 1.0;
        return {twice_j, v};
    }
    const Complex z = p.value();
    const double n = coherent_norm(z);
    // (1+|z|^2)^{-j} z^k = n^{-(2j-k)} (z/n)^k
    const Complex zn = z / n;
    for (int k = 0; k <= twice_j; ++k) {
        v(k) = std::sqrt(binomial(twice_j, k)) * std::pow(1.0 / n, twice_j - k) * ipow(zn, k);
    }
    return {twice_j, v / v.norm()};
}

Complex spin_j_overlap(const SpinJState &s1, const SpinJState &s2) {
    if (s1.twice_j() != s2.twice_j()) {
        throw DimensionMismatch("spin_j_overlap: states carry different j");
    }
    return s1.amplitudes().dot(s2.amplitudes());
}

Complex spin_j_overlap_closed_form(int twice_j, const ComplexPoint &phi, const ComplexPoint &psi) {
    const Complex a = phi.value();
    const Complex b = psi.value();
    const Complex base = (1.0 + std::conj(a) * b) / (coherent_norm(a) * coherent_norm(b));
    return ipow(base, twice_j);
}

} // namespace qcs
