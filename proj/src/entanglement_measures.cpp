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
#include "qcs/entanglement_measures.hpp"

#include <algorithm>
#include <cmath>

#include "qcs/errors.hpp"
#include "qcs/spin_operators.hpp"

namespace qcs {

namespace {

int bit_of(Eigen::Index index, int qubit, int n_qubits) { return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1); }

} // namespace

DensityMatrix::DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {
    const Eigen::Index dim = rho_.rows();
    if (rho_.cols() != dim || (dim != 2 && dim != 4 && dim != 8)) {
        throw DimensionMismatch("DensityMatrix: matrix must be 2x2, 4x4 or 8x8");
    }
    n_qubits_ = dim == 2 ? 1 : (dim == 4 ? 2 : 3);
    if (!(hermiticity_defect(rho_) <= 1e-12)) {
        throw InvariantViolation("DensityMatrix: not Hermitian");
    }
    if (!(std::abs(rho_.trace() - Complex{1.0, 0.0}) <= 1e-12)) {
        throw InvariantViolation("DensityMatrix: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho_, Eigen::EigenvaluesOnly);
    if (!(eig.eigenvalues().minCoeff() >= -1e-10)) {
        throw InvariantViolation("DensityMatrix: negative eigenvalue");
    }
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

DensityMatrix density(const PureState &phi) {
    const CVector &v = phi.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep) {
    const int n = rho.n_qubits();
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    const bool has_duplicates = std::adjacent_find(kept.begin(), kept.end()) != kept.end();
    if (kept.empty() || static_cast<int>(kept.size()) >= n || has_duplicates || kept.front() < 0 ||
        kept.back() >= n) {
        throw BadSubsystem("partial_trace: keep must be a nonempty proper subset of qubit indices");
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    const int m = static_cast<int>(kept.size());
    auto reduced_index = [&](Eigen::Index full) {
        Eigen::Index r = 0;
        for (int q : kept) {
            r = (r << 1) | bit_of(full, q, n);
        }
        return r;
    };

    const Eigen::Index dim = rho.matrix().rows();
    CMatrix out = CMatrix::Zero(Eigen::Index{1} << m, Eigen::Index{1} << m);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            bool same_environment = true;
            for (int q : traced) {
                if (bit_of(i, q, n) != bit_of(j, q, n)) {
                    same_environment = false;
                    break;
                }
            }
            if (same_environment) {
                out(reduced_index(i), reduced_index(j)) += rho.matrix()(i, j);
            }
        }
    }
    return DensityMatrix(out);
}

double concurrence_det(const PureState &phi) {
    if (phi.n_qubits() != 2) {
        throw DimensionMismatch("concurrence_det: two-qubit state required");
    }
    return 2.0 * std::abs(phi[0] * phi[3] - phi[1] * phi[2]);
}

double concurrence_rdm(const PureState &phi) {
    if (phi.n_qubits() != 2) {
        throw DimensionMismatch("concurrence_rdm: two-qubit state required");
    }
    const double purity = partial_trace(density(phi), {0}).purity();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double concurrence_from_expansion(const BellExpansion &e) {
    auto sq = [](Complex z) { return z * z; };
    return std::abs(sq(e.b_plus) - sq(e.b_minus) - sq(e.c_plus) + sq(e.c_minus));
}

double SpinAverages::max_abs() const {
    return std::max({std::abs(sz_plus), std::abs(sz_minus), std::abs(raise_plus), std::abs(raise_minus)});
}

SpinAverages spin_sum_averages(const PureState &phi, double hbar) {
    if (phi.n_qubits() != 2) {
        throw DimensionMismatch("spin_sum_averages: two-qubit state required");
    }
    const CVector &v = phi.amplitudes();
    auto expect = [&](const CMatrix &op) { return v.dot(op * v); };
    const CMatrix z1 = spin::embed(spin::s_z(hbar), 0, 2);
    const CMatrix z2 = spin::embed(spin::s_z(hbar), 1, 2);
    const CMatrix r1 = spin::embed(spin::s_raise(hbar), 0, 2);
    const CMatrix r2 = spin::embed(spin::s_raise(hbar), 1, 2);
    return {expect(z1 + z2).real(), expect(z1 - z2).real(), expect(r1 + r2), expect(r1 - r2)};
}

} // namespace qcs
