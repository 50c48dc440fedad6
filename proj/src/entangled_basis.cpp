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
#include "qcs/entangled_basis.hpp"

#include <cmath>

#include "qcs/errors.hpp"
#include "qcs/gates.hpp"

namespace qcs {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState antipodal(const ComplexPoint &p) { return symmetric_state(p, SymmetryKind::Antipodal); }

CVector amps3(const PureState &a, const PureState &b, const PureState &c) {
    return kron(kron(a.amplitudes(), b.amplitudes()), c.amplitudes());
}

} // namespace

std::string_view to_string(StateId id) {
    switch (id) {
    case StateId::PPlus:
        return "P+";
    case StateId::PMinus:
        return "P-";
    case StateId::GPlus:
        return "G+";
    case StateId::GMinus:
        return "G-";
    case StateId::PGPlus:
        return "PG+";
    case StateId::PGMinus:
        return "PG-";
    }
    return "?";
}

std::optional<StateId> parse_state_id(std::string_view text) {
    for (StateId id : {StateId::PPlus, StateId::PMinus, StateId::GPlus, StateId::GMinus, StateId::PGPlus,
                       StateId::PGMinus}) {
        if (text == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

int qubit_count(StateId id) { return (id == StateId::PGPlus || id == StateId::PGMinus) ? 3 : 2; }

const PureState &EntangledBasis2::get(StateId id) const {
    switch (id) {
    case StateId::PPlus:
        return p_plus;
    case StateId::PMinus:
        return p_minus;
    case StateId::GPlus:
        return g_plus;
    case StateId::GMinus:
        return g_minus;
    default:
        throw BadParams("EntangledBasis2::get: not a two-qubit state id");
    }
}

PureState product_state(const ComplexPoint &p1, const ComplexPoint &p2) { return coherent(p1).tensor(coherent(p2)); }

std::array<PureState, 4> coherent_basis_2q(const ComplexPoint &p) {
    const PureState a = coherent(p);
    const PureState b = antipodal(p);
    return {a.tensor(a), a.tensor(b), b.tensor(a), b.tensor(b)};
}

std::array<PureState, 4> bell_states() {
    const UnitaryGate c = gate_cnot() * tensor(gate_hadamard(), gate_identity(1));
    return {c.apply(PureState::basis(2, 0)), c.apply(PureState::basis(2, 1)), c.apply(PureState::basis(2, 2)),
            c.apply(PureState::basis(2, 3))};
}

EntangledBasis2 entangled_basis_2q(const ComplexPoint &p) {
    if (p.is_infinite()) {
        throw InfinitePoint("entangled_basis_2q: finite point required");
    }
    const Complex z = p.value();
    const Complex zb = std::conj(z);
    const double r2 = std::norm(z);
    const double scale = kInvSqrt2 / (1.0 + r2);

    CVector pp(4), pm(4), gp(4), gm(4);
    pp << 1.0 + zb * zb, z - zb, z - zb, 1.0 + z * z;
    pm << 1.0 - zb * zb, z + zb, z + zb, -1.0 + z * z;
    gp << -2.0 * zb, 1.0 - r2, 1.0 - r2, 2.0 * z;
    gm << 0.0, 1.0 + r2, -1.0 - r2, 0.0;
    return {PureState(scale * pp), PureState(scale * pm), PureState(scale * gp), PureState(scale * gm)};
}

EntangledBasis3 entangled_basis_3q(const ComplexPoint &p) {
    if (p.is_infinite()) {
        throw InfinitePoint("entangled_basis_3q: finite point required");
    }
    const PureState a = coherent(p);
    const PureState b = antipodal(p);
    const CVector plus = kInvSqrt2 * (amps3(a, a, a) + amps3(b, b, b));
    const CVector minus = (amps3(a, a, b) + amps3(a, b, a) + amps3(b, a, a)) / std::sqrt(3.0);
    // Unit norm of |PG-> relies on <psi|-psi*> = 0; the constructor checks it.
    return {PureState(plus), PureState(minus)};
}

PureState entangled_state(StateId id, const ComplexPoint &p) {
    switch (id) {
    case StateId::PGPlus:
        return entangled_basis_3q(p).pg_plus;
    case StateId::PGMinus:
        return entangled_basis_3q(p).pg_minus;
    default:
        return entangled_basis_2q(p).get(id);
    }
}

BellExpansion expand_in_entangled_basis(const PureState &phi, const ComplexPoint &p) {
    if (phi.n_qubits() != 2) {
        throw DimensionMismatch("expand_in_entangled_basis: two-qubit state required");
    }
    const EntangledBasis2 basis = entangled_basis_2q(p);
    return {overlap(basis.p_plus, phi), overlap(basis.p_minus, phi), overlap(basis.g_plus, phi),
            overlap(basis.g_minus, phi)};
}

PureState reconstruct_from_expansion(const BellExpansion &e, const ComplexPoint &p) {
    const EntangledBasis2 basis = entangled_basis_2q(p);
    const CVector v = e.b_plus * basis.p_plus.amplitudes() + e.b_minus * basis.p_minus.amplitudes() +
                      e.c_plus * basis.g_plus.amplitudes() + e.c_minus * basis.g_minus.amplitudes();
    return PureState::normalized(v);
}

} // namespace qcs
