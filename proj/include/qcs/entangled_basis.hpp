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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qcs/coherent_states.hpp"
#include "qcs/complex_geometry.hpp"

namespace qcs {

/// Maximally entangled coherent basis states.
enum class StateId { PPlus, PMinus, GPlus, GMinus, PGPlus, PGMinus };

inline constexpr std::array<StateId, 4> kTwoQubitStates{StateId::PPlus, StateId::PMinus, StateId::GPlus,
                                                         StateId::GMinus};
inline constexpr std::array<StateId, 2> kThreeQubitStates{StateId::PGPlus, StateId::PGMinus};

std::string_view to_string(StateId id);
/// Accepts "P+", "P-", "G+", "G-", "PG+", "PG-".
std::optional<StateId> parse_state_id(std::string_view text);
int qubit_count(StateId id);

/// Coefficients of a two-qubit state in a Bell-type basis. In the Bell basis
/// they are (s+, s-, h+, h-); in the coherent basis (b+, b-, c+, c-).
struct BellExpansion {
    Complex b_plus;
    Complex b_minus;
    Complex c_plus;
    Complex c_minus;

    [[nodiscard]] double norm2() const {
        return std::norm(b_plus) + std::norm(b_minus) + std::norm(c_plus) + std::norm(c_minus);
    }
};

struct EntangledBasis2 {
    PureState p_plus;
    PureState p_minus;
    PureState g_plus;
    PureState g_minus;

    [[nodiscard]] const PureState &get(StateId id) const;
};

struct EntangledBasis3 {
    PureState pg_plus;
    PureState pg_minus;
};

/// coherent(p1) (x) coherent(p2)
PureState product_state(const ComplexPoint &p1, const ComplexPoint &p2);

/// |psi psi>, |psi,-psi*>, |-psi*,psi>, |-psi*,-psi*>  (= (U (x) U)|ij>).
std::array<PureState, 4> coherent_basis_2q(const ComplexPoint &p);

/// CNOT (H (x) I) applied to |00>, |01>, |10>, |11>:
/// Phi+, Psi+, Phi-, Psi- in that order.
std::array<PureState, 4> bell_states();

/**
 * |P+-> = (|psi psi> +- |-psi* -psi*>)/sqrt(2),
 * |G+-> = (|psi,-psi*> +- |-psi*,psi>)/sqrt(2),
 * built from their explicit computational-basis components. At psi = 0
 * they are Phi+, Phi-, Psi+, Psi-; G- is the singlet for every psi.
 */
EntangledBasis2 entangled_basis_2q(const ComplexPoint &p);

/// |PG+> = (|psi>^3 + |-psi*>^3)/sqrt(2) and the W-like |PG->.
EntangledBasis3 entangled_basis_3q(const ComplexPoint &p);

PureState entangled_state(StateId id, const ComplexPoint &p);

/// b+- = <P+-|phi>, c+- = <G+-|phi>.
BellExpansion expand_in_entangled_basis(const PureState &phi, const ComplexPoint &p);

PureState reconstruct_from_expansion(const BellExpansion &e, const ComplexPoint &p);

} // namespace qcs
