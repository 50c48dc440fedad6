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

#include <optional>
#include <string_view>
#include <vector>

#include "qcs/complex_geometry.hpp"
#include "qcs/entangled_basis.hpp"
#include "qcs/linalg.hpp"

namespace qcs {

enum class Model { XXX, XXZ, XYZ };

/// Three-qubit bond set: (1,2)+(2,3) or (1,2)+(2,3)+(1,3).
enum class Bonds { Chain, AllPairs };

enum class QSource { Direct, Closed };

std::string_view to_string(Model m);
std::string_view to_string(Bonds b);
std::string_view to_string(QSource s);

/**
 * Coupling constants for the three Heisenberg-type models.
 *
 *   XXX: H = -J (S1+ S2- + S1- S2+ + 2 S1z S2z)
 *   XXZ: H = -J (S1+ S2- + S1- S2+) + 2 Delta S1z S2z,   J Delta = Jz
 *   XYZ: H = (1/2) (Jx sx sx + Jy sy sy + Jz sz sz),      J+- = (Jx +- Jy)/2
 *
 * XXX and XXZ use hbar-weighted spin operators; XYZ uses bare Pauli
 * matrices. Use the named factories, which keep the derived fields
 * consistent.
 */
struct CouplingParams {
    Model model = Model::XYZ;
    double j = 0.0;
    double jz = 0.0;
    double delta = 0.0;
    double jx = 0.0;
    double jy = 0.0;
    double j_plus = 0.0;
    double j_minus = 0.0;
    double hbar = 1.0;
    Bonds bonds = Bonds::Chain;

    static CouplingParams xxx(double j, double hbar = 1.0);
    /// Throws BadParams for j == 0 (Delta = Jz / J undefined).
    static CouplingParams xxz(double j, double jz, double hbar = 1.0);
    static CouplingParams xxz_delta(double j, double delta, double hbar = 1.0);
    static CouplingParams xyz(double jx, double jy, double jz);
    static CouplingParams xyz_pm(double j_plus, double j_minus, double jz);
    /// XY-isotropic XYZ with Jz = 0 (the "XX model").
    static CouplingParams xx(double j, double hbar = 1.0);

    CouplingParams with_bonds(Bonds b) const {
        CouplingParams c = *this;
        c.bonds = b;
        return c;
    }

    /// Throws BadParams when derived fields disagree or hbar <= 0.
    void validate() const;
};

/// Dense Hermitian matrix on 1..3 qubits.
class HermitianOperator {
  public:
    explicit HermitianOperator(CMatrix m);

    [[nodiscard]] const CMatrix &matrix() const { return m_; }
    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] Eigen::VectorXd eigenvalues() const;

    /// <s|H|s>; throws InvariantViolation if the imaginary residue exceeds 1e-12.
    [[nodiscard]] double expectation(const PureState &s) const;

  private:
    CMatrix m_;
    int n_qubits_;
};

HermitianOperator hamiltonian(const CouplingParams &params, int n_qubits);

/// <state|H|state> by direct matrix element; the oracle for the closed forms.
double q_symbol_direct(const CouplingParams &params, StateId id, const ComplexPoint &p);

struct ClosedFormValue {
    double value;
    double direct;
    [[nodiscard]] double closed_minus_direct() const { return value - direct; }
};

/// Printed closed-form Q symbol, evaluated literally, together with the
/// direct matrix element for comparison. Available pairs: XXX/P+,
/// XXZ/P+, and XYZ with any of the six states. Others throw
/// FormulaUnavailable.
ClosedFormValue q_symbol_closed(const CouplingParams &params, StateId id, const ComplexPoint &p);

bool has_closed_form(Model model, StateId id);

/// Closed-form XXZ P+ surface written in x = Re psi, y = Im psi.
double xxz_p_plus_closed_xy(const CouplingParams &params, double x, double y);

/// Evaluates either source on a point, caching the Hamiltonian.
class QSymbolEvaluator {
  public:
    QSymbolEvaluator(const CouplingParams &params, StateId id, QSource source);

    [[nodiscard]] double operator()(double x, double y) const;
    [[nodiscard]] double direct(double x, double y) const;
    [[nodiscard]] double closed(double x, double y) const;
    [[nodiscard]] QSource source() const { return source_; }

  private:
    CouplingParams params_;
    StateId id_;
    QSource source_;
    HermitianOperator h_;
};

enum class ExtremumKind { Min, Max, Saddle, Constant };

std::string_view to_string(ExtremumKind k);

struct Extremum {
    double x;
    double y;
    double value;
    ExtremumKind kind;
};

struct Window {
    double x_min = -3.0;
    double x_max = 3.0;
    double y_min = -3.0;
    double y_max = 3.0;
};

struct SurfaceGrid {
    Window window;
    double step = 0.05;
    /// values(iy, ix) at (x_min + ix*step, y_min + iy*step)
    Eigen::MatrixXd values;
    /// closed - direct per node, only for QSource::Closed.
    std::optional<Eigen::MatrixXd> closed_minus_direct;
    bool constant = false;
    /// Strict 8-neighbor extrema of the grid itself.
    std::vector<Extremum> grid_extrema;
    /// Refined, merged extrema sorted by value ascending.
    std::vector<Extremum> extrema;

    [[nodiscard]] Eigen::Index nx() const { return values.cols(); }
    [[nodiscard]] Eigen::Index ny() const { return values.rows(); }
    [[nodiscard]] double x(Eigen::Index ix) const { return window.x_min + static_cast<double>(ix) * step; }
    [[nodiscard]] double y(Eigen::Index iy) const { return window.y_min + static_cast<double>(iy) * step; }
};

struct SurfaceOptions {
    Window window{};
    double step = 0.05;
    QSource source = QSource::Direct;
    /// 0: QCS_THREADS, else hardware concurrency.
    unsigned threads = 0;
    bool refine = true;
};

/// Samples the Q symbol over the window, flags constant surfaces, and
/// detects and refines extrema. Output is independent of thread count.
SurfaceGrid energy_surface(const CouplingParams &params, StateId id, const SurfaceOptions &options = {});

struct RefinedExtremum {
    double x;
    double y;
    double value;
    ExtremumKind kind;
};

enum class RefineGoal { Auto, Minimize, Maximize };

/// Simplex refinement of a grid extremum followed by Hessian
/// classification (central differences, h = 1e-4). A locally flat seed is
/// returned unchanged and classified Constant.
RefinedExtremum refine_extremum(const CouplingParams &params, StateId id, std::array<double, 2> seed,
                                QSource source, RefineGoal goal = RefineGoal::Auto, double initial_step = 0.05);

/// Central-difference gradient norm of the Q symbol.
double q_symbol_gradient_norm(const QSymbolEvaluator &f, double x, double y, double h = 1e-5);

unsigned resolve_thread_count(unsigned requested);

} // namespace qcs
