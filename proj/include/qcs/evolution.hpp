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
#include <vector>

#include "qcs/coherent_states.hpp"
#include "qcs/spin_models.hpp"

namespace qcs {

/// Sampled real function of time on a strictly increasing grid.
struct TimeSeries {
    std::vector<double> t;
    std::vector<double> values;

    /// Throws InvariantViolation unless lengths match and t increases strictly.
    void validate() const;
};

/// Uniform grid t0, t0 + dt, ..., up to and including t1 (within dt * 1e-9).
std::vector<double> uniform_time_grid(double t0, double t1, double dt);

/// exp(-i H t / hbar) through the eigendecomposition of H.
class Propagator {
  public:
    Propagator(const HermitianOperator &h, double hbar);

    [[nodiscard]] PureState evolve(const PureState &phi0, double t) const;
    [[nodiscard]] CMatrix matrix(double t) const;
    [[nodiscard]] const Eigen::VectorXd &energies() const { return energies_; }
    [[nodiscard]] const CMatrix &eigenvectors() const { return vectors_; }
    [[nodiscard]] double hbar() const { return hbar_; }

  private:
    Eigen::VectorXd energies_;
    CMatrix vectors_;
    double hbar_;
};

/// Throws DimensionMismatch when H and phi0 differ in size, BadParams for hbar <= 0.
PureState evolve(const HermitianOperator &h, const PureState &phi0, double t, double hbar);

/// Numeric series plus, when available, the printed closed form on the same grid.
struct ComparedSeries {
    TimeSeries numeric;
    std::optional<TimeSeries> closed_form;
    /// max |closed - numeric|; 0 when no closed form applies.
    double max_deviation = 0.0;
};

/// True for the XX model (XYZ with Jx = Jy, Jz = 0) and |psi| = 1, the
/// setting of the printed C(t) and F(t) expressions.
bool closed_forms_apply(const CouplingParams &params, const ComplexPoint &p);

/// Printed concurrence for psi = e^{i theta}, read with cos^2(2 theta):
/// (1/4) sqrt((2+2c)^2 + 8 (2+2c) sin^2(theta) cos(2Jt/hbar) + 16 sin^4(theta)), c = cos^2(2 theta).
double concurrence_closed_form_theta(double theta, double j, double t, double hbar);

/// Printed general-psi concurrence
/// |((1+conj(psi)^2)(1+psi^2) - e^{-2iJt/hbar}(psi - conj(psi))^2) / (1+conj(psi)^2)^2|.
double concurrence_closed_form(Complex psi, double j, double t, double hbar);

/// Printed fidelity 1 - sin^2(2 theta) sin^2(J t / hbar).
double fidelity_closed_form(double theta, double j, double t, double hbar);

/// C(t) = 2|t00 t11 - t01 t10| of exp(-iHt/hbar)|P+(psi)>.
ComparedSeries concurrence_series(const CouplingParams &params, const ComplexPoint &p, const std::vector<double> &t_grid);

/// F(t) = |<psi(t)|P+(psi)>|^2.
ComparedSeries fidelity_series(const CouplingParams &params, const ComplexPoint &p, const std::vector<double> &t_grid);

enum class RevivalStatus { Found, AlwaysOne, NoRevival };

struct RevivalResult {
    RevivalStatus status;
    double time = 0.0;
};

/**
 * First t > 0 at which the fidelity of the evolved |P+(psi)> returns to 1.
 *
 * Scans t in steps of 1e-3 hbar/J for local maxima of F, locates each by
 * bisection on dF/dt (width 1e-9) and accepts the first with
 * F > 1 - 1e-9. Gives up after 10 * 2 pi hbar / J.
 */
RevivalResult revival_time(const CouplingParams &params, const ComplexPoint &p);

} // namespace qcs
