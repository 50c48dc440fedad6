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
#include "qcs/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "qcs/entanglement_measures.hpp"
#include "qcs/errors.hpp"

namespace qcs {

void TimeSeries::validate() const {
    if (t.size() != values.size()) {
        throw InvariantViolation("TimeSeries: t and values differ in length");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) {
            throw InvariantViolation("TimeSeries: t must be strictly increasing");
        }
    }
}

std::vector<double> uniform_time_grid(double t0, double t1, double dt) {
    if (!(dt > 0.0) || !(t1 >= t0)) {
        throw BadParams("uniform_time_grid: need dt > 0 and t1 >= t0");
    }
    const auto n = static_cast<std::size_t>(std::floor((t1 - t0) / dt + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = t0 + static_cast<double>(i) * dt;
    }
    return out;
}

Propagator::Propagator(const HermitianOperator &h, double hbar) : hbar_(hbar) {
    if (!(hbar > 0.0)) {
        throw BadParams("Propagator: hbar must be positive");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h.matrix());
    energies_ = eig.eigenvalues();
    vectors_ = eig.eigenvectors();
}

CMatrix Propagator::matrix(double t) const {
    CVector phases(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) {
        phases(k) = std::polar(1.0, -energies_(k) * t / hbar_);
    }
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

PureState Propagator::evolve(const PureState &phi0, double t) const {
    if (phi0.dim() != vectors_.rows()) {
        throw DimensionMismatch("Propagator::evolve: state and Hamiltonian dimensions differ");
    }
    CVector c = vectors_.adjoint() * phi0.amplitudes();
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        c(k) *= std::polar(1.0, -energies_(k) * t / hbar_);
    }
    return PureState::normalized(vectors_ * c);
}

PureState evolve(const HermitianOperator &h, const PureState &phi0, double t, double hbar) {
    if (phi0.dim() != h.matrix().rows()) {
        throw DimensionMismatch("evolve: state and Hamiltonian dimensions differ");
    }
    return Propagator(h, hbar).evolve(phi0, t);
}

bool closed_forms_apply(const CouplingParams &params, const ComplexPoint &p) {
    return params.model == Model::XYZ && params.jx == params.jy && params.jz == 0.0 && p.is_finite() &&
           std::abs(std::abs(p.value()) - 1.0) <= 1e-12;
}

double concurrence_closed_form_theta(double theta, double j, double t, double hbar) {
    const double c2 = std::cos(2.0 * theta) * std::cos(2.0 * theta);
    const double a = 2.0 + 2.0 * c2;
    const double s2 = std::sin(theta) * std::sin(theta);
    const double inner = a * a + 8.0 * a * s2 * std::cos(2.0 * j * t / hbar) + 16.0 * s2 * s2;
    return 0.25 * std::sqrt(std::max(0.0, inner));
}

double concurrence_closed_form(Complex psi, double j, double t, double hbar) {
    const Complex pb = std::conj(psi);
    const Complex d = psi - pb;
    const Complex num = (1.0 + pb * pb) * (1.0 + psi * psi) - std::polar(1.0, -2.0 * j * t / hbar) * d * d;
    const Complex den = (1.0 + pb * pb) * (1.0 + pb * pb);
    return std::abs(num / den);
}

double fidelity_closed_form(double theta, double j, double t, double hbar) {
    const double a = std::sin(2.0 * theta);
    const double b = std::sin(j * t / hbar);
    return 1.0 - a * a * b * b;
}

namespace {

template <typename Numeric, typename Closed>
ComparedSeries run_series(const CouplingParams &params, const ComplexPoint &p, const std::vector<double> &t_grid,
                          Numeric numeric, Closed closed) {
    const Propagator u(hamiltonian(params, 2), params.hbar);
    const PureState p0 = entangled_basis_2q(p).p_plus;

    ComparedSeries out;
    out.numeric.t = t_grid;
    out.numeric.values.reserve(t_grid.size());
    for (double t : t_grid) {
        out.numeric.values.push_back(numeric(u.evolve(p0, t), p0));
    }
    out.numeric.validate();

    if (closed_forms_apply(params, p)) {
        const double theta = std::arg(p.value());
        TimeSeries cf;
        cf.t = t_grid;
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            cf.values.push_back(closed(theta, params.jx, t_grid[i], params.hbar));
            out.max_deviation = std::max(out.max_deviation, std::abs(cf.values.back() - out.numeric.values[i]));
        }
        out.closed_form = std::move(cf);
    }
    return out;
}

} // namespace

ComparedSeries concurrence_series(const CouplingParams &params, const ComplexPoint &p,
                                  const std::vector<double> &t_grid) {
    return run_series(
        params, p, t_grid, [](const PureState &s, const PureState &) { return concurrence_det(s); },
        concurrence_closed_form_theta);
}

ComparedSeries fidelity_series(const CouplingParams &params, const ComplexPoint &p, const std::vector<double> &t_grid) {
    return run_series(
        params, p, t_grid, [](const PureState &s, const PureState &p0) { return std::norm(overlap(s, p0)); },
        fidelity_closed_form);
}

RevivalResult revival_time(const CouplingParams &params, const ComplexPoint &p) {
    const Propagator u(hamiltonian(params, 2), params.hbar);
    const PureState p0 = entangled_basis_2q(p).p_plus;
    const double hbar = params.hbar;

    // <P+|psi(t)> = sum_k w_k exp(-i E_k t / hbar), w_k = |<k|P+>|^2
    const CVector proj = u.eigenvectors().adjoint() * p0.amplitudes();
    const Eigen::VectorXd &e = u.energies();
    auto amplitude = [&](double t, Complex *derivative) {
        Complex a{0.0, 0.0}, da{0.0, 0.0};
        for (Eigen::Index k = 0; k < e.size(); ++k) {
            const Complex term = std::norm(proj(k)) * std::polar(1.0, -e(k) * t / hbar);
            a += term;
            da += Complex{0.0, -e(k) / hbar} * term;
        }
        if (derivative != nullptr) {
            *derivative = da;
        }
        return a;
    };
    auto fidelity = [&](double t) { return std::norm(amplitude(t, nullptr)); };
    auto slope = [&](double t) {
        Complex da;
        const Complex a = amplitude(t, &da);
        return 2.0 * (std::conj(a) * da).real();
    };

    const double scale = std::max({std::abs(params.jx), std::abs(params.jy), std::abs(params.jz), std::abs(params.j)});
    if (scale == 0.0) {
        return {RevivalStatus::AlwaysOne, 0.0};
    }
    const double dt = 1e-3 * hbar / scale;
    const double t_end = 10.0 * 2.0 * kPi * hbar / scale;
    const std::vector<double> grid = uniform_time_grid(0.0, t_end, dt);
    std::vector<double> f(grid.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        f[i] = fidelity(grid[i]);
        worst = std::max(worst, 1.0 - f[i]);
    }
    if (worst < 1e-12) {
        return {RevivalStatus::AlwaysOne, 0.0};
    }

    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (!(f[i] >= f[i - 1] && f[i] >= f[i + 1])) {
            continue;
        }
        double lo = grid[i - 1];
        double hi = grid[i + 1];
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            (slope(mid) > 0.0 ? lo : hi) = mid;
        }
        const double t_star = 0.5 * (lo + hi);
        if (fidelity(t_star) > 1.0 - 1e-9) {
            return {RevivalStatus::Found, t_star};
        }
    }
    return {RevivalStatus::NoRevival, 0.0};
}

} // namespace qcs
