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
#include "qcs/spin_models.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

#include "qcs/errors.hpp"
#include "qcs/simplex.hpp"
#include "qcs/spin_operators.hpp"

namespace qcs {

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b)); }

std::vector<std::pair<int, int>> bond_list(int n_qubits, Bonds bonds) {
    if (n_qubits == 2) {
        return {{0, 1}};
    }
    if (bonds == Bonds::Chain) {
        return {{0, 1}, {1, 2}};
    }
    return {{0, 1}, {1, 2}, {0, 2}};
}

} // namespace

std::string_view to_string(Model m) {
    switch (m) {
    case Model::XXX:
        return "xxx";
    case Model::XXZ:
        return "xxz";
    case Model::XYZ:
        return "xyz";
    }
    return "?";
}

std::string_view to_string(Bonds b) { return b == Bonds::Chain ? "chain" : "all-pairs"; }

std::string_view to_string(QSource s) { return s == QSource::Direct ? "direct" : "closed"; }

std::string_view to_string(ExtremumKind k) {
    switch (k) {
    case ExtremumKind::Min:
        return "MIN";
    case ExtremumKind::Max:
        return "MAX";
    case ExtremumKind::Saddle:
        return "SADDLE";
    case ExtremumKind::Constant:
        return "CONSTANT";
    }
    return "?";
}

CouplingParams CouplingParams::xxx(double j, double hbar) {
    CouplingParams c;
    c.model = Model::XXX;
    c.j = j;
    c.hbar = hbar;
    c.validate();
    return c;
}

CouplingParams CouplingParams::xxz(double j, double jz, double hbar) {
    if (j == 0.0) {
        throw BadParams("xxz: J must be nonzero to define Delta = Jz / J");
    }
    CouplingParams c;
    c.model = Model::XXZ;
    c.j = j;
    c.jz = jz;
    c.delta = jz / j;
    c.hbar = hbar;
    c.validate();
    return c;
}

CouplingParams CouplingParams::xxz_delta(double j, double delta, double hbar) {
    CouplingParams c;
    c.model = Model::XXZ;
    c.j = j;
    c.delta = delta;
    c.jz = j * delta;
    c.hbar = hbar;
    c.validate();
    return c;
}

CouplingParams CouplingParams::xyz(double jx, double jy, double jz) {
    CouplingParams c;
    c.model = Model::XYZ;
    c.jx = jx;
    c.jy = jy;
    c.jz = jz;
    c.j_plus = 0.5 * (jx + jy);
    c.j_minus = 0.5 * (jx - jy);
    c.validate();
    return c;
}

CouplingParams CouplingParams::xyz_pm(double j_plus, double j_minus, double jz) {
    CouplingParams c;
    c.model = Model::XYZ;
    c.j_plus = j_plus;
    c.j_minus = j_minus;
    c.jz = jz;
    c.jx = j_plus + j_minus;
    c.jy = j_plus - j_minus;
    c.validate();
    return c;
}

CouplingParams CouplingParams::xx(double j, double hbar) {
    CouplingParams c = xyz(j, j, 0.0);
    c.j = j;
    c.hbar = hbar;
    c.validate();
    return c;
}

void CouplingParams::validate() const {
    for (double v : {j, jz, delta, jx, jy, j_plus, j_minus, hbar}) {
        if (!std::isfinite(v)) {
            throw BadParams("CouplingParams: non-finite coupling");
        }
    }
    if (!(hbar > 0.0)) {
        throw BadParams("CouplingParams: hbar must be positive");
    }
    if (model == Model::XXZ && !close(jz, j * delta)) {
        throw BadParams("CouplingParams: XXZ requires Jz = J * Delta");
    }
    if (model == Model::XYZ && (!close(j_plus, 0.5 * (jx + jy)) || !close(j_minus, 0.5 * (jx - jy)))) {
        throw BadParams("CouplingParams: XYZ requires J+- = (Jx +- Jy)/2");
    }
}

HermitianOperator::HermitianOperator(CMatrix m) : m_(std::move(m)) {
    const Eigen::Index dim = m_.rows();
    if (m_.cols() != dim || (dim != 2 && dim != 4 && dim != 8)) {
        throw DimensionMismatch("HermitianOperator: matrix must be 2x2, 4x4 or 8x8");
    }
    n_qubits_ = dim == 2 ? 1 : (dim == 4 ? 2 : 3);
    if (!(hermiticity_defect(m_) <= 1e-12 * (1.0 + m_.norm()))) {
        throw InvariantViolation("HermitianOperator: matrix is not Hermitian");
    }
}

Eigen::VectorXd HermitianOperator::eigenvalues() const {
    return Eigen::SelfAdjointEigenSolver<CMatrix>(m_, Eigen::EigenvaluesOnly).eigenvalues();
}

double HermitianOperator::expectation(const PureState &s) const {
    if (s.dim() != m_.rows()) {
        throw DimensionMismatch("HermitianOperator::expectation: dimension mismatch");
    }
    const Complex e = s.amplitudes().dot(m_ * s.amplitudes());
    if (!(std::abs(e.imag()) <= 1e-12 * (1.0 + std::abs(e.real())))) {
        throw InvariantViolation("HermitianOperator::expectation: imaginary residue above 1e-12");
    }
    return e.real();
}

HermitianOperator hamiltonian(const CouplingParams &params, int n_qubits) {
    params.validate();
    if (n_qubits != 2 && n_qubits != 3) {
        throw BadParams("hamiltonian: n_qubits must be 2 or 3");
    }
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CMatrix h = CMatrix::Zero(dim, dim);
    const double hb = params.hbar;
    for (auto [i, k] : bond_list(n_qubits, params.bonds)) {
        auto b = [&](const CMatrix &a, const CMatrix &c) { return spin::bond(a, i, c, k, n_qubits); };
        const CMatrix flip = b(spin::s_raise(hb), spin::s_lower(hb)) + b(spin::s_lower(hb), spin::s_raise(hb));
        switch (params.model) {
        case Model::XXX:
            h += -params.j * (flip + 2.0 * b(spin::s_z(hb), spin::s_z(hb)));
            break;
        case Model::XXZ:
            h += -params.j * flip + 2.0 * params.delta * b(spin::s_z(hb), spin::s_z(hb));
            break;
        case Model::XYZ:
            h += 0.5 * (params.jx * b(spin::pauli_x(), spin::pauli_x()) + params.jy * b(spin::pauli_y(), spin::pauli_y()) +
                        params.jz * b(spin::pauli_z(), spin::pauli_z()));
            break;
        }
    }
    // Remove rounding asymmetry before the hermiticity check.
    return HermitianOperator(0.5 * (h + h.adjoint()));
}

double q_symbol_direct(const CouplingParams &params, StateId id, const ComplexPoint &p) {
    return hamiltonian(params, qubit_count(id)).expectation(entangled_state(id, p));
}

bool has_closed_form(Model model, StateId id) {
    switch (model) {
    case Model::XXX:
    case Model::XXZ:
        return id == StateId::PPlus;
    case Model::XYZ:
        return true;
    }
    return false;
}

namespace {

double closed_form(const CouplingParams &c, StateId id, Complex z) {
    if (!has_closed_form(c.model, id)) {
        throw FormulaUnavailable("q_symbol_closed: no printed formula for " + std::string(to_string(c.model)) + "/" +
                                 std::string(to_string(id)));
    }
    const Complex zb = std::conj(z);
    const double r2 = std::norm(z);
    const double d2 = (1.0 + r2) * (1.0 + r2);
    const double d3 = d2 * (1.0 + r2);
    const double hb2 = c.hbar * c.hbar;
    const double jp = c.j_plus, jm = c.j_minus, jz = c.jz;
    const Complex z2 = z * z, zb2 = zb * zb;
    Complex v;

    switch (c.model) {
    case Model::XXX:
        v = -c.j * hb2 / 2.0;
        break;
    case Model::XXZ:
        v = -2.0 * hb2 / d2 * (-c.j * (z - zb) * (z - zb) + jz * ((1.0 - r2) * (1.0 - r2) / 2.0 + z2 + zb2));
        break;
    case Model::XYZ:
        switch (id) {
        case StateId::PPlus:
            v = (-2.0 * jp * (z - zb) * (z - zb) + jm * ((1.0 + z2) * (1.0 + z2) + (1.0 + zb2) * (1.0 + zb2)) +
                 jz * ((1.0 - r2) * (1.0 - r2) + 2.0 * (z2 + zb2))) /
                (2.0 * d2);
            break;
        case StateId::PMinus:
            v = (2.0 * jp * (z + zb) * (z + zb) - jm * ((1.0 - z2) * (1.0 - z2) + (1.0 - zb2) * (1.0 - zb2)) +
                 jz * ((1.0 - z2) * (1.0 - zb2) - (z + zb) * (z + zb))) /
                (2.0 * d2);
            break;
        case StateId::GPlus:
            v = (2.0 * jp * (1.0 - r2) * (1.0 - r2) - 4.0 * jm * (z2 + zb2) + jz * (4.0 * r2 - (1.0 - r2) * (1.0 - r2))) /
                (2.0 * d2);
            break;
        case StateId::GMinus:
            v = -(jz / 2.0 + jp);
            break;
        case StateId::PGPlus:
            v = (4.0 * jp * r2 * (1.0 + r2) + 2.0 * jm * (1.0 + r2) * (z2 + zb2) +
                 jz * (1.0 - r2 - r2 * r2 + r2 * r2 * r2)) /
                d3;
            break;
        case StateId::PGMinus:
            v = (4.0 * jp * (1.0 + r2 * r2 * r2) - 6.0 * jm * (1.0 + r2) * (z2 + zb2) -
                 jz * (1.0 - 9.0 * r2 - 9.0 * r2 * r2 + r2 * r2 * r2)) /
                (3.0 * d3);
            break;
        }
        break;
    }
    return v.real();
}

} // namespace

ClosedFormValue q_symbol_closed(const CouplingParams &params, StateId id, const ComplexPoint &p) {
    params.validate();
    const double value = closed_form(params, id, p.value());
    return {value, q_symbol_direct(params, id, p)};
}

double xxz_p_plus_closed_xy(const CouplingParams &c, double x, double y) {
    const double r2 = x * x + y * y;
    return -c.hbar * c.hbar * (8.0 * c.j * y * y + c.jz * (1.0 + 2.0 * x * x - 6.0 * y * y + r2 * r2)) /
           ((1.0 + r2) * (1.0 + r2));
}

QSymbolEvaluator::QSymbolEvaluator(const CouplingParams &params, StateId id, QSource source)
    : params_(params), id_(id), source_(source), h_(hamiltonian(params, qubit_count(id))) {
    if (source == QSource::Closed && !has_closed_form(params.model, id)) {
        throw FormulaUnavailable("QSymbolEvaluator: no printed formula for " + std::string(to_string(params.model)) +
                                 "/" + std::string(to_string(id)));
    }
}

double QSymbolEvaluator::direct(double x, double y) const {
    return h_.expectation(entangled_state(id_, ComplexPoint{x, y}));
}

double QSymbolEvaluator::closed(double x, double y) const { return closed_form(params_, id_, Complex{x, y}); }

double QSymbolEvaluator::operator()(double x, double y) const {
    return source_ == QSource::Direct ? direct(x, y) : closed(x, y);
}

unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("QCS_THREADS")) {
        char *end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct HessianClass {
    ExtremumKind kind;
    bool degenerate;
};

HessianClass classify(const std::function<double(double, double)> &f, double x, double y) {
    constexpr double h = 1e-4;
    const double f0 = f(x, y);
    const double fxx = (f(x + h, y) - 2.0 * f0 + f(x - h, y)) / (h * h);
    const double fyy = (f(x, y + h) - 2.0 * f0 + f(x, y - h)) / (h * h);
    const double fxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h);
    const double mean = 0.5 * (fxx + fyy);
    const double rad = std::hypot(0.5 * (fxx - fyy), fxy);
    const double lo = mean - rad;
    const double hi = mean + rad;
    const double tol = 1e-6 * (1.0 + std::abs(f0));
    if (lo > tol) {
        return {ExtremumKind::Min, false};
    }
    if (hi < -tol) {
        return {ExtremumKind::Max, false};
    }
    if (lo < -tol && hi > tol) {
        return {ExtremumKind::Saddle, false};
    }
    if (std::abs(lo) <= tol && std::abs(hi) <= tol) {
        return {ExtremumKind::Constant, true};
    }
    // One flat direction (a ring or valley): sign of the curved one.
    return {hi > tol ? ExtremumKind::Min : ExtremumKind::Max, true};
}

bool locally_flat(const std::function<double(double, double)> &f, double x, double y) {
    constexpr double h = 1e-3;
    const double f0 = f(x, y);
    double spread = 0.0;
    for (int dx = -1; dx <= 1; ++dx) {
        for (int dy = -1; dy <= 1; ++dy) {
            spread = std::max(spread, std::abs(f(x + dx * h, y + dy * h) - f0));
        }
    }
    return spread <= 1e-12 * (1.0 + std::abs(f0));
}

RefinedExtremum refine_with(const std::function<double(double, double)> &f, std::array<double, 2> seed,
                            RefineGoal goal, double initial_step) {
    if (locally_flat(f, seed[0], seed[1])) {
        return {seed[0], seed[1], f(seed[0], seed[1]), ExtremumKind::Constant};
    }
    if (goal == RefineGoal::Auto) {
        const HessianClass c = classify(f, seed[0], seed[1]);
        goal = c.kind == ExtremumKind::Max ? RefineGoal::Maximize : RefineGoal::Minimize;
    }
    const double sign = goal == RefineGoal::Maximize ? -1.0 : 1.0;
    SimplexOptions opts;
    opts.initial_step = initial_step;
    const SimplexResult r = nelder_mead([&](double x, double y) { return sign * f(x, y); }, seed, opts);
    const HessianClass c = classify(f, r.x, r.y);
    ExtremumKind kind = c.kind;
    if (kind == ExtremumKind::Constant) {
        kind = goal == RefineGoal::Maximize ? ExtremumKind::Max : ExtremumKind::Min;
    }
    return {r.x, r.y, f(r.x, r.y), kind};
}

} // namespace

RefinedExtremum refine_extremum(const CouplingParams &params, StateId id, std::array<double, 2> seed, QSource source,
                                RefineGoal goal, double initial_step) {
    const QSymbolEvaluator eval(params, id, source);
    return refine_with([&](double x, double y) { return eval(x, y); }, seed, goal, initial_step);
}

double q_symbol_gradient_norm(const QSymbolEvaluator &f, double x, double y, double h) {
    const double gx = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
    const double gy = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
    return std::hypot(gx, gy);
}

SurfaceGrid energy_surface(const CouplingParams &params, StateId id, const SurfaceOptions &options) {
    const Window &w = options.window;
    if (!(options.step > 0.0) || !(w.x_max > w.x_min) || !(w.y_max > w.y_min)) {
        throw BadParams("energy_surface: step must be positive and the window nonempty");
    }
    const QSymbolEvaluator eval(params, id, options.source);

    SurfaceGrid grid;
    grid.window = w;
    grid.step = options.step;
    const auto nx = static_cast<Eigen::Index>(std::floor((w.x_max - w.x_min) / options.step + 1e-9)) + 1;
    const auto ny = static_cast<Eigen::Index>(std::floor((w.y_max - w.y_min) / options.step + 1e-9)) + 1;
    grid.values.resize(ny, nx);
    const bool with_diff = options.source == QSource::Closed;
    if (with_diff) {
        grid.closed_minus_direct = Eigen::MatrixXd(ny, nx);
    }

    // Rows are independent; each node is written by exactly one worker.
    std::atomic<Eigen::Index> next_row{0};
    auto worker = [&] {
        for (Eigen::Index iy = next_row++; iy < ny; iy = next_row++) {
            const double y = grid.y(iy);
            for (Eigen::Index ix = 0; ix < nx; ++ix) {
                const double x = grid.x(ix);
                const double v = eval(x, y);
                grid.values(iy, ix) = v;
                if (with_diff) {
                    (*grid.closed_minus_direct)(iy, ix) = v - eval.direct(x, y);
                }
            }
        }
    };
    const unsigned n_threads = std::min<unsigned>(resolve_thread_count(options.threads), static_cast<unsigned>(ny));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    const double vmax = grid.values.maxCoeff();
    const double vmin = grid.values.minCoeff();
    if (vmax - vmin < 1e-10 * (1.0 + std::abs(vmax))) {
        grid.constant = true;
        return grid;
    }

    for (Eigen::Index iy = 1; iy + 1 < ny; ++iy) {
        for (Eigen::Index ix = 1; ix + 1 < nx; ++ix) {
            const double v = grid.values(iy, ix);
            const double tol = 1e-10 * (1.0 + std::abs(v));
            bool is_min = true;
            bool is_max = true;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) {
                        continue;
                    }
                    const double nb = grid.values(iy + dy, ix + dx);
                    is_min = is_min && v < nb - tol;
                    is_max = is_max && v > nb + tol;
                }
            }
            if (is_min || is_max) {
                grid.grid_extrema.push_back({grid.x(ix), grid.y(iy), v, is_min ? ExtremumKind::Min : ExtremumKind::Max});
            }
        }
    }

    if (!options.refine) {
        grid.extrema = grid.grid_extrema;
    } else {
        auto f = [&](double x, double y) { return eval(x, y); };
        for (const Extremum &seed : grid.grid_extrema) {
            const RefineGoal goal = seed.kind == ExtremumKind::Min ? RefineGoal::Minimize : RefineGoal::Maximize;
            const RefinedExtremum r = refine_with(f, {seed.x, seed.y}, goal, options.step);
            const bool duplicate = std::any_of(grid.extrema.begin(), grid.extrema.end(), [&](const Extremum &e) {
                return std::hypot(e.x - r.x, e.y - r.y) < 1e-4;
            });
            if (!duplicate) {
                grid.extrema.push_back({r.x, r.y, r.value, r.kind});
            }
        }
    }
    std::stable_sort(grid.extrema.begin(), grid.extrema.end(),
                     [](const Extremum &a, const Extremum &b) { return a.value < b.value; });
    return grid;
}

} // namespace qcs
