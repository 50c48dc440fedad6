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
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcs/cli.hpp"
#include "qcs/entanglement_measures.hpp"
#include "qcs/errors.hpp"
#include "qcs/evolution.hpp"

namespace qcs::cli {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::vector<double>> read_csv_numbers(std::istream &in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string basis_label(Eigen::Index index, int n_qubits) {
    std::string s;
    for (int q = n_qubits - 1; q >= 0; --q) {
        s.push_back(((index >> q) & 1) != 0 ? '1' : '0');
    }
    return s;
}

SurfaceOptions surface_options(const RunConfig &cfg) {
    SurfaceOptions o;
    o.window = cfg.window;
    o.step = cfg.step;
    o.source = cfg.source;
    o.threads = cfg.threads;
    return o;
}

SurfaceGrid surface_for(const RunConfig &cfg) {
    const CouplingParams params = resolve_params(cfg);
    const StateId id = resolve_state(cfg);
    const Window &w = cfg.window;
    if (!(cfg.step > 0.0) || !(w.x_max > w.x_min) || !(w.y_max > w.y_min)) {
        throw UsageError("bad window: need x_min < x_max, y_min < y_max and step > 0");
    }
    try {
        return energy_surface(params, id, surface_options(cfg));
    } catch (const FormulaUnavailable &e) {
        throw UsageError(e.what());
    }
}

} // namespace

int cmd_state(const RunConfig &cfg, std::ostream &out) {
    const StateId id = resolve_state(cfg);
    const ComplexPoint p = resolve_psi(cfg);
    const PureState s = entangled_state(id, p);

    out << "# state=" << to_string(id) << " psi=" << format_double(p.re()) << "," << format_double(p.im()) << "\n";
    out << "index,basis,re,im\n";
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        out << i << "," << basis_label(i, s.n_qubits()) << "," << format_double(s[i].real()) << ","
            << format_double(s[i].imag()) << "\n";
    }
    if (s.n_qubits() == 2) {
        out << "# concurrence_det=" << format_double(concurrence_det(s)) << "\n";
        out << "# concurrence_rdm=" << format_double(concurrence_rdm(s)) << "\n";
        out << "# concurrence_expansion="
            << format_double(concurrence_from_expansion(expand_in_entangled_basis(s, p))) << "\n";
        const SpinAverages a = spin_sum_averages(s, cfg.hbar);
        out << "# spin_averages sz_plus=" << format_double(a.sz_plus) << " sz_minus=" << format_double(a.sz_minus)
            << " raise_plus=" << format_double(a.raise_plus.real()) << "," << format_double(a.raise_plus.imag())
            << " raise_minus=" << format_double(a.raise_minus.real()) << ","
            << format_double(a.raise_minus.imag()) << "\n";
    } else {
        const DensityMatrix rho = density(s);
        out << "# single_qubit_purity=";
        for (int q = 0; q < 3; ++q) {
            out << (q > 0 ? "," : "") << format_double(partial_trace(rho, {q}).purity());
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_surface(const RunConfig &cfg, std::ostream &out) {
    const SurfaceGrid g = surface_for(cfg);
    const bool diff = g.closed_minus_direct.has_value();
    out << "x,y,energy" << (diff ? ",closed_minus_direct" : "") << "\n";
    for (Eigen::Index iy = 0; iy < g.ny(); ++iy) {
        for (Eigen::Index ix = 0; ix < g.nx(); ++ix) {
            out << format_double(g.x(ix)) << "," << format_double(g.y(iy)) << "," << format_double(g.values(iy, ix));
            if (diff) {
                out << "," << format_double((*g.closed_minus_direct)(iy, ix));
            }
            out << "\n";
        }
    }
    if (g.constant) {
        out << "# CONSTANT," << format_double(g.values(0, 0)) << "\n";
    }
    for (const Extremum &e : g.extrema) {
        out << "# extremum," << format_double(e.x) << "," << format_double(e.y) << "," << format_double(e.value) << ","
            << to_string(e.kind) << "\n";
    }
    return kExitOk;
}

int cmd_extrema(const RunConfig &cfg, std::ostream &out) {
    const SurfaceGrid g = surface_for(cfg);
    out << "x,y,value,kind\n";
    for (const Extremum &e : g.extrema) {
        out << format_double(e.x) << "," << format_double(e.y) << "," << format_double(e.value) << ","
            << to_string(e.kind) << "\n";
    }
    if (g.constant) {
        out << "# CONSTANT," << format_double(g.values(0, 0)) << "\n";
    }
    return kExitOk;
}

int cmd_evolve(const RunConfig &cfg, std::ostream &out) {
    RunConfig c = cfg;
    if (c.model == "xyz" && !c.jx && !c.jy && !c.j_plus && !c.j_minus && c.j) {
        c.model = "xx";
    }
    const CouplingParams params = resolve_params(c);
    const ComplexPoint p = resolve_psi(c);
    const double scale = std::max({std::abs(params.jx), std::abs(params.jy), std::abs(params.jz), std::abs(params.j)});
    const double unit = params.hbar / (scale > 0.0 ? scale : 1.0);
    const double t_max = c.t_max.value_or(4.0 * kPi * unit);
    const double dt = c.dt.value_or(0.01 * unit);
    if (!(dt > 0.0) || !(t_max > 0.0)) {
        throw UsageError("evolve: need --t-max > 0 and --dt > 0");
    }
    const std::vector<double> grid = uniform_time_grid(0.0, t_max, dt);
    const ComparedSeries conc = concurrence_series(params, p, grid);
    const ComparedSeries fid = fidelity_series(params, p, grid);
    const bool closed = conc.closed_form.has_value();

    out << "t,concurrence,fidelity" << (closed ? ",closed_form_C,closed_form_F" : "") << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << format_double(grid[i]) << "," << format_double(conc.numeric.values[i]) << ","
            << format_double(fid.numeric.values[i]);
        if (closed) {
            out << "," << format_double(conc.closed_form->values[i]) << "," << format_double(fid.closed_form->values[i]);
        }
        out << "\n";
    }
    if (closed) {
        out << "# max_abs_closed_minus_numeric C=" << format_double(conc.max_deviation)
            << " F=" << format_double(fid.max_deviation) << "\n";
    }
    const RevivalResult r = revival_time(params, p);
    switch (r.status) {
    case RevivalStatus::Found:
        out << "# revival_time=" << format_double(r.time) << "\n";
        break;
    case RevivalStatus::AlwaysOne:
        out << "# revival=ALWAYS_ONE\n";
        break;
    case RevivalStatus::NoRevival:
        out << "# revival=NONE\n";
        break;
    }
    return kExitOk;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::ofstream file;
    std::ostream *target = &out;
    if (cfg.output != "-") {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open output file '" << cfg.output << "'\n";
            return kExitUsage;
        }
        target = &file;
    }
    try {
        if (cfg.command == "state") {
            return cmd_state(cfg, *target);
        }
        if (cfg.command == "surface") {
            return cmd_surface(cfg, *target);
        }
        if (cfg.command == "extrema") {
            return cmd_extrema(cfg, *target);
        }
        if (cfg.command == "evolve") {
            return cmd_evolve(cfg, *target);
        }
        if (cfg.command == "verify") {
            return cmd_verify(cfg, *target);
        }
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    std::string help;
    try {
        cfg = parse_args(argc, argv, &help);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (cfg.command == "help") {
        out << help;
        return kExitOk;
    }
    try {
        return run(cfg, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}

} // namespace qcs::cli
