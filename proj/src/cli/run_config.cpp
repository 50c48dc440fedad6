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
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcs/cli.hpp"
#include "qcs/errors.hpp"

namespace qcs::cli {

namespace {

std::vector<double> parse_list(const std::string &text, std::size_t expected, const std::string &flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError(flag + ": expected " + std::to_string(expected) + " comma-separated numbers, got '" +
                             text + "'");
        }
    }
    if (out.size() != expected) {
        throw UsageError(flag + ": expected " + std::to_string(expected) + " comma-separated numbers, got '" + text +
                         "'");
    }
    for (double v : out) {
        if (!std::isfinite(v)) {
            throw UsageError(flag + ": values must be finite");
        }
    }
    return out;
}

} // namespace

RunConfig parse_args(int argc, const char *const *argv, std::string *help_text) {
    RunConfig cfg;
    CLI::App app{"Antipodal spin coherent states: entangled bases, Q-symbol surfaces, evolution"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string state, psi, window, source = "direct", bonds = "chain";
    std::optional<double> theta;
    app.add_option("--model", cfg.model, "xxx | xxz | xyz | xx")->check(CLI::IsMember({"xxx", "xxz", "xyz", "xx"}));
    app.add_option("--state", state, "P+ | P- | G+ | G- | PG+ | PG-");
    app.add_option("--j", cfg.j, "J (xxx, xxz, xx)");
    app.add_option("--delta", cfg.delta, "anisotropy Delta (xxz)");
    app.add_option("--jz", cfg.jz, "Jz (xxz, xyz)");
    app.add_option("--jx", cfg.jx, "Jx (xyz)");
    app.add_option("--jy", cfg.jy, "Jy (xyz)");
    app.add_option("--j-plus", cfg.j_plus, "J+ = (Jx+Jy)/2 (xyz)");
    app.add_option("--j-minus", cfg.j_minus, "J- = (Jx-Jy)/2 (xyz)");
    app.add_option("--hbar", cfg.hbar, "hbar (default 1)");
    app.add_option("--psi", psi, "psi as re,im");
    app.add_option("--theta", theta, "psi = e^{i theta}");
    app.add_option("--window", window, "x_min,x_max,y_min,y_max (default -3,3,-3,3)");
    app.add_option("--step", cfg.step, "grid step (default 0.05)");
    app.add_option("--t-max", cfg.t_max, "end of time window (default 4 pi hbar / J)");
    app.add_option("--dt", cfg.dt, "time step (default 0.01 hbar / J)");
    app.add_option("--source", source, "direct | closed")->check(CLI::IsMember({"direct", "closed"}));
    app.add_option("--bonds", bonds, "three-qubit bonds: chain | all-pairs")
        ->check(CLI::IsMember({"chain", "all-pairs"}));
    app.add_option("--output", cfg.output, "output path, '-' for stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized checks");

    for (const char *name : {"state", "surface", "extrema", "evolve", "verify"}) {
        app.add_subcommand(name)->callback([&cfg, name] { cfg.command = name; });
    }
    app.get_subcommand("state")->description("amplitudes, concurrences and spin averages of a basis state");
    app.get_subcommand("surface")->description("Q-symbol energy surface as CSV");
    app.get_subcommand("extrema")->description("refined extrema of the energy surface as CSV");
    app.get_subcommand("evolve")->description("concurrence and fidelity versus time as CSV");
    app.get_subcommand("verify")->description("run the invariant suite and print a report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        if (help_text != nullptr) {
            *help_text = app.help();
        }
        cfg.command = "help";
        return cfg;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    if (!state.empty()) {
        cfg.state = state;
    }
    if (!psi.empty()) {
        const auto v = parse_list(psi, 2, "--psi");
        cfg.psi = Complex{v[0], v[1]};
    }
    cfg.theta = theta;
    if (!window.empty()) {
        const auto v = parse_list(window, 4, "--window");
        cfg.window = {v[0], v[1], v[2], v[3]};
    }
    cfg.source = source == "closed" ? QSource::Closed : QSource::Direct;
    cfg.bonds = bonds == "all-pairs" ? Bonds::AllPairs : Bonds::Chain;
    return cfg;
}

CouplingParams resolve_params(const RunConfig &cfg) {
    auto need = [](const std::optional<double> &v, const char *flag) {
        if (!v) {
            throw UsageError(std::string("missing ") + flag);
        }
        return *v;
    };
    auto forbid = [&cfg](std::initializer_list<std::pair<const std::optional<double> *, const char *>> flags) {
        for (const auto &[v, name] : flags) {
            if (v->has_value()) {
                throw UsageError(std::string(name) + " does not apply to model " + cfg.model);
            }
        }
    };

    try {
        CouplingParams p;
        if (cfg.model == "xxx") {
            forbid({{&cfg.delta, "--delta"}, {&cfg.jz, "--jz"}, {&cfg.jx, "--jx"}, {&cfg.jy, "--jy"},
                    {&cfg.j_plus, "--j-plus"}, {&cfg.j_minus, "--j-minus"}});
            p = CouplingParams::xxx(need(cfg.j, "--j"), cfg.hbar);
        } else if (cfg.model == "xxz") {
            forbid({{&cfg.jx, "--jx"}, {&cfg.jy, "--jy"}, {&cfg.j_plus, "--j-plus"}, {&cfg.j_minus, "--j-minus"}});
            if (cfg.jz.has_value() == cfg.delta.has_value()) {
                throw UsageError("xxz: give exactly one of --jz and --delta");
            }
            p = cfg.jz ? CouplingParams::xxz(need(cfg.j, "--j"), *cfg.jz, cfg.hbar)
                       : CouplingParams::xxz_delta(need(cfg.j, "--j"), *cfg.delta, cfg.hbar);
        } else if (cfg.model == "xx") {
            forbid({{&cfg.delta, "--delta"}, {&cfg.jz, "--jz"}, {&cfg.jx, "--jx"}, {&cfg.jy, "--jy"},
                    {&cfg.j_plus, "--j-plus"}, {&cfg.j_minus, "--j-minus"}});
            p = CouplingParams::xx(need(cfg.j, "--j"), cfg.hbar);
        } else {
            forbid({{&cfg.delta, "--delta"}, {&cfg.j, "--j"}});
            const bool cartesian = cfg.jx || cfg.jy;
            const bool pm = cfg.j_plus || cfg.j_minus;
            if (cartesian == pm) {
                throw UsageError("xyz: give either --jx/--jy or --j-plus/--j-minus");
            }
            const double jz = cfg.jz.value_or(0.0);
            p = cartesian ? CouplingParams::xyz(need(cfg.jx, "--jx"), need(cfg.jy, "--jy"), jz)
                          : CouplingParams::xyz_pm(need(cfg.j_plus, "--j-plus"), need(cfg.j_minus, "--j-minus"), jz);
            p.hbar = cfg.hbar;
        }
        p.bonds = cfg.bonds;
        p.validate();
        return p;
    } catch (const BadParams &e) {
        throw UsageError(e.what());
    }
}

ComplexPoint resolve_psi(const RunConfig &cfg) {
    if (cfg.psi.has_value() == cfg.theta.has_value()) {
        throw UsageError("give exactly one of --psi and --theta");
    }
    if (cfg.psi) {
        return ComplexPoint{*cfg.psi};
    }
    return ComplexPoint{std::cos(*cfg.theta), std::sin(*cfg.theta)};
}

StateId resolve_state(const RunConfig &cfg) {
    if (!cfg.state) {
        throw UsageError("missing --state");
    }
    const auto id = parse_state_id(*cfg.state);
    if (!id) {
        throw UsageError("unknown --state '" + *cfg.state + "'");
    }
    return *id;
}

} // namespace qcs::cli
