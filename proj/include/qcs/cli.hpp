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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcs/entangled_basis.hpp"
#include "qcs/spin_models.hpp"

namespace qcs::cli {

/// Raised for malformed or inconsistent flags; maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    std::string model = "xyz";
    std::optional<std::string> state;

    std::optional<double> j;
    std::optional<double> delta;
    std::optional<double> jz;
    std::optional<double> jx;
    std::optional<double> jy;
    std::optional<double> j_plus;
    std::optional<double> j_minus;
    double hbar = 1.0;

    std::optional<Complex> psi;
    std::optional<double> theta;

    Window window{};
    double step = 0.05;
    std::optional<double> t_max;
    std::optional<double> dt;

    QSource source = QSource::Direct;
    Bonds bonds = Bonds::Chain;
    std::string output = "-";
    std::uint64_t seed = 20240101;
    /// 0: QCS_THREADS or hardware concurrency.
    unsigned threads = 0;
};

/// Parses argv into a RunConfig. Throws UsageError on bad flags;
/// `help_text` receives the help screen when --help is given.
RunConfig parse_args(int argc, const char *const *argv, std::string *help_text = nullptr);

/// Resolves the coupling flags into validated parameters; throws UsageError
/// for missing or mutually exclusive coupling styles.
CouplingParams resolve_params(const RunConfig &cfg);

/// psi from --psi, or e^{i theta} from --theta; throws UsageError if neither
/// or both are given.
ComplexPoint resolve_psi(const RunConfig &cfg);

StateId resolve_state(const RunConfig &cfg);

/// Each command writes its CSV or report to `out` and returns an exit code.
int cmd_state(const RunConfig &cfg, std::ostream &out);
int cmd_surface(const RunConfig &cfg, std::ostream &out);
int cmd_extrema(const RunConfig &cfg, std::ostream &out);
int cmd_evolve(const RunConfig &cfg, std::ostream &out);
int cmd_verify(const RunConfig &cfg, std::ostream &out);

/// Dispatches on cfg.command, honoring cfg.output ("-" = `out`).
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Full entry point used by the executable.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Shortest-roundtrip-safe formatting (%.17g).
std::string format_double(double v);

/// Reads a surface CSV (skipping '#' lines) back into rows of numbers.
std::vector<std::vector<double>> read_csv_numbers(std::istream &in);

} // namespace qcs::cli
