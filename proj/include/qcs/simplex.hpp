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
#include <functional>

namespace qcs {

struct SimplexResult {
    double x;
    double y;
    double value;
    int iterations;
};

struct SimplexOptions {
    double initial_step = 0.05;
    double diameter_tolerance = 1e-8;
    int max_iterations = 10000;
};

/// Nelder-Mead minimization of f(x, y) from `seed`. Stops once every vertex
/// lies within `diameter_tolerance` of the best one. Throws NoConvergence
/// when the iteration budget runs out.
SimplexResult nelder_mead(const std::function<double(double, double)> &f, std::array<double, 2> seed,
                          const SimplexOptions &options = {});

} // namespace qcs
