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
#include "qcs/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

struct Vertex {
    double x, y, f;
};

} // namespace

SimplexResult nelder_mead(const std::function<double(double, double)> &f, std::array<double, 2> seed,
                          const SimplexOptions &options) {
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    const double h = options.initial_step;
    std::array<Vertex, 3> s{Vertex{seed[0], seed[1], 0.0}, Vertex{seed[0] + h, seed[1], 0.0},
                            Vertex{seed[0], seed[1] + h, 0.0}};
    for (auto &v : s) {
        v.f = f(v.x, v.y);
    }
    auto eval = [&](double x, double y) { return Vertex{x, y, f(x, y)}; };

    for (int it = 0; it < options.max_iterations; ++it) {
        std::sort(s.begin(), s.end(), [](const Vertex &a, const Vertex &b) { return a.f < b.f; });

        double diameter = 0.0;
        for (int k = 1; k < 3; ++k) {
            diameter = std::max(diameter, std::hypot(s[k].x - s[0].x, s[k].y - s[0].y));
        }
        if (diameter < options.diameter_tolerance) {
            return {s[0].x, s[0].y, s[0].f, it};
        }

        const double cx = 0.5 * (s[0].x + s[1].x);
        const double cy = 0.5 * (s[0].y + s[1].y);
        const Vertex r = eval(cx + kReflect * (cx - s[2].x), cy + kReflect * (cy - s[2].y));

        if (r.f < s[0].f) {
            const Vertex e = eval(cx + kExpand * (r.x - cx), cy + kExpand * (r.y - cy));
            s[2] = e.f < r.f ? e : r;
            continue;
        }
        if (r.f < s[1].f) {
            s[2] = r;
            continue;
        }
        const bool outside = r.f < s[2].f;
        const Vertex c = outside ? eval(cx + kContract * (r.x - cx), cy + kContract * (r.y - cy))
                                 : eval(cx + kContract * (s[2].x - cx), cy + kContract * (s[2].y - cy));
        if (c.f < (outside ? r.f : s[2].f)) {
            s[2] = c;
            continue;
        }
        for (int k = 1; k < 3; ++k) {
            s[k] = eval(s[0].x + kShrink * (s[k].x - s[0].x), s[0].y + kShrink * (s[k].y - s[0].y));
        }
    }
    throw NoConvergence("nelder_mead: iteration budget exhausted");
}

} // namespace qcs
