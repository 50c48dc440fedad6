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
#include "qcs/complex_geometry.hpp"

#include <cmath>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

ComplexPoint finite_or_infinity(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        return ComplexPoint::infinity();
    }
    return ComplexPoint{z};
}

} // namespace

ComplexPoint::ComplexPoint(Complex z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvariantViolation("ComplexPoint: non-finite components; use ComplexPoint::infinity()");
    }
}

Complex ComplexPoint::value() const {
    if (infinite_) {
        throw InfinitePoint("ComplexPoint::value called on the point at infinity");
    }
    return z_;
}

bool ComplexPoint::approx_equal(const ComplexPoint &other, double tol) const {
    if (infinite_ || other.infinite_) {
        return infinite_ == other.infinite_;
    }
    return std::abs(z_.real() - other.z_.real()) <= tol && std::abs(z_.imag() - other.z_.imag()) <= tol;
}

std::ostream &operator<<(std::ostream &os, const ComplexPoint &p) {
    if (p.infinite_) {
        return os << "inf";
    }
    return os << p.z_.real() << (p.z_.imag() < 0 ? "-" : "+") << std::abs(p.z_.imag()) << "i";
}

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::abs(determinant()) > kDeterminantFloor)) {
        throw SingularMap("MobiusMap: |ad - bc| below determinant floor");
    }
}

ComplexPoint MobiusMap::operator()(const ComplexPoint &p) const {
    if (p.is_infinite()) {
        if (c_ == Complex{0.0, 0.0}) {
            return ComplexPoint::infinity();
        }
        return finite_or_infinity(a_ / c_);
    }
    const Complex z = p.value();
    const Complex den = c_ * z + d_;
    if (den == Complex{0.0, 0.0}) {
        return ComplexPoint::infinity();
    }
    return finite_or_infinity((a_ * z + b_) / den);
}

MobiusMap operator*(const MobiusMap &f, const MobiusMap &g) {
    return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
            f.c_ * g.b_ + f.d_ * g.d_};
}

SpherePoint::SpherePoint(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvariantViolation("SpherePoint: cannot normalize a zero or non-finite vector");
    }
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
}

SpherePoint SpherePoint::from_angles(double theta, double phi) {
    // sin(pi) is 1.2e-16, not 0; snap so the south pole projects to infinity.
    if (theta == kPi) {
        return {0.0, 0.0, -1.0};
    }
    const double s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

double SpherePoint::theta() const { return std::atan2(std::hypot(x_, y_), z_); }

double SpherePoint::phi() const {
    double p = std::atan2(y_, x_);
    if (p < 0.0) {
        p += 2.0 * kPi;
    }
    return p >= 2.0 * kPi ? 0.0 : p;
}

ComplexPoint mobius_apply(const MobiusMap &m, const ComplexPoint &p) { return m(p); }

ComplexPoint cross_ratio(const ComplexPoint &p, const ComplexPoint &p1, const ComplexPoint &p2,
                         const ComplexPoint &p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3) {
        throw DegenerateTriple("cross_ratio: reference points must be pairwise distinct");
    }
    if (p == p1) {
        return ComplexPoint{1.0};
    }
    if (p == p2) {
        return ComplexPoint{0.0};
    }
    if (p == p3) {
        return ComplexPoint::infinity();
    }
    // At most one of the four points is infinite here; every difference
    // involving it cancels between numerator and denominator.
    auto diff = [](const ComplexPoint &u, const ComplexPoint &v) -> Complex {
        if (u.is_infinite() || v.is_infinite()) {
            return {1.0, 0.0};
        }
        return u.value() - v.value();
    };
    const Complex num = diff(p, p2) * diff(p1, p3);
    const Complex den = diff(p, p3) * diff(p1, p2);
    return finite_or_infinity(num / den);
}

ComplexPoint symmetric_point(const ComplexPoint &p, SymmetryKind kind) {
    switch (kind) {
    case SymmetryKind::Conjugate:
        return p.is_infinite() ? p : ComplexPoint{std::conj(p.value())};
    case SymmetryKind::NegConjugate:
        return p.is_infinite() ? p : ComplexPoint{-std::conj(p.value())};
    case SymmetryKind::UnitCircle:
    case SymmetryKind::Antipodal: {
        if (p.is_infinite()) {
            return ComplexPoint{0.0};
        }
        const Complex z = p.value();
        if (z == Complex{0.0, 0.0}) {
            return ComplexPoint::infinity();
        }
        const double sign = kind == SymmetryKind::UnitCircle ? 1.0 : -1.0;
        return finite_or_infinity(sign / std::conj(z));
    }
    }
    return p;
}

ComplexPoint stereo_project(const SpherePoint &s) {
    const double x = s.x(), y = s.y(), z = s.z();
    if (z >= 0.0) {
        return finite_or_infinity(Complex{x, y} / (1.0 + z));
    }
    // Southern hemisphere: (x + iy)/(1 + z) = (1 - z)/(x - iy), stable near z = -1.
    const Complex w{x, -y};
    if (w == Complex{0.0, 0.0}) {
        return ComplexPoint::infinity();
    }
    return finite_or_infinity((1.0 - z) / w);
}

SpherePoint stereo_lift(const ComplexPoint &p) {
    if (p.is_infinite()) {
        return {0.0, 0.0, -1.0};
    }
    const Complex w = p.value();
    const double r = std::abs(w);
    if (r <= 1.0) {
        const double r2 = r * r;
        return {2.0 * w.real() / (1.0 + r2), 2.0 * w.imag() / (1.0 + r2), (1.0 - r2) / (1.0 + r2)};
    }
    // |w| > 1: work with 1/conj(w) to avoid overflow of |w|^2.
    const double t2 = 1.0 / (r * r);
    const Complex inv = 1.0 / std::conj(w);
    return {2.0 * inv.real() / (t2 + 1.0), 2.0 * inv.imag() / (t2 + 1.0), (t2 - 1.0) / (t2 + 1.0)};
}

} // namespace qcs
