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
#include <ostream>

#include "qcs/linalg.hpp"

/// Extended complex plane, Moebius maps, and the Riemann (Bloch) sphere.
namespace qcs {

/**
 * A point of the extended complex plane: either a finite complex number or
 * the single point at infinity. Infinity is a distinguished value and is
 * never encoded as an overflowing float pair.
 */
class ComplexPoint {
  public:
    constexpr ComplexPoint() = default;
    ComplexPoint(Complex z); // NOLINT(google-explicit-constructor)
    ComplexPoint(double re, double im = 0.0) : ComplexPoint(Complex{re, im}) {}

    static constexpr ComplexPoint infinity() {
        ComplexPoint p;
        p.infinite_ = true;
        return p;
    }

    [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
    [[nodiscard]] constexpr bool is_finite() const { return !infinite_; }

    /// Finite value; throws InfinitePoint for the point at infinity.
    [[nodiscard]] Complex value() const;
    [[nodiscard]] double re() const { return value().real(); }
    [[nodiscard]] double im() const { return value().imag(); }

    /// Componentwise comparison; infinity is equal only to infinity.
    [[nodiscard]] bool approx_equal(const ComplexPoint &other, double tol = 1e-12) const;

    friend bool operator==(const ComplexPoint &a, const ComplexPoint &b) {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ == b.infinite_;
        }
        return a.z_ == b.z_;
    }

    friend std::ostream &operator<<(std::ostream &os, const ComplexPoint &p);

  private:
    Complex z_{0.0, 0.0};
    bool infinite_ = false;
};

/// w = (a z + b) / (c z + d) with ad - bc != 0.
class MobiusMap {
  public:
    static constexpr double kDeterminantFloor = 1e-14;

    /// Throws SingularMap when |ad - bc| <= kDeterminantFloor.
    MobiusMap(Complex a, Complex b, Complex c, Complex d);

    static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    [[nodiscard]] Complex a() const { return a_; }
    [[nodiscard]] Complex b() const { return b_; }
    [[nodiscard]] Complex c() const { return c_; }
    [[nodiscard]] Complex d() const { return d_; }
    [[nodiscard]] Complex determinant() const { return a_ * d_ - b_ * c_; }

    [[nodiscard]] ComplexPoint operator()(const ComplexPoint &p) const;

    /// Composition: (f * g)(z) = f(g(z)).
    friend MobiusMap operator*(const MobiusMap &f, const MobiusMap &g);

  private:
    Complex a_, b_, c_, d_;
};

/// Unit vector on the Riemann sphere, theta measured from +z.
class SpherePoint {
  public:
    /// Normalizes (x, y, z); throws InvariantViolation for the zero vector.
    SpherePoint(double x, double y, double z);

    /// theta in [0, pi], phi any real (reduced into [0, 2 pi)).
    static SpherePoint from_angles(double theta, double phi);

    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] double y() const { return y_; }
    [[nodiscard]] double z() const { return z_; }
    [[nodiscard]] double theta() const;
    [[nodiscard]] double phi() const;
    [[nodiscard]] SpherePoint antipode() const { return {-x_, -y_, -z_}; }

  private:
    double x_, y_, z_;
};

enum class SymmetryKind {
    Conjugate,    ///< conj(p): mirror in the real axis
    NegConjugate, ///< -conj(p): mirror in the imaginary axis
    UnitCircle,   ///< 1/conj(p): inversion in the unit circle
    Antipodal,    ///< -1/conj(p): antipodal point on the sphere
};

ComplexPoint mobius_apply(const MobiusMap &m, const ComplexPoint &p);

/// (p - p2)(p1 - p3) / ((p - p3)(p1 - p2)); factors containing an infinite
/// argument are dropped. Throws DegenerateTriple unless p1, p2, p3 are
/// pairwise distinct.
ComplexPoint cross_ratio(const ComplexPoint &p, const ComplexPoint &p1, const ComplexPoint &p2,
                         const ComplexPoint &p3);

ComplexPoint symmetric_point(const ComplexPoint &p, SymmetryKind kind);

/// tan(theta/2) e^{i phi}; north pole -> 0, south pole -> infinity.
ComplexPoint stereo_project(const SpherePoint &s);

SpherePoint stereo_lift(const ComplexPoint &p);

} // namespace qcs
