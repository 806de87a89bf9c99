#pragma once

#include "tilewave/geometry.hpp"

#include <optional>

namespace tilewave::groups {

using geometry::Mat2;

/// Parameters of the shear-and-scale dilation family: scaling a > 1,
/// shearing step b > 0, anisotropy exponent c (scaling acts as diag(a, a^c)).
/// Exact-path operations require integer c; otherwise matrices are
/// shadow-valued.
struct ShearletParams {
    Rational a, b, c;

    static ShearletParams make(Rational a, Rational b, Rational c = Rational(1, 2)) {
        if (a <= 1) throw std::invalid_argument("ShearletParams: a > 1 required");
        if (b <= 0) throw std::invalid_argument("ShearletParams: b > 0 required");
        return {std::move(a), std::move(b), std::move(c)};
    }
    bool exact_path() const { return is_integer(c); }
};

/// Discrete element A_{a^k} S_{mb}.
struct ShearElement {
    long k = 0, m = 0;
};

/// Element S_y A_s of the complement cell: s in (1/a, 1), y in (-b/2, b/2).
struct ContinuousShearFactor {
    double s = 1, y = 0;
};

/// Rotation-and-scale family: integer scale a >= 2, even order n > 2.
struct SimilitudeParams {
    long a = 2, n = 6;

    static SimilitudeParams make(long a, long n) {
        if (a < 2) throw std::invalid_argument("SimilitudeParams: a >= 2 required");
        if (n <= 2 || n % 2 != 0)
            throw std::invalid_argument("SimilitudeParams: even n > 2 required");
        return {a, n};
    }
};

/// Discrete element a^k R_n^l with 0 <= l < n/2.
struct SimilitudeElement {
    long k = 0, l = 0;
};

/// A_{a^k} S_{mb} as a matrix; exact when c is an integer.
Mat2 shear_matrix(const ShearElement& e, const ShearletParams& p);

/// a^k R_n^l; always shadow-valued (single rotation by 2*pi*l/n, no repeated
/// multiplication).
Mat2 similitude_matrix(const SimilitudeElement& e, const SimilitudeParams& p);

/// (R_n)^l as a single rotation.
Mat2 rotation_matrix(long l, const SimilitudeParams& p);

/// g^{-T}: the dual action on the frequency plane.
Mat2 dual_action(const ShearElement& e, const ShearletParams& p);
Mat2 dual_action(const SimilitudeElement& e, const SimilitudeParams& p);

/// Normal-form pair (s, y) representing S_y A_s.
struct ShearFactorExact {
    Rational s, y;
};

/// Exact composition via A_s S_y = S_{s^{1-c} y} A_s; requires integer c.
ShearFactorExact compose(const ShearFactorExact& g1, const ShearFactorExact& g2,
                         const ShearletParams& p);
ContinuousShearFactor compose(const ContinuousShearFactor& g1, const ContinuousShearFactor& g2,
                              const ShearletParams& p);

/// Unique factorization S_r A_t = A_{a^k} S_{mb} S_y A_s.
struct Factorization {
    long k = 0, m = 0;
    double s = 1, y = 0;
};

/// Tolerance on the fractional parts that defines the measure-zero
/// exceptional set (t in a^Z, or the shear coordinate on a half-integer).
inline constexpr double kBoundaryTol = 1e-9;

/// nullopt means the input lies on the exceptional set (a boundary point).
std::optional<Factorization> factorize(double t, double r, const ShearletParams& p);

}  // namespace tilewave::groups
