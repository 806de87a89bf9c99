#include "tilewave/groups.hpp"

#include <cmath>

namespace tilewave::groups {

Mat2 shear_matrix(const ShearElement& e, const ShearletParams& p) {
    // A_{a^k} S_{mb} = [[a^k, a^k*m*b], [0, a^{ck}]]
    if (p.exact_path()) {
        Rational ak = rat_pow(p.a, e.k);
        Rational ack = rat_pow(p.a, e.k * rat_num(p.c).convert_to<long>());
        return Mat2::from_rational(ak, ak * e.m * p.b, 0, ack);
    }
    double a = to_double(p.a), b = to_double(p.b), c = to_double(p.c);
    double ak = std::pow(a, double(e.k));
    double ack = std::pow(a, c * double(e.k));
    return Mat2::from_shadow(ak, ak * double(e.m) * b, 0, ack);
}

Mat2 rotation_matrix(long l, const SimilitudeParams& p) {
    long lr = ((l % p.n) + p.n) % p.n;
    double theta = 2.0 * M_PI * double(lr) / double(p.n);
    double co = std::cos(theta), si = std::sin(theta);
    return Mat2::from_shadow(co, -si, si, co);
}

Mat2 similitude_matrix(const SimilitudeElement& e, const SimilitudeParams& p) {
    double ak = std::pow(double(p.a), double(e.k));
    Mat2 r = rotation_matrix(e.l, p);
    return Mat2::from_shadow(ak * r.shadow[0], ak * r.shadow[1], ak * r.shadow[2],
                             ak * r.shadow[3]);
}

Mat2 dual_action(const ShearElement& e, const ShearletParams& p) {
    return shear_matrix(e, p).inverse_transpose();
}

Mat2 dual_action(const SimilitudeElement& e, const SimilitudeParams& p) {
    // (a^k R^l)^{-T} = a^{-k} R^l: rotations are orthogonal
    return similitude_matrix({-e.k, e.l}, p);
}

ShearFactorExact compose(const ShearFactorExact& g1, const ShearFactorExact& g2,
                         const ShearletParams& p) {
    if (!p.exact_path()) throw geometry::IrrationalData("compose: integer c required");
    long e = 1 - rat_num(p.c).convert_to<long>();
    // S_{y1} A_{s1} S_{y2} A_{s2} = S_{y1 + s1^{1-c} y2} A_{s1 s2}
    return {g1.s * g2.s, g1.y + rat_pow(g1.s, e) * g2.y};
}

ContinuousShearFactor compose(const ContinuousShearFactor& g1, const ContinuousShearFactor& g2,
                              const ShearletParams& p) {
    double e = 1.0 - to_double(p.c);
    return {g1.s * g2.s, g1.y + std::pow(g1.s, e) * g2.y};
}

std::optional<Factorization> factorize(double t, double r, const ShearletParams& p) {
    if (!(t > 0)) throw std::invalid_argument("factorize: t > 0 required");
    double a = to_double(p.a), b = to_double(p.b), c = to_double(p.c);

    // k with a^k in (t, t*a), i.e. s = t*a^{-k} in (1/a, 1).  Integer search
    // around the floating estimate guards against log rounding at binades.
    double la = std::log(t) / std::log(a);
    long k0 = static_cast<long>(std::llround(std::floor(la)));
    long k = 0;
    bool found = false;
    for (long cand = k0 - 1; cand <= k0 + 2 && !found; ++cand) {
        double frac = la - double(cand);
        if (frac > kBoundaryTol && frac < 1.0 - kBoundaryTol) {
            k = cand + 1;  // a^{cand} < t < a^{cand+1}
            found = true;
        }
    }
    if (!found) return std::nullopt;  // t within tolerance of a^Z

    double s = t * std::pow(a, double(-k));
    double u = r * std::pow(a, -(1.0 - c) * double(k));
    double q = u / b;
    long m = static_cast<long>(std::llround(q));
    double h = q - double(m);  // in [-1/2, 1/2]
    if (std::abs(h) >= 0.5 - kBoundaryTol) return std::nullopt;  // shear boundary
    return Factorization{k, m, s, h * b};
}

}  // namespace tilewave::groups
