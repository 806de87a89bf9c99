#pragma once

#include "tilewave/rational.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace tilewave::geometry {

/// Thrown when an exact-path operation receives shadow (floating) data.
struct IrrationalData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point2 {
    Rational x, y;

    Point2() = default;
    Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator-() const { return {-x, -y}; }
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

/// cross(a, b) = a.x*b.y - a.y*b.x
inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

/// Sign of the turn a->b->c: >0 left, <0 right, 0 collinear.
inline int orient(const Point2& a, const Point2& b, const Point2& c) {
    Rational v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

struct ShadowPoint {
    double x = 0, y = 0;
};

/// 2x2 matrix with exact rational entries and a double shadow.  Rotations and
/// non-integer anisotropy powers only exist on the shadow side; exact-path
/// operations refuse such matrices (IrrationalData).
struct Mat2 {
    Rational a11, a12, a21, a22;
    std::array<double, 4> shadow{1, 0, 0, 1};  // row-major
    bool exact = true;

    static Mat2 from_rational(Rational m11, Rational m12, Rational m21, Rational m22);
    static Mat2 from_shadow(double m11, double m12, double m21, double m22);
    static Mat2 identity() { return from_rational(1, 0, 0, 1); }

    bool is_exact() const { return exact; }
    void require_exact(const char* what) const {
        if (!exact) throw IrrationalData(std::string(what) + ": exact matrix required");
    }

    Rational det() const {
        require_exact("det");
        return a11 * a22 - a12 * a21;
    }
    double det_shadow() const { return shadow[0] * shadow[3] - shadow[1] * shadow[2]; }

    Mat2 mul(const Mat2& o) const;
    Mat2 transpose() const;
    Mat2 inverse() const;           // throws on singular
    Mat2 inverse_transpose() const; // transpose of the inverse

    Point2 apply(const Point2& p) const {
        require_exact("apply");
        return {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y};
    }
    ShadowPoint apply(const ShadowPoint& p) const {
        return {shadow[0] * p.x + shadow[1] * p.y, shadow[2] * p.x + shadow[3] * p.y};
    }
};

/// Simple polygon, counter-clockwise, no three consecutive collinear vertices.
struct Polygon {
    std::vector<Point2> v;

    Polygon() = default;
    explicit Polygon(std::vector<Point2> pts) : v(std::move(pts)) {}

    size_t size() const { return v.size(); }
    const Point2& operator[](size_t i) const { return v[i]; }
};

Rational signed_area(const Polygon& p);

/// Exact area of a valid (CCW) polygon; rejects degenerate input.
Rational polygon_area(const Polygon& p);

/// Canonical form: CCW orientation, collinear runs merged, lexicographically
/// smallest vertex first.  Throws on fewer than 3 surviving vertices.
Polygon normalized(Polygon p);

bool polygon_is_convex(const Polygon& p);
bool polygon_is_simple(const Polygon& p);  // O(n^2) edge-pair check

/// Finite union of pairwise interior-disjoint simple polygons.
struct Region {
    std::vector<Polygon> parts;

    Region() = default;
    explicit Region(std::vector<Polygon> ps) : parts(std::move(ps)) {}
    static Region single(Polygon p) { return Region({std::move(p)}); }

    bool empty() const { return parts.empty(); }
    Rational area() const;
};

struct ShadowPolygon {
    std::vector<ShadowPoint> v;
};

struct ShadowRegion {
    std::vector<ShadowPolygon> parts;
    double area() const;
};

ShadowRegion shadow_of(const Region& r);

enum class Location { Inside, Boundary, Outside };

Location locate(const Polygon& poly, const Point2& p);
Location locate(const Region& r, const Point2& p);

struct BBox {
    Rational xmin, xmax, ymin, ymax;
};

BBox bbox(const Polygon& p);
BBox bbox(const Region& r);

/// Exact affine image m*x + t.  Orientation is re-normalized when det(m) < 0.
Region affine_image(const Region& r, const Mat2& m, const Point2& t);
ShadowRegion affine_image(const ShadowRegion& r, const Mat2& m, const ShadowPoint& t);
Region translate(const Region& r, const Point2& t);

/// Exact intersection with a convex window.
Region clip(const Region& r, const Polygon& window);

/// Full-rank lattice basis*Z^2; the basis must be exact.
struct Lattice2 {
    Mat2 basis;
    Rational covolume;  // |det basis|

    static Lattice2 from_basis(const Mat2& b);
    static Lattice2 diagonal(const Rational& alpha, const Rational& beta);

    Point2 point(long i, long j) const {
        return {basis.a11 * i + basis.a12 * j, basis.a21 * i + basis.a22 * j};
    }
    /// Half-open fundamental domain basis*[0,1)^2 as a CCW parallelogram.
    Polygon fundamental_domain() const;
};

struct CoverageCell {
    Polygon poly;
    long multiplicity = 0;
};

/// Exact decomposition of a fundamental domain by covering multiplicity.
/// The cells partition the fundamental domain; boundary points are never
/// counted (all tiling statements hold almost everywhere).
struct CoverageReport {
    bool is_constant = false;
    long k = 0;  // the constant value when is_constant
    std::vector<CoverageCell> cells;
    Rational total_area_check;  // sum of multiplicity*area over cells

    std::vector<long> multiplicity_classes() const;
    Rational class_area(long multiplicity) const;
};

}  // namespace tilewave::geometry
