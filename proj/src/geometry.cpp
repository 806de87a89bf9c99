#include "tilewave/geometry.hpp"
#include "tilewave/overlay.hpp"

#include <algorithm>

namespace tilewave::geometry {

Mat2 Mat2::from_rational(Rational m11, Rational m12, Rational m21, Rational m22) {
    Mat2 m;
    m.a11 = std::move(m11);
    m.a12 = std::move(m12);
    m.a21 = std::move(m21);
    m.a22 = std::move(m22);
    m.shadow = {to_double(m.a11), to_double(m.a12), to_double(m.a21), to_double(m.a22)};
    m.exact = true;
    return m;
}

Mat2 Mat2::from_shadow(double m11, double m12, double m21, double m22) {
    Mat2 m;
    m.shadow = {m11, m12, m21, m22};
    m.exact = false;
    return m;
}

Mat2 Mat2::mul(const Mat2& o) const {
    if (exact && o.exact) {
        return from_rational(a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                             a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22);
    }
    const auto& s = shadow;
    const auto& t = o.shadow;
    return from_shadow(s[0] * t[0] + s[1] * t[2], s[0] * t[1] + s[1] * t[3],
                       s[2] * t[0] + s[3] * t[2], s[2] * t[1] + s[3] * t[3]);
}

Mat2 Mat2::transpose() const {
    if (exact) return from_rational(a11, a21, a12, a22);
    return from_shadow(shadow[0], shadow[2], shadow[1], shadow[3]);
}

Mat2 Mat2::inverse() const {
    if (exact) {
        Rational d = det();
        if (d == 0) throw std::domain_error("Mat2::inverse: singular matrix");
        return from_rational(a22 / d, -a12 / d, -a21 / d, a11 / d);
    }
    double d = det_shadow();
    if (d == 0) throw std::domain_error("Mat2::inverse: singular matrix");
    return from_shadow(shadow[3] / d, -shadow[1] / d, -shadow[2] / d, shadow[0] / d);
}

Mat2 Mat2::inverse_transpose() const { return inverse().transpose(); }

Rational signed_area(const Polygon& p) {
    Rational s(0);
    size_t n = p.v.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = p.v[i];
        const Point2& b = p.v[(i + 1) % n];
        s += cross(a, b);
    }
    return s / 2;
}

Rational polygon_area(const Polygon& p) {
    if (p.v.size() < 3) throw std::invalid_argument("polygon_area: fewer than 3 vertices");
    Rational a = signed_area(p);
    if (a <= 0) throw std::invalid_argument("polygon_area: degenerate or misoriented polygon");
    return a;
}

Polygon normalized(Polygon p) {
    if (signed_area(p) < 0) std::reverse(p.v.begin(), p.v.end());
    // merge collinear consecutive vertices and drop duplicates
    std::vector<Point2> out;
    size_t n = p.v.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& prev = p.v[(i + n - 1) % n];
        const Point2& cur = p.v[i];
        const Point2& next = p.v[(i + 1) % n];
        if (cur == next) continue;
        if (orient(prev, cur, next) == 0 && !(prev == cur)) continue;
        out.push_back(cur);
    }
    if (out.size() < 3) throw std::invalid_argument("normalized: zero-area polygon");
    auto smallest = std::min_element(out.begin(), out.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(out.begin(), smallest, out.end());
    return Polygon(std::move(out));
}

bool polygon_is_convex(const Polygon& p) {
    size_t n = p.v.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        if (orient(p.v[i], p.v[(i + 1) % n], p.v[(i + 2) % n]) < 0) return false;
    }
    return true;
}

namespace {

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_properly_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

bool polygon_is_simple(const Polygon& p) {
    size_t n = p.v.size();
    for (size_t i = 0; i < n; ++i) {
        Point2 a = p.v[i], b = p.v[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            Point2 c = p.v[j], d = p.v[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (segments_properly_cross(a, b, c, d)) return false;
            if (!adjacent) {
                // non-adjacent edges may not even touch
                if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
                    on_segment(c, d, b))
                    return false;
            }
        }
    }
    return true;
}

Rational Region::area() const {
    Rational s(0);
    for (const auto& p : parts) s += polygon_area(p);
    return s;
}

double ShadowRegion::area() const {
    double total = 0;
    for (const auto& p : parts) {
        double s = 0;
        size_t n = p.v.size();
        for (size_t i = 0; i < n; ++i) {
            const auto& a = p.v[i];
            const auto& b = p.v[(i + 1) % n];
            s += a.x * b.y - a.y * b.x;
        }
        total += s / 2;
    }
    return total;
}

ShadowRegion shadow_of(const Region& r) {
    ShadowRegion out;
    out.parts.reserve(r.parts.size());
    for (const auto& p : r.parts) {
        ShadowPolygon sp;
        sp.v.reserve(p.v.size());
        for (const auto& q : p.v) sp.v.push_back({to_double(q.x), to_double(q.y)});
        out.parts.push_back(std::move(sp));
    }
    return out;
}

Location locate(const Polygon& poly, const Point2& p) {
    size_t n = poly.v.size();
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = poly.v[i];
        const Point2& b = poly.v[(i + 1) % n];
        if (on_segment(a, b, p)) return Location::Boundary;
        // upward ray crossing with half-open rule on y
        bool a_below = a.y <= p.y, b_below = b.y <= p.y;
        if (a_below != b_below) {
            // x-coordinate of edge at height p.y, compared exactly via orientation
            int o = orient(a, b, p);
            if (b.y > a.y ? o > 0 : o < 0) ++crossings;
        }
    }
    return (crossings & 1) ? Location::Inside : Location::Outside;
}

Location locate(const Region& r, const Point2& p) {
    for (const auto& part : r.parts) {
        Location loc = locate(part, p);
        if (loc != Location::Outside) return loc;
    }
    return Location::Outside;
}

BBox bbox(const Polygon& p) {
    BBox b{p.v[0].x, p.v[0].x, p.v[0].y, p.v[0].y};
    for (const auto& q : p.v) {
        b.xmin = std::min(b.xmin, q.x);
        b.xmax = std::max(b.xmax, q.x);
        b.ymin = std::min(b.ymin, q.y);
        b.ymax = std::max(b.ymax, q.y);
    }
    return b;
}

BBox bbox(const Region& r) {
    if (r.empty()) throw std::invalid_argument("bbox: empty region");
    BBox b = bbox(r.parts[0]);
    for (size_t i = 1; i < r.parts.size(); ++i) {
        BBox c = bbox(r.parts[i]);
        b.xmin = std::min(b.xmin, c.xmin);
        b.xmax = std::max(b.xmax, c.xmax);
        b.ymin = std::min(b.ymin, c.ymin);
        b.ymax = std::max(b.ymax, c.ymax);
    }
    return b;
}

Region affine_image(const Region& r, const Mat2& m, const Point2& t) {
    m.require_exact("affine_image");
    if (m.det() == 0) throw std::domain_error("affine_image: singular matrix");
    Region out;
    out.parts.reserve(r.parts.size());
    for (const auto& p : r.parts) {
        std::vector<Point2> v;
        v.reserve(p.v.size());
        for (const auto& q : p.v) v.push_back(m.apply(q) + t);
        out.parts.push_back(normalized(Polygon(std::move(v))));
    }
    return out;
}

ShadowRegion affine_image(const ShadowRegion& r, const Mat2& m, const ShadowPoint& t) {
    ShadowRegion out;
    out.parts.reserve(r.parts.size());
    bool flip = m.det_shadow() < 0;
    for (const auto& p : r.parts) {
        ShadowPolygon sp;
        sp.v.reserve(p.v.size());
        for (const auto& q : p.v) {
            ShadowPoint w = m.apply(q);
            sp.v.push_back({w.x + t.x, w.y + t.y});
        }
        if (flip) std::reverse(sp.v.begin(), sp.v.end());
        out.parts.push_back(std::move(sp));
    }
    return out;
}

Region translate(const Region& r, const Point2& t) {
    Region out;
    out.parts.reserve(r.parts.size());
    for (const auto& p : r.parts) {
        std::vector<Point2> v;
        v.reserve(p.v.size());
        for (const auto& q : p.v) v.push_back(q + t);
        out.parts.push_back(Polygon(std::move(v)));
    }
    return out;
}

namespace {

// Sutherland-Hodgman half-plane clip: keep the side left of a->b.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Point2& a,
                                   const Point2& b) {
    std::vector<Point2> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& cur = poly[i];
        const Point2& nxt = poly[(i + 1) % n];
        int oc = orient(a, b, cur);
        int on = orient(a, b, nxt);
        if (oc >= 0) out.push_back(cur);
        if ((oc > 0 && on < 0) || (oc < 0 && on > 0)) {
            // exact intersection of cur->nxt with the line a->b:
            // solve cross(b-a, cur + t*d - a) = 0 for t
            Point2 d = nxt - cur;
            Rational t = cross(b - a, a - cur) / cross(b - a, d);
            out.push_back({cur.x + t * d.x, cur.y + t * d.y});
        }
    }
    return out;
}

}  // namespace

Region clip(const Region& r, const Polygon& window) {
    if (!polygon_is_convex(window)) throw std::invalid_argument("clip: window must be convex");
    Region out;
    for (const auto& part : r.parts) {
        if (polygon_is_convex(part)) {
            std::vector<Point2> poly = part.v;
            size_t wn = window.v.size();
            for (size_t i = 0; i < wn && !poly.empty(); ++i) {
                poly = clip_halfplane(poly, window.v[i], window.v[(i + 1) % wn]);
            }
            if (poly.size() >= 3) {
                Polygon q(std::move(poly));
                if (signed_area(q) > 0) out.parts.push_back(normalized(std::move(q)));
            }
        } else {
            // general parts go through the exact overlay engine (overlay.cpp)
            Region cells = detail::clip_general(part, window);
            for (auto& c : cells.parts) out.parts.push_back(std::move(c));
        }
    }
    return out;
}

Lattice2 Lattice2::from_basis(const Mat2& b) {
    b.require_exact("Lattice2");
    Rational d = b.det();
    if (d == 0) throw std::domain_error("Lattice2: singular basis");
    Lattice2 g;
    g.basis = b;
    g.covolume = d > 0 ? d : -d;
    return g;
}

Lattice2 Lattice2::diagonal(const Rational& alpha, const Rational& beta) {
    return from_basis(Mat2::from_rational(alpha, 0, 0, beta));
}

Polygon Lattice2::fundamental_domain() const {
    Point2 o(0, 0);
    Point2 e1(basis.a11, basis.a21);
    Point2 e2(basis.a12, basis.a22);
    return normalized(Polygon({o, e1, e1 + e2, e2}));
}

std::vector<long> CoverageReport::multiplicity_classes() const {
    std::vector<long> cls;
    for (const auto& c : cells) {
        if (std::find(cls.begin(), cls.end(), c.multiplicity) == cls.end())
            cls.push_back(c.multiplicity);
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

Rational CoverageReport::class_area(long multiplicity) const {
    Rational s(0);
    for (const auto& c : cells)
        if (c.multiplicity == multiplicity) s += polygon_area(c.poly);
    return s;
}

}  // namespace tilewave::geometry
