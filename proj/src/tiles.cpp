#include "tilewave/tiles.hpp"

#include <algorithm>
#include <cmath>

namespace tilewave::tiles {

using geometry::Mat2;
using geometry::Polygon;

const std::array<const char*, 6> ShearletTile::labels = {"W+,1", "W+,2", "W+,3",
                                                         "W-,1", "W-,2", "W-,3"};
const std::array<const char*, 6> SimilitudeTile::labels = {"V+,1", "V+,2", "V+,3",
                                                           "V-,1", "V-,2", "V-,3"};

namespace {

Polygon rect(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    return geometry::normalized(
        Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}));
}

Region negate(const Region& r) {
    return geometry::affine_image(r, Mat2::from_rational(-1, 0, 0, -1), {Rational(0), Rational(0)});
}

}  // namespace

ShearletTile shearlet_tile(const groups::ShearletParams& p) {
    const Rational& a = p.a;
    const Rational& b = p.b;
    Rational h = b / 2;        // wedge half-height at x = 1
    Rational ah = a * b / 2;   // wedge half-height at x = a

    Polygon wedge = geometry::normalized(Polygon({{1, -h}, {a, -ah}, {a, ah}, {1, h}}));
    Region positive = Region::single(wedge);

    ShearletTile t;
    t.params = p;
    t.region = positive;
    Region neg = negate(positive);
    for (auto& part : neg.parts) t.region.parts.push_back(part);

    // partition by exact clipping at |y| = b/2
    t.partition[0] = clip(positive, rect(0, -h, a + 1, h));       // W+,1
    t.partition[1] = clip(positive, rect(0, h, a + 1, ah + 1));   // W+,2
    t.partition[2] = clip(positive, rect(0, -ah - 1, a + 1, -h)); // W+,3
    for (int i = 0; i < 3; ++i) t.partition[3 + i] = negate(t.partition[i]);
    return t;
}

ShiftMerge shearlet_shift_merge(const ShearletTile& t) {
    const Rational& a = t.params.a;
    const Rational& b = t.params.b;
    Rational v = (a * b + b) / 2;

    // W+,1 -> (-1,0); W+,2 -> (-1,0); W+,3 -> (-2,v);
    // W-,1 -> (1,0);  W-,2 -> (2,v);  W-,3 -> (1,0)
    std::array<Point2, 6> shifts = {Point2{-1, 0}, Point2{-1, 0}, Point2{Rational(-2), v},
                                    Point2{1, 0},  Point2{Rational(2), v}, Point2{1, 0}};

    ShiftMerge out;
    out.shifts.assign(shifts.begin(), shifts.end());

    std::vector<Region> shifted;
    shifted.reserve(6);
    for (int i = 0; i < 6; ++i) shifted.push_back(translate(t.partition[i], shifts[i]));

    auto cells = geometry::overlay(shifted);
    for (const auto& c : cells) {
        if (c.multiplicity > 1) {
            out.overlap = c;
            return out;
        }
    }
    out.merged = geometry::cells_to_region(cells);
    return out;
}

std::vector<LatticePrediction> shearlet_lattice_candidates(const groups::ShearletParams& p,
                                                           long denom_bound) {
    const Rational& a = p.a;
    const Rational& b = p.b;
    Rational area = b * (a * a - 1);
    std::vector<LatticePrediction> out;

    // closed-form candidate: minimal alpha with {1, 2a-2} in alpha*Z and
    // minimal beta with {(ab+b)/2, (ab+2b)/2} in beta*Z
    {
        Rational alpha = rat_gcd(Rational(1), 2 * a - 2);
        Rational beta = rat_gcd((a * b + b) / 2, (a * b + 2 * b) / 2);
        Rational k = (2 * a - 2) / alpha * (a * b + 2 * b) / (2 * beta);
        LatticePrediction cand;
        cand.lattice = Lattice2::diagonal(alpha, beta);
        cand.k_predicted = rat_num(k).convert_to<long>();
        cand.consistent = (k * alpha * beta == area);
        cand.source = LatticeSource::FormulaDerived;
        out.push_back(cand);
    }

    // area-forced family: alpha = 1/j (so the unit x-shifts stay in the
    // lattice and the merged width 2(a-1) splits evenly), beta = (ab+b)/(2i)
    // (the y-shift and merged height), k = area/(alpha*beta) integral
    Rational width = 2 * (a - 1);
    Rational height = (a * b + b) / 2;
    for (long j = 1; j <= denom_bound; ++j) {
        Rational alpha(1, j);
        if (!is_integer(width / alpha)) continue;
        for (long i = 1; i <= denom_bound; ++i) {
            Rational beta = height / i;
            Rational k = area / (alpha * beta);
            if (!is_integer(k)) continue;
            LatticePrediction cand;
            cand.lattice = Lattice2::diagonal(alpha, beta);
            cand.k_predicted = rat_num(k).convert_to<long>();
            cand.consistent = true;
            cand.source = LatticeSource::AreaForced;
            out.push_back(cand);
        }
    }
    std::stable_sort(out.begin() + 1, out.end(), [](const auto& x, const auto& y) {
        return x.k_predicted < y.k_predicted;
    });
    return out;
}

SimilitudeTile similitude_tile(const groups::SimilitudeParams& p) {
    Rational a(p.a);
    Polygon trap = geometry::normalized(Polygon({{-1, 1}, {1, 1}, {a, a}, {-a, a}}));
    Region positive = Region::single(trap);

    SimilitudeTile t;
    t.params = p;
    t.region = positive;
    Region neg = negate(positive);
    for (auto& part : neg.parts) t.region.parts.push_back(part);

    // partition at |x| = 1 (the scaled shear width)
    t.partition[0] = clip(positive, rect(-1, 0, 1, a + 1));        // V+,1
    t.partition[1] = clip(positive, rect(-a - 1, 0, -1, a + 1));   // V+,2
    t.partition[2] = clip(positive, rect(1, 0, a + 1, a + 1));     // V+,3
    for (int i = 0; i < 3; ++i) t.partition[3 + i] = negate(t.partition[i]);
    return t;
}

double SimilitudeTile::b() const { return std::tan(M_PI / double(params.n)); }

LatticePrediction similitude_lattice(const groups::SimilitudeParams& p) {
    Rational a(p.a);
    LatticePrediction out;
    out.lattice = Lattice2::diagonal(a + 1, 1);
    out.k_predicted = 2 * (p.a - 1);
    out.consistent = (Rational(out.k_predicted) * (a + 1) == 2 * (a * a - 1));
    out.source = LatticeSource::FormulaDerived;
    return out;
}

ShiftMerge similitude_shift_merge(const SimilitudeTile& t) {
    Rational a(t.params.a);
    std::array<Point2, 6> shifts = {Point2{0, -1},           Point2{0, -1},
                                    Point2{-(a + 1), -a},    Point2{0, 1},
                                    Point2{-(a + 1), a},     Point2{0, 1}};
    // V+,1 -> (0,-1); V+,2 -> (0,-1); V+,3 -> (-(a+1),-a);
    // V-,1 -> (0,1);  V-,2 -> (-(a+1),a); V-,3 -> (0,1)

    ShiftMerge out;
    out.shifts.assign(shifts.begin(), shifts.end());
    std::vector<Region> shifted;
    shifted.reserve(6);
    for (int i = 0; i < 6; ++i) shifted.push_back(translate(t.partition[i], shifts[i]));
    auto cells = geometry::overlay(shifted);
    for (const auto& c : cells) {
        if (c.multiplicity > 1) {
            out.overlap = c;
            return out;
        }
    }
    out.merged = geometry::cells_to_region(cells);
    return out;
}

geometry::ShadowPolygon ring_outer_polygon(const groups::SimilitudeParams& p, long level) {
    // vertices of K_n on the circle of radius a/cos(pi/n), one vertex at
    // (tan(pi/n)*a, a); the whole polygon scaled by a^level
    double a = double(p.a);
    double scale = std::pow(a, double(level));
    double radius = scale * a / std::cos(M_PI / double(p.n));
    geometry::ShadowPolygon poly;
    poly.v.reserve(p.n);
    for (long j = 0; j < p.n; ++j) {
        double theta = M_PI / 2 - M_PI / double(p.n) + 2.0 * M_PI * double(j) / double(p.n);
        poly.v.push_back({radius * std::cos(theta), radius * std::sin(theta)});
    }
    return poly;
}

geometry::ShadowRegion polygon_ring(const groups::SimilitudeParams& p, long level) {
    geometry::ShadowPolygon outer = ring_outer_polygon(p, level);
    double inv_a = 1.0 / double(p.a);
    geometry::ShadowRegion ring;
    ring.parts.reserve(p.n);
    for (long j = 0; j < p.n; ++j) {
        const auto& v0 = outer.v[j];
        const auto& v1 = outer.v[(j + 1) % p.n];
        geometry::ShadowPolygon sector;
        sector.v = {{inv_a * v0.x, inv_a * v0.y},
                    {v0.x, v0.y},
                    {v1.x, v1.y},
                    {inv_a * v1.x, inv_a * v1.y}};
        ring.parts.push_back(std::move(sector));
    }
    return ring;
}

}  // namespace tilewave::tiles
