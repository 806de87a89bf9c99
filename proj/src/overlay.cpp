#include "tilewave/overlay.hpp"

#include <algorithm>
#include <cassert>

namespace tilewave::geometry {

namespace {

struct Seg {
    Point2 a, b;  // a.x < b.x, or a.x == b.x (vertical, a.y < b.y)
};

// y-coordinate of a non-vertical segment at abscissa x
Rational seg_y_at(const Seg& s, const Rational& x) {
    return s.a.y + (x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x);
}

void collect_segments(const std::vector<Region>& regions, std::vector<Seg>& segs) {
    for (const auto& r : regions) {
        for (const auto& p : r.parts) {
            size_t n = p.v.size();
            for (size_t i = 0; i < n; ++i) {
                Point2 a = p.v[i], b = p.v[(i + 1) % n];
                if (a == b) continue;
                if (a.x > b.x || (a.x == b.x && a.y > b.y)) std::swap(a, b);
                segs.push_back({std::move(a), std::move(b)});
            }
        }
    }
}

// All x-coordinates where the arrangement can change: endpoints plus every
// pairwise intersection.  Collinear overlaps contribute only endpoints, which
// are already present.
std::vector<Rational> breakpoints(const std::vector<Seg>& segs) {
    std::vector<Rational> xs;
    for (const auto& s : segs) {
        xs.push_back(s.a.x);
        xs.push_back(s.b.x);
    }
    size_t n = segs.size();
    for (size_t i = 0; i < n; ++i) {
        const Seg& s = segs[i];
        Point2 d1 = s.b - s.a;
        for (size_t j = i + 1; j < n; ++j) {
            const Seg& t = segs[j];
            // bbox reject
            if (t.b.x < s.a.x || s.b.x < t.a.x) continue;
            Point2 d2 = t.b - t.a;
            Rational denom = cross(d1, d2);
            if (denom == 0) continue;
            Rational u = cross(t.a - s.a, d2) / denom;
            if (u < 0 || u > 1) continue;
            Rational v = cross(t.a - s.a, d1) / denom;
            if (v < 0 || v > 1) continue;
            xs.push_back(s.a.x + u * d1.x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

Polygon make_cell(const Rational& xl, const Rational& xr, const Rational& lo_l,
                  const Rational& lo_r, const Rational& hi_l, const Rational& hi_r) {
    std::vector<Point2> v;
    v.push_back({xl, lo_l});
    v.push_back({xr, lo_r});
    if (hi_r != lo_r) v.push_back({xr, hi_r});
    if (hi_l != lo_l) v.push_back({xl, hi_l});
    return normalized(Polygon(std::move(v)));
}

}  // namespace

std::vector<OverlayCell> overlay(const std::vector<Region>& regions) {
    std::vector<OverlayCell> out;
    std::vector<Seg> segs;
    collect_segments(regions, segs);
    if (segs.empty()) return out;

    std::vector<BBox> boxes;
    boxes.reserve(regions.size());
    for (const auto& r : regions)
        boxes.push_back(r.empty() ? BBox{Rational(1), Rational(0), Rational(1), Rational(0)}
                                  : bbox(r));

    std::vector<Rational> xs = breakpoints(segs);

    for (size_t si = 0; si + 1 < xs.size(); ++si) {
        const Rational& xl = xs[si];
        const Rational& xr = xs[si + 1];
        Rational xm = (xl + xr) / 2;

        // Every segment overlapping the open slab spans it entirely: its
        // endpoints' abscissae are breakpoints.
        struct Active {
            const Seg* s;
            Rational ym;
        };
        std::vector<Active> act;
        for (const auto& s : segs) {
            if (s.a.x == s.b.x) continue;  // vertical segments live on slab boundaries
            if (s.a.x <= xl && s.b.x >= xr) act.push_back({&s, seg_y_at(s, xm)});
        }
        if (act.size() < 2) continue;
        std::sort(act.begin(), act.end(),
                  [](const Active& p, const Active& q) { return p.ym < q.ym; });
        // Equal midpoint heights mean identical lines within the slab
        // (a proper crossing inside a slab is impossible); keep one.
        act.erase(std::unique(act.begin(), act.end(),
                              [](const Active& p, const Active& q) { return p.ym == q.ym; }),
                  act.end());

        for (size_t i = 0; i + 1 < act.size(); ++i) {
            const Seg& lo = *act[i].s;
            const Seg& hi = *act[i + 1].s;
            Point2 sample{xm, (act[i].ym + act[i + 1].ym) / 2};
            long mult = 0;
            for (size_t ri = 0; ri < regions.size(); ++ri) {
                const BBox& bb = boxes[ri];
                if (regions[ri].empty() || sample.x < bb.xmin || sample.x > bb.xmax ||
                    sample.y < bb.ymin || sample.y > bb.ymax)
                    continue;
                Location loc = locate(regions[ri], sample);
                assert(loc != Location::Boundary);
                if (loc == Location::Inside) ++mult;
            }
            if (mult == 0) continue;
            Polygon cell = make_cell(xl, xr, seg_y_at(lo, xl), seg_y_at(lo, xr),
                                     seg_y_at(hi, xl), seg_y_at(hi, xr));
            out.push_back({std::move(cell), mult});
        }
    }
    return out;
}

Region cells_to_region(const std::vector<OverlayCell>& cells) {
    Region r;
    r.parts.reserve(cells.size());
    for (const auto& c : cells) r.parts.push_back(c.poly);
    return r;
}

bool region_equal(const Region& a, const Region& b) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    if (a.area() != b.area()) return false;
    auto cells = overlay({a, b});
    for (const auto& c : cells)
        if (c.multiplicity != 2) return false;
    return true;
}

namespace detail {

Region clip_general(const Polygon& part, const Polygon& window) {
    auto cells = overlay({Region::single(part), Region::single(window)});
    Region out;
    for (auto& c : cells)
        if (c.multiplicity == 2) out.parts.push_back(std::move(c.poly));
    return out;
}

}  // namespace detail

}  // namespace tilewave::geometry
