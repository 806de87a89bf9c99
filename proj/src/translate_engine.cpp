#include "tilewave/translate_engine.hpp"

#include <algorithm>

namespace tilewave::detail {

using geometry::Location;
using geometry::Mat2;
using geometry::Region;

namespace {

using i128 = __int128;

int sign128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

TranslateEngine::TranslateEngine(const Region& w, const geometry::Lattice2& g) {
    Mat2 inv = g.basis.inverse();
    preimage_ = geometry::affine_image(w, inv, {Rational(0), Rational(0)});
    geometry::BBox pre = geometry::bbox(preimage_);

    // u in [0,1): translate (i,j) can contain the sample iff
    // (u - i) falls inside the preimage x-range (same for v)
    i_lo_ = rat_floor(Rational(0) - pre.xmax).convert_to<long>() - 1;
    i_hi_ = rat_ceil(Rational(1) - pre.xmin).convert_to<long>() + 1;
    j_lo_ = rat_floor(Rational(0) - pre.ymax).convert_to<long>() - 1;
    j_hi_ = rat_ceil(Rational(1) - pre.ymin).convert_to<long>() + 1;

    // global scale: D = lcm of vertex denominators
    Integer d(1);
    for (const auto& part : preimage_.parts) {
        for (const auto& v : part.v) {
            d = boost::multiprecision::lcm(d, rat_den(v.x));
            d = boost::multiprecision::lcm(d, rat_den(v.y));
        }
    }
    denom_ = d;

    const Integer two31 = Integer(1) << 31;
    Integer limit = Integer(1) << 60;
    bool ok = d < (Integer(1) << 28);
    if (ok) {
        for (const auto& part : preimage_.parts) {
            ScaledPolygon sp;
            bool first = true;
            for (const auto& v : part.v) {
                Integer sx = rat_num(v.x) * (d / rat_den(v.x)) * two31;
                Integer sy = rat_num(v.y) * (d / rat_den(v.y)) * two31;
                if (abs(sx) >= limit || abs(sy) >= limit) {
                    ok = false;
                    break;
                }
                std::int64_t ix = sx.convert_to<std::int64_t>();
                std::int64_t iy = sy.convert_to<std::int64_t>();
                sp.v.emplace_back(ix, iy);
                if (first) {
                    sp.xmin = sp.xmax = ix;
                    sp.ymin = sp.ymax = iy;
                    first = false;
                } else {
                    sp.xmin = std::min(sp.xmin, ix);
                    sp.xmax = std::max(sp.xmax, ix);
                    sp.ymin = std::min(sp.ymin, iy);
                    sp.ymax = std::max(sp.ymax, iy);
                }
            }
            if (!ok) break;
            scaled_.push_back(std::move(sp));
        }
    }
    fast_ok_ = ok;
    if (ok) {
        sample_scale_ = d.convert_to<std::int64_t>();
        translate_scale_ = (d * two31).convert_to<std::int64_t>();
    } else {
        scaled_.clear();
    }
}

TranslateEngine::Loc TranslateEngine::locate_scaled(const ScaledPolygon& poly, std::int64_t px,
                                                    std::int64_t py) const {
    if (px < poly.xmin || px > poly.xmax || py < poly.ymin || py > poly.ymax)
        return Loc::Outside;
    size_t n = poly.v.size();
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        auto [ax, ay] = poly.v[i];
        auto [bx, by] = poly.v[(i + 1) % n];
        // boundary: collinear and within the segment box
        i128 o = i128(bx - ax) * i128(py - ay) - i128(by - ay) * i128(px - ax);
        if (o == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
            std::min(ay, by) <= py && py <= std::max(ay, by))
            return Loc::Boundary;
        bool a_below = ay <= py, b_below = by <= py;
        if (a_below != b_below) {
            int os = sign128(o);
            if (by > ay ? os > 0 : os < 0) ++crossings;
        }
    }
    return (crossings & 1) ? Loc::Inside : Loc::Outside;
}

int TranslateEngine::multiplicity_at(std::uint32_t n1, std::uint32_t n2) const {
    if (!fast_ok_) {
        const Rational den = Rational(Integer(1) << 31);
        auto r = translates_at(Rational(n1) / den, Rational(n2) / den);
        return r ? static_cast<int>(r->size()) : -1;
    }
    std::int64_t su = std::int64_t(n1) * sample_scale_;
    std::int64_t sv = std::int64_t(n2) * sample_scale_;
    int mult = 0;
    for (long i = i_lo_; i <= i_hi_; ++i) {
        std::int64_t px = su - i * translate_scale_;
        for (long j = j_lo_; j <= j_hi_; ++j) {
            std::int64_t py = sv - j * translate_scale_;
            for (const auto& sp : scaled_) {
                Loc loc = locate_scaled(sp, px, py);
                if (loc == Loc::Boundary) return -1;
                if (loc == Loc::Inside) {
                    ++mult;
                    break;  // parts are interior-disjoint
                }
            }
        }
    }
    return mult;
}

std::optional<std::vector<std::pair<long, long>>> TranslateEngine::translates_at(
    std::uint32_t n1, std::uint32_t n2) const {
    if (!fast_ok_) {
        const Rational den = Rational(Integer(1) << 31);
        return translates_at(Rational(n1) / den, Rational(n2) / den);
    }
    std::int64_t su = std::int64_t(n1) * sample_scale_;
    std::int64_t sv = std::int64_t(n2) * sample_scale_;
    std::vector<std::pair<long, long>> out;
    for (long i = i_lo_; i <= i_hi_; ++i) {
        std::int64_t px = su - i * translate_scale_;
        for (long j = j_lo_; j <= j_hi_; ++j) {
            std::int64_t py = sv - j * translate_scale_;
            for (const auto& sp : scaled_) {
                Loc loc = locate_scaled(sp, px, py);
                if (loc == Loc::Boundary) return std::nullopt;
                if (loc == Loc::Inside) {
                    out.emplace_back(i, j);
                    break;
                }
            }
        }
    }
    return out;
}

std::optional<std::vector<std::pair<long, long>>> TranslateEngine::translates_at(
    const Rational& u, const Rational& v) const {
    std::vector<std::pair<long, long>> out;
    // widen the candidate box for points possibly outside [0,1)^2
    long di = rat_floor(u).convert_to<long>();
    long dj = rat_floor(v).convert_to<long>();
    for (long i = i_lo_ + di; i <= i_hi_ + di; ++i) {
        for (long j = j_lo_ + dj; j <= j_hi_ + dj; ++j) {
            Location loc = geometry::locate(preimage_, {u - i, v - j});
            if (loc == Location::Boundary) return std::nullopt;
            if (loc == Location::Inside) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace tilewave::detail
