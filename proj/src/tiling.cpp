#include "tilewave/tiling.hpp"

#include "tilewave/prng.hpp"
#include "tilewave/tiles.hpp"
#include "tilewave/translate_engine.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace tilewave::tiling {

using geometry::Location;
using geometry::Mat2;
using geometry::Point2;
using geometry::Polygon;

CoverageReport covering_function(const Region& w, const Lattice2& g) {
    if (w.empty()) throw std::invalid_argument("covering_function: empty region");
    Polygon fd = g.fundamental_domain();
    Mat2 inv = g.basis.inverse();
    geometry::BBox pre = geometry::bbox(geometry::affine_image(w, inv, {Rational(0), Rational(0)}));

    long i_lo = rat_floor(pre.xmin).convert_to<long>() - 1;
    long i_hi = rat_ceil(pre.xmax).convert_to<long>() + 1;
    long j_lo = rat_floor(pre.ymin).convert_to<long>() - 1;
    long j_hi = rat_ceil(pre.ymax).convert_to<long>() + 1;

    std::vector<Region> pieces;
    for (long i = i_lo; i <= i_hi; ++i) {
        for (long j = j_lo; j <= j_hi; ++j) {
            Point2 gamma = g.point(i, j);
            Polygon window = fd;
            for (auto& v : window.v) v = v + gamma;
            Region piece = geometry::clip(w, window);
            if (!piece.empty()) pieces.push_back(geometry::translate(piece, -gamma));
        }
    }

    std::vector<Region> inputs;
    inputs.reserve(pieces.size() + 1);
    inputs.push_back(Region::single(fd));
    for (auto& p : pieces) inputs.push_back(std::move(p));
    auto cells = geometry::overlay(inputs);

    CoverageReport report;
    Rational cell_area_sum(0);
    report.total_area_check = 0;
    for (auto& c : cells) {
        long cover = c.multiplicity - 1;  // the fundamental domain itself contributes 1
        Rational area = geometry::polygon_area(c.poly);
        cell_area_sum += area;
        report.total_area_check += cover * area;
        report.cells.push_back({std::move(c.poly), cover});
    }
    if (cell_area_sum != g.covolume)
        throw std::logic_error("covering_function: cells do not partition the fundamental domain");
    if (report.total_area_check != w.area())
        throw std::logic_error("covering_function: covering mass does not match region area");

    auto classes = report.multiplicity_classes();
    report.is_constant = classes.size() == 1 && classes[0] > 0;
    report.k = report.is_constant ? classes[0] : 0;
    return report;
}

TilingVerdict verify_k_tiling(const Region& w, const Lattice2& g, long k) {
    TilingVerdict v;
    v.report = covering_function(w, g);
    v.k = k;
    v.pass = v.report.is_constant && v.report.k == k;
    if (v.pass) {
        // necessary condition, exact: area = k * covolume
        if (w.area() != k * g.covolume)
            throw std::logic_error("verify_k_tiling: constant covering with wrong mass");
    } else {
        for (const auto& c : v.report.cells) {
            if (c.multiplicity != k) {
                v.witness = c;
                break;
            }
        }
    }
    return v;
}

namespace {

SampleHistogram sample_covering_impl(const Region& w, const Lattice2& g, long count,
                                     std::uint64_t seed, bool parallel) {
    if (count < 1) throw std::invalid_argument("sample_covering: count >= 1 required");
    detail::TranslateEngine engine(w, g);

    SampleHistogram h;
    h.samples = count;
    h.seed = seed;

    constexpr int kMaxMult = 64;
    long counts[kMaxMult] = {};
    long discards = 0;

#pragma omp parallel for schedule(static) reduction(+ : discards) \
    reduction(+ : counts[:kMaxMult]) if (parallel)
    for (long i = 0; i < count; ++i) {
        Splitmix rng = Splitmix::stream(seed, static_cast<std::uint64_t>(i));
        std::uint32_t n1 = rng.next_u31();
        std::uint32_t n2 = rng.next_u31();
        int mult = engine.multiplicity_at(n1, n2);
        if (mult < 0)
            discards += 1;
        else
            counts[std::min(mult, kMaxMult - 1)] += 1;
    }

    h.boundary_discards = discards;
    for (int m = 0; m < kMaxMult; ++m)
        if (counts[m] > 0) h.counts[m] = counts[m];
    return h;
}

}  // namespace

SampleHistogram sample_covering(const Region& w, const Lattice2& g, long count,
                                std::uint64_t seed) {
    return sample_covering_impl(w, g, count, seed, true);
}

SampleHistogram sample_covering_serial(const Region& w, const Lattice2& g, long count,
                                       std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_covering: count >= 1 required");
    // reference path: plain rational arithmetic, no engine, no threads
    Mat2 inv = g.basis.inverse();
    geometry::BBox pre = geometry::bbox(geometry::affine_image(w, inv, {Rational(0), Rational(0)}));
    Region preimage = geometry::affine_image(w, inv, {Rational(0), Rational(0)});
    long i_lo = rat_floor(Rational(0) - pre.xmax).convert_to<long>() - 1;
    long i_hi = rat_ceil(Rational(1) - pre.xmin).convert_to<long>() + 1;
    long j_lo = rat_floor(Rational(0) - pre.ymax).convert_to<long>() - 1;
    long j_hi = rat_ceil(Rational(1) - pre.ymin).convert_to<long>() + 1;

    SampleHistogram h;
    h.samples = count;
    h.seed = seed;
    const Rational den = Rational(Integer(1) << 31);
    for (long s = 0; s < count; ++s) {
        Splitmix rng = Splitmix::stream(seed, static_cast<std::uint64_t>(s));
        Rational u = Rational(rng.next_u31()) / den;
        Rational v = Rational(rng.next_u31()) / den;
        long mult = 0;
        bool boundary = false;
        for (long i = i_lo; i <= i_hi && !boundary; ++i) {
            for (long j = j_lo; j <= j_hi && !boundary; ++j) {
                Location loc = geometry::locate(preimage, {u - i, v - j});
                if (loc == Location::Boundary) boundary = true;
                else if (loc == Location::Inside) ++mult;
            }
        }
        if (boundary)
            ++h.boundary_discards;
        else
            ++h.counts[mult];
    }
    return h;
}

namespace {

struct ShearletSample {
    double xi1, xi2;
};

// Draw a probe-annulus sample, factorize it and run the membership and
// neighbor checks.  Returns true when the sample is covered exactly once
// within the index window.  Boundary factorization triggers a redraw.
bool check_shearlet_sample(const groups::ShearletParams& p, Splitmix& rng, long k_window,
                           long m_window, long& discards, ShearletSample& out) {
    double a = to_double(p.a), b = to_double(p.b), c = to_double(p.c);
    for (;;) {
        double xi1 = rng.next_in(0.5, 2.0 * a);
        if (rng.next_bool()) xi1 = -xi1;
        double xi2 = rng.next_in(-2.0 * a * b, 2.0 * a * b);
        out = {xi1, xi2};

        double t = 1.0 / std::abs(xi1);
        double r = -xi2 / xi1;
        auto f = groups::factorize(t, r, p);
        if (!f) {
            ++discards;
            continue;
        }

        // membership of xi in g^{-T} W via the transpose pullback:
        // g^T xi = (a^k xi1, m b a^k xi1 + a^{ck} xi2)
        auto covered = [&](long k, long m) {
            double ak = std::pow(a, double(k));
            double ack = std::pow(a, c * double(k));
            double w1 = ak * xi1;
            double w2 = double(m) * b * ak * xi1 + ack * xi2;
            double ax = std::abs(w1);
            return ax > 1.0 && ax < a && std::abs(w2) < 0.5 * b * ax;
        };

        if (!covered(f->k, f->m)) return false;
        for (long dk = -k_window; dk <= k_window; ++dk) {
            for (long dm = -m_window; dm <= m_window; ++dm) {
                if (dk == 0 && dm == 0) continue;
                if (covered(f->k + dk, f->m + dm)) return false;
            }
        }
        return true;
    }
}

MultiplicativeReport shearlet_impl(const groups::ShearletParams& p, long samples,
                                   std::uint64_t seed, long k_window, long m_window,
                                   bool parallel) {
    MultiplicativeReport rep;
    rep.samples = samples;
    rep.seed = seed;

    long violations = 0;
    long discards = 0;
    std::vector<std::pair<long, ShearletSample>> bad;

#pragma omp parallel if (parallel)
    {
        std::vector<std::pair<long, ShearletSample>> local_bad;
        long local_discards = 0;
#pragma omp for schedule(static) reduction(+ : violations)
        for (long i = 0; i < samples; ++i) {
            Splitmix rng = Splitmix::stream(seed, static_cast<std::uint64_t>(i));
            ShearletSample s{};
            if (!check_shearlet_sample(p, rng, k_window, m_window, local_discards, s)) {
                violations += 1;
                if (local_bad.size() < 16) local_bad.emplace_back(i, s);
            }
        }
#pragma omp critical
        {
            discards += local_discards;
            bad.insert(bad.end(), local_bad.begin(), local_bad.end());
        }
    }

    std::sort(bad.begin(), bad.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [idx, s] : bad) {
        if (rep.violation_points.size() >= 8) break;
        rep.violation_points.push_back({s.xi1, s.xi2});
    }
    rep.violations = violations;
    rep.boundary_discards = discards;
    return rep;
}

}  // namespace

MultiplicativeReport verify_multiplicative_shearlet(const groups::ShearletParams& p, long samples,
                                                    std::uint64_t seed, long k_window,
                                                    long m_window) {
    return shearlet_impl(p, samples, seed, k_window, m_window, true);
}

MultiplicativeReport verify_multiplicative_shearlet_serial(const groups::ShearletParams& p,
                                                           long samples, std::uint64_t seed,
                                                           long k_window, long m_window) {
    return shearlet_impl(p, samples, seed, k_window, m_window, false);
}

SimilitudeTilingReport verify_multiplicative_similitude(const groups::SimilitudeParams& p,
                                                        long levels) {
    SimilitudeTilingReport rep;
    rep.levels = levels;
    long half = p.n / 2;

    // (i) sector bookkeeping: the element a^k R^l maps the tile's sector pair
    // {0, n/2} at ring 0 to sectors {l, l+n/2} at ring -k under the dual
    // action; every (ring, sector) must be hit exactly once.
    bool sectors_ok = true;
    for (long ring = -levels; ring <= levels && sectors_ok; ++ring) {
        for (long sector = 0; sector < p.n && sectors_ok; ++sector) {
            long hits = 0;
            for (long k = -levels; k <= levels; ++k) {
                if (-k != ring) continue;
                for (long l = 0; l < half; ++l) {
                    if (sector % half == l) ++hits;
                }
            }
            sectors_ok = hits == 1;
        }
    }
    rep.sectors_partition = sectors_ok;

    // (ii) consecutive rings share exactly their boundary polygon:
    // inner(level+1) == outer(level), checked on shadow vertices
    bool nested = true;
    double a = double(p.a);
    for (long lev = -levels; lev < levels && nested; ++lev) {
        auto outer = tiles::ring_outer_polygon(p, lev);
        auto next_outer = tiles::ring_outer_polygon(p, lev + 1);
        for (long j = 0; j < p.n; ++j) {
            double ix = next_outer.v[j].x / a, iy = next_outer.v[j].y / a;
            double scale = std::hypot(outer.v[j].x, outer.v[j].y);
            if (std::abs(ix - outer.v[j].x) > 1e-9 * scale ||
                std::abs(iy - outer.v[j].y) > 1e-9 * scale)
                nested = false;
        }
    }
    rep.rings_nested = nested;

    // (iii) ring areas scale like a^{2 level} and their cumulative sum follows
    // the geometric series, so the union exhausts every disk as levels grow
    double ring0 = tiles::polygon_ring(p, 0).area();
    double outer0 = 0;
    {
        auto k0 = tiles::ring_outer_polygon(p, 0);
        geometry::ShadowRegion tmp;
        tmp.parts.push_back(k0);
        outer0 = tmp.area();
    }
    bool monotone = ring0 > 0;
    double cumulative = 0;
    double prev = 0;
    for (long lev = -levels; lev <= levels && monotone; ++lev) {
        double area = tiles::polygon_ring(p, lev).area();
        double expected = ring0 * std::pow(a, 2.0 * double(lev));
        if (std::abs(area - expected) > 1e-9 * expected) monotone = false;
        cumulative += area;
        if (cumulative <= prev) monotone = false;
        prev = cumulative;
    }
    if (monotone) {
        double L = double(levels);
        double series = outer0 * (std::pow(a, 2.0 * L) - std::pow(a, -2.0 * L - 2.0));
        if (std::abs(cumulative - series) > 1e-9 * series) monotone = false;
    }
    rep.coverage_monotone = monotone;
    return rep;
}

namespace {

QuasiLatticeReport quasi_impl(const groups::ShearletParams& p, long samples, std::uint64_t seed,
                              bool parallel) {
    QuasiLatticeReport rep;
    rep.samples = samples;
    rep.seed = seed;

    double a = to_double(p.a), b = to_double(p.b), c = to_double(p.c);
    long violations = 0, discards = 0;
    double max_err = 0;

#pragma omp parallel for schedule(static) reduction(+ : violations, discards) \
    reduction(max : max_err) if (parallel)
    for (long i = 0; i < samples; ++i) {
        Splitmix rng = Splitmix::stream(seed, static_cast<std::uint64_t>(i));
        double t = std::pow(a, rng.next_in(-3.0, 3.0));
        double r = rng.next_in(-10.0 * b, 10.0 * b);
        auto f = groups::factorize(t, r, p);
        if (!f) {
            discards += 1;
            continue;
        }
        double t_back = std::pow(a, double(f->k)) * f->s;
        double r_back = std::pow(a, (1.0 - c) * double(f->k)) * (double(f->m) * b + f->y);
        double err = std::abs(t_back - t) / t;
        err = std::max(err, std::abs(r_back - r) / std::max(std::abs(r), 1e-12 * b));
        max_err = std::max(max_err, err);
        bool ok = err <= 1e-9;
        // neighbor indices must violate the open interval constraints
        double s_up = f->s / a, s_dn = f->s * a;
        ok = ok && !(s_up > 1.0 / a && s_up < 1.0) && !(s_dn > 1.0 / a && s_dn < 1.0);
        double y_up = f->y - b, y_dn = f->y + b;
        ok = ok && !(std::abs(y_up) < 0.5 * b) && !(std::abs(y_dn) < 0.5 * b);
        if (!ok) violations += 1;
    }

    rep.violations = violations;
    rep.discards = discards;
    rep.max_rel_error = max_err;
    return rep;
}

}  // namespace

QuasiLatticeReport quasi_lattice_check(const groups::ShearletParams& p, long samples,
                                       std::uint64_t seed) {
    return quasi_impl(p, samples, seed, true);
}

QuasiLatticeReport quasi_lattice_check_serial(const groups::ShearletParams& p, long samples,
                                              std::uint64_t seed) {
    return quasi_impl(p, samples, seed, false);
}

}  // namespace tilewave::tiling
