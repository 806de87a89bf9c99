#include "tilewave/exponentials.hpp"

#include "tilewave/prng.hpp"
#include "tilewave/translate_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace tilewave::exponentials {

using geometry::Mat2;

Lattice2 dual_lattice(const Lattice2& g) {
    return Lattice2::from_basis(g.basis.inverse_transpose());
}

namespace {

void check_collisions(const Lattice2& dual, const std::vector<std::array<double, 2>>& shifts) {
    // distinct modulo the dual lattice: compare in dual coordinates mod 1
    Mat2 inv = dual.basis.inverse();
    auto coords = [&](const std::array<double, 2>& s) {
        geometry::ShadowPoint p = inv.apply(geometry::ShadowPoint{s[0], s[1]});
        return std::array<double, 2>{p.x, p.y};
    };
    for (size_t i = 0; i < shifts.size(); ++i) {
        for (size_t j = i + 1; j < shifts.size(); ++j) {
            auto a = coords(shifts[i]), b = coords(shifts[j]);
            double du = std::abs(a[0] - b[0]);
            double dv = std::abs(a[1] - b[1]);
            du = std::min(du - std::floor(du), std::ceil(du) - du);
            dv = std::min(dv - std::floor(dv), std::ceil(dv) - dv);
            if (du < 1e-12 && dv < 1e-12)
                throw ShiftCollision("generate_lambda: shifts " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide modulo the dual lattice");
        }
    }
}

}  // namespace

TranslationSet generate_lambda(const Lattice2& g, long k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("generate_lambda: k >= 1 required");
    TranslationSet ts;
    ts.dual = dual_lattice(g);
    ts.seed = seed;
    ts.seeded = true;
    Splitmix rng = Splitmix::stream(seed, 0);
    for (long s = 0; s < k; ++s) {
        double u = rng.next_unit();
        double v = rng.next_unit();
        geometry::ShadowPoint p{0, 0};
        const auto& b = ts.dual.basis.shadow;
        p.x = b[0] * u + b[1] * v;
        p.y = b[2] * u + b[3] * v;
        ts.shifts.push_back({p.x, p.y});
    }
    check_collisions(ts.dual, ts.shifts);
    return ts;
}

TranslationSet generate_lambda(const Lattice2& g, std::vector<std::array<double, 2>> shifts) {
    if (shifts.empty()) throw std::invalid_argument("generate_lambda: at least one shift");
    TranslationSet ts;
    ts.dual = dual_lattice(g);
    ts.shifts = std::move(shifts);
    ts.seeded = false;
    check_collisions(ts.dual, ts.shifts);
    return ts;
}

std::optional<std::vector<Point2>> covering_translates(const Region& w, const Lattice2& g,
                                                       const Point2& x) {
    detail::TranslateEngine engine(w, g);
    Mat2 inv = g.basis.inverse();
    Point2 uv = inv.apply(x);
    auto coords = engine.translates_at(uv.x, uv.y);
    if (!coords) return std::nullopt;
    std::vector<Point2> out;
    out.reserve(coords->size());
    for (auto [i, j] : *coords) out.push_back(g.point(i, j));
    return out;
}

namespace {

// |det| of a small complex matrix by partial-pivot elimination
double abs_det(std::vector<std::complex<double>>& m, long k) {
    double scale = 1.0;
    for (long c = 0; c < k; ++c) {
        long piv = c;
        double best = std::abs(m[c * k + c]);
        for (long r = c + 1; r < k; ++r) {
            double v = std::abs(m[r * k + c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != c)
            for (long q = 0; q < k; ++q) std::swap(m[c * k + q], m[piv * k + q]);
        for (long r = c + 1; r < k; ++r) {
            std::complex<double> f = m[r * k + c] / m[c * k + c];
            for (long q = c; q < k; ++q) m[r * k + q] -= f * m[c * k + q];
        }
        scale *= std::abs(m[c * k + c]);
    }
    return scale;
}

DetReport det_impl(const Region& w, const Lattice2& g, const TranslationSet& ts, long samples,
                   std::uint64_t seed, bool parallel) {
    if (samples < 1) throw std::invalid_argument("det_criterion: samples >= 1 required");
    detail::TranslateEngine engine(w, g);
    const long k = ts.k();
    const double hadamard = std::pow(double(k), 0.5 * double(k));

    DetReport rep;
    rep.samples = samples;
    rep.seed = seed;

    double min_det = std::numeric_limits<double>::infinity();
    long discards = 0;
    long hist[10] = {};

#pragma omp parallel for schedule(static) reduction(min : min_det) reduction(+ : discards) \
    reduction(+ : hist[:10]) if (parallel)
    for (long s = 0; s < samples; ++s) {
        Splitmix rng = Splitmix::stream(seed, static_cast<std::uint64_t>(s));
        auto coords = engine.translates_at(rng.next_u31(), rng.next_u31());
        if (!coords || static_cast<long>(coords->size()) != k) {
            // wrong count only happens on boundary-adjacent numerics; both discard
            discards += 1;
            continue;
        }
        std::vector<std::complex<double>> m(k * k);
        for (long row = 0; row < k; ++row) {
            for (long col = 0; col < k; ++col) {
                auto [gi, gj] = (*coords)[col];
                geometry::ShadowPoint gp{0, 0};
                const auto& b = g.basis.shadow;
                gp.x = b[0] * double(gi) + b[1] * double(gj);
                gp.y = b[2] * double(gi) + b[3] * double(gj);
                double phase = ts.shifts[row][0] * gp.x + ts.shifts[row][1] * gp.y;
                phase -= std::floor(phase);
                m[row * k + col] = std::polar(1.0, 2.0 * M_PI * phase);
            }
        }
        double det = abs_det(m, k);
        min_det = std::min(min_det, det);
        int bin = std::min(9, static_cast<int>(std::floor(det / hadamard * 10.0)));
        hist[std::max(0, bin)] += 1;
    }

    rep.min_abs_det = min_det;
    rep.discards = discards;
    for (int b = 0; b < 10; ++b) rep.histogram[b] = hist[b];
    return rep;
}

}  // namespace

DetReport det_criterion(const Region& w, const Lattice2& g, const TranslationSet& ts, long samples,
                        std::uint64_t seed) {
    return det_impl(w, g, ts, samples, seed, true);
}

DetReport det_criterion_serial(const Region& w, const Lattice2& g, const TranslationSet& ts,
                               long samples, std::uint64_t seed) {
    return det_impl(w, g, ts, samples, seed, false);
}

namespace {

// (1 - e^{-2 pi i u}) / (2 pi i u) with the numerator phase reduced mod 1;
// series fallback kills the cancellation when the edge is orthogonal to xi.
std::complex<double> edge_kernel(double u, double scale) {
    constexpr std::complex<double> I{0.0, 1.0};
    if (std::abs(u) <= 1e-8 * scale) {
        std::complex<double> z = -2.0 * M_PI * I * u;
        return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
    }
    double ur = u - std::round(u);
    std::complex<double> num = 1.0 - std::polar(1.0, -2.0 * M_PI * ur);
    return num / (2.0 * M_PI * I * u);
}

}  // namespace

std::complex<double> polygon_ft(const geometry::ShadowRegion& w, double xi1, double xi2) {
    double norm2 = xi1 * xi1 + xi2 * xi2;
    if (norm2 == 0.0) return {w.area(), 0.0};
    double norm = std::sqrt(norm2);

    constexpr std::complex<double> I{0.0, 1.0};
    std::complex<double> total = 0.0;
    for (const auto& part : w.parts) {
        size_t n = part.v.size();
        for (size_t i = 0; i < n; ++i) {
            const auto& a = part.v[i];
            const auto& b = part.v[(i + 1) % n];
            double dx = b.x - a.x, dy = b.y - a.y;
            double flux = xi1 * dy - xi2 * dx;  // <xi, outward normal> * edge length
            if (flux == 0.0) continue;
            double u = xi1 * dx + xi2 * dy;
            double p0 = xi1 * a.x + xi2 * a.y;
            double p0r = p0 - std::round(p0);
            std::complex<double> phase = std::polar(1.0, -2.0 * M_PI * p0r);
            double edge_len = std::hypot(dx, dy);
            total += flux * phase * edge_kernel(u, norm * edge_len);
        }
    }
    return total / (-2.0 * M_PI * I * norm2);
}

std::complex<double> polygon_ft(const Region& w, double xi1, double xi2) {
    if (xi1 == 0.0 && xi2 == 0.0) return {to_double(w.area()), 0.0};
    return polygon_ft(geometry::shadow_of(w), xi1, xi2);
}

std::vector<LambdaLabel> lambda_in_ball(const TranslationSet& ts, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("lambda_in_ball: radius > 0 required");
    const auto& b = ts.dual.basis.shadow;
    // conservative integer box: ||c|| <= ||B^{-1}||_inf * (radius + |shift|)
    Mat2 inv = ts.dual.basis.inverse();
    const auto& q = inv.shadow;
    double row1 = std::abs(q[0]) + std::abs(q[1]);
    double row2 = std::abs(q[2]) + std::abs(q[3]);
    double max_shift = 0;
    for (const auto& s : ts.shifts) max_shift = std::max(max_shift, std::hypot(s[0], s[1]));
    double reach = radius + max_shift;
    long bound_i = static_cast<long>(std::ceil(row1 * reach)) + 1;
    long bound_j = static_cast<long>(std::ceil(row2 * reach)) + 1;

    std::vector<LambdaLabel> out;
    for (long s = 0; s < ts.k(); ++s) {
        for (long i = -bound_i; i <= bound_i; ++i) {
            for (long j = -bound_j; j <= bound_j; ++j) {
                double x = b[0] * double(i) + b[1] * double(j) + ts.shifts[s][0];
                double y = b[2] * double(i) + b[3] * double(j) + ts.shifts[s][1];
                if (x * x + y * y <= radius * radius) out.push_back({s, i, j, x, y});
            }
        }
    }
    return out;
}

namespace {

GramMatrix gram_impl(const Region& w, const TranslationSet& ts, double radius, bool parallel) {
    GramMatrix g;
    g.labels = lambda_in_ball(ts, radius);
    g.n = g.labels.size();
    g.radius = radius;
    if (g.n == 0) throw std::invalid_argument("gram: empty truncation");
    g.a.assign(g.n * g.n, {0.0, 0.0});

    geometry::ShadowRegion sw = geometry::shadow_of(w);
    double area = to_double(w.area());
    const long n = static_cast<long>(g.n);

#pragma omp parallel for schedule(static) if (parallel)
    for (long r = 0; r < n; ++r) {
        g.a[r * n + r] = {area, 0.0};
        for (long c = r + 1; c < n; ++c) {
            double dx = g.labels[r].x - g.labels[c].x;
            double dy = g.labels[r].y - g.labels[c].y;
            std::complex<double> v = polygon_ft(sw, dx, dy);
            g.a[r * n + c] = v;
        }
    }
    // conjugate mirror: Hermitian by construction
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < r; ++c) g.a[r * n + c] = std::conj(g.a[c * n + r]);
    return g;
}

}  // namespace

GramMatrix gram(const Region& w, const TranslationSet& ts, double radius) {
    return gram_impl(w, ts, radius, true);
}

GramMatrix gram_serial(const Region& w, const TranslationSet& ts, double radius) {
    return gram_impl(w, ts, radius, false);
}

BoundsEstimate riesz_bounds(const GramMatrix& g) {
    const size_t n = g.n;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (g.at(r, c) != std::conj(g.at(c, r)))
                throw std::invalid_argument("riesz_bounds: matrix is not Hermitian");

    std::vector<double> s = numeric::realify(g.a, n);
    numeric::Tridiagonal t = numeric::tridiagonalize(s, 2 * n);
    s.clear();
    s.shrink_to_fit();
    numeric::ExtremeEigen ex = numeric::extreme_eigenvalues(t);

    BoundsEstimate out;
    out.lambda_min = ex.min;
    out.lambda_max = ex.max;
    out.truncation_radius = g.radius;
    out.iterations = ex.iterations;
    out.residual = ex.residual;
    out.caveat =
        "finite section: lambda_min bounds the lower Riesz constant from above and "
        "lambda_max the upper one from below; no claim is made for the infinite system";
    if (out.lambda_min < -1e-10)
        throw std::runtime_error("riesz_bounds: Gram matrix is not positive semidefinite");
    return out;
}

namespace {

void put_u64(std::ofstream& f, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    f.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ofstream& f, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    put_u64(f, u);
}

std::uint64_t get_u64(std::ifstream& f) {
    unsigned char b[8];
    f.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::ifstream& f) {
    std::uint64_t u = get_u64(f);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

constexpr std::uint64_t kGramMagic = 0x314d575754ULL;  // "TWWM1"

}  // namespace

void write_gram_binary(const GramMatrix& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("write_gram_binary: cannot open " + path);
    put_u64(f, kGramMagic);
    put_u64(f, g.n);
    put_f64(f, g.radius);
    for (const auto& l : g.labels) {
        put_u64(f, static_cast<std::uint64_t>(l.shift_idx));
        put_u64(f, static_cast<std::uint64_t>(l.i));
        put_u64(f, static_cast<std::uint64_t>(l.j));
        put_f64(f, l.x);
        put_f64(f, l.y);
    }
    for (const auto& z : g.a) {
        put_f64(f, z.real());
        put_f64(f, z.imag());
    }
}

GramMatrix read_gram_binary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_gram_binary: cannot open " + path);
    if (get_u64(f) != kGramMagic) throw std::runtime_error("read_gram_binary: bad magic");
    GramMatrix g;
    g.n = get_u64(f);
    g.radius = get_f64(f);
    g.labels.resize(g.n);
    for (auto& l : g.labels) {
        l.shift_idx = static_cast<long>(get_u64(f));
        l.i = static_cast<long>(get_u64(f));
        l.j = static_cast<long>(get_u64(f));
        l.x = get_f64(f);
        l.y = get_f64(f);
    }
    g.a.resize(g.n * g.n);
    for (auto& z : g.a) {
        double re = get_f64(f);
        double im = get_f64(f);
        z = {re, im};
    }
    if (!f) throw std::runtime_error("read_gram_binary: truncated file");
    return g;
}

void write_gram_csv(const GramMatrix& g, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("write_gram_csv: cannot open " + path);
    f << "row,col,re,im\n";
    char buf[128];
    for (size_t r = 0; r < g.n; ++r) {
        for (size_t c = 0; c < g.n; ++c) {
            std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", r, c, g.at(r, c).real(),
                          g.at(r, c).imag());
            f << buf;
        }
    }
}

}  // namespace tilewave::exponentials
