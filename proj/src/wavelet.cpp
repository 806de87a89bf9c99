#include "tilewave/wavelet.hpp"

#include "tilewave/overlay.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace tilewave::wavelet {

using geometry::Mat2;
using geometry::ShadowPoint;
using geometry::ShadowRegion;

std::complex<double> eval_psi(const WaveletSystemDescriptor& d, double x1, double x2) {
    return d.c_psi * exponentials::polygon_ft(d.tile, -x1, -x2);
}

namespace {

std::vector<DilationIndex> enumerate_dilations(const WaveletSystemDescriptor& d, long k_cutoff,
                                               long m_cutoff) {
    std::vector<DilationIndex> out;
    if (std::holds_alternative<groups::ShearletParams>(d.params)) {
        for (long k = -k_cutoff; k <= k_cutoff; ++k)
            for (long m = -m_cutoff; m <= m_cutoff; ++m) out.push_back({k, m});
    } else {
        const auto& p = std::get<groups::SimilitudeParams>(d.params);
        for (long k = -k_cutoff; k <= k_cutoff; ++k)
            for (long l = 0; l < p.n / 2; ++l) out.push_back({k, l});
    }
    return out;
}

Mat2 dilation_matrix(const WaveletSystemDescriptor& d, const DilationIndex& idx) {
    if (std::holds_alternative<groups::ShearletParams>(d.params))
        return groups::shear_matrix({idx.k, idx.ml}, std::get<groups::ShearletParams>(d.params));
    return groups::similitude_matrix({idx.k, idx.ml}, std::get<groups::SimilitudeParams>(d.params));
}

Mat2 dual_matrix(const WaveletSystemDescriptor& d, const DilationIndex& idx) {
    if (std::holds_alternative<groups::ShearletParams>(d.params))
        return groups::dual_action(groups::ShearElement{idx.k, idx.ml},
                                   std::get<groups::ShearletParams>(d.params));
    return groups::dual_action(groups::SimilitudeElement{idx.k, idx.ml},
                               std::get<groups::SimilitudeParams>(d.params));
}

// deterministic interior probes of a shadow polygon: centroid plus
// edge-midpoint pullbacks toward the centroid
std::vector<ShadowPoint> interior_probes(const geometry::ShadowPolygon& p) {
    ShadowPoint c{0, 0};
    for (const auto& v : p.v) {
        c.x += v.x;
        c.y += v.y;
    }
    c.x /= double(p.v.size());
    c.y /= double(p.v.size());
    std::vector<ShadowPoint> out{c};
    size_t n = p.v.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& a = p.v[i];
        const auto& b = p.v[(i + 1) % n];
        ShadowPoint mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        out.push_back({0.9 * mid.x + 0.1 * c.x, 0.9 * mid.y + 0.1 * c.y});
    }
    return out;
}

bool shadow_contains(const ShadowRegion& r, const ShadowPoint& p, double margin) {
    for (const auto& poly : r.parts) {
        size_t n = poly.v.size();
        int crossings = 0;
        bool near_edge = false;
        for (size_t i = 0; i < n; ++i) {
            const auto& a = poly.v[i];
            const auto& b = poly.v[(i + 1) % n];
            double dx = b.x - a.x, dy = b.y - a.y;
            double len = std::hypot(dx, dy);
            double dist = std::abs(dx * (p.y - a.y) - dy * (p.x - a.x)) / len;
            double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (len * len);
            if (t > -0.1 && t < 1.1 && dist < margin) near_edge = true;
            bool a_below = a.y <= p.y, b_below = b.y <= p.y;
            if (a_below != b_below) {
                double xc = a.x + (p.y - a.y) * dx / dy;
                if (xc > p.x) ++crossings;
            }
        }
        if ((crossings & 1) && !near_edge) return true;
        if (near_edge) return true;  // conservative: near the boundary counts as overlap
    }
    return false;
}

// Pairwise disjointness of the dilated supports.  Exact overlay for rational
// duals; shadow probe test with 1e-9 margin otherwise.
void verify_disjoint_supports(const WaveletSystemDescriptor& d,
                              const std::vector<DilationIndex>& dils) {
    bool exact = std::holds_alternative<groups::ShearletParams>(d.params) &&
                 std::get<groups::ShearletParams>(d.params).exact_path();
    size_t nd = dils.size();
    if (exact) {
        std::vector<Region> images(nd);
        for (size_t i = 0; i < nd; ++i)
            images[i] =
                geometry::affine_image(d.tile, dual_matrix(d, dils[i]), {Rational(0), Rational(0)});
        for (size_t i = 0; i < nd; ++i) {
            for (size_t j = i + 1; j < nd; ++j) {
                auto cells = geometry::overlay({images[i], images[j]});
                for (const auto& c : cells)
                    if (c.multiplicity > 1)
                        throw std::logic_error("system_gram: dilated supports overlap");
            }
        }
    } else {
        ShadowRegion tile = geometry::shadow_of(d.tile);
        std::vector<ShadowRegion> images(nd);
        for (size_t i = 0; i < nd; ++i)
            images[i] = geometry::affine_image(tile, dual_matrix(d, dils[i]), ShadowPoint{0, 0});
        for (size_t i = 0; i < nd; ++i) {
            for (size_t j = 0; j < nd; ++j) {
                if (i == j) continue;
                for (const auto& poly : images[i].parts)
                    for (const auto& probe : interior_probes(poly))
                        if (shadow_contains(images[j], probe, 1e-9))
                            throw std::logic_error("system_gram: dilated supports overlap");
            }
        }
    }
}

}  // namespace

SystemGram system_gram(const WaveletSystemDescriptor& d, long k_cutoff, long m_cutoff,
                       double radius) {
    if (!d.verified())
        throw std::invalid_argument(
            "system_gram: descriptor lacks verification evidence (tiling and det certificates)");

    SystemGram sg;
    sg.dilations = enumerate_dilations(d, k_cutoff, m_cutoff);
    verify_disjoint_supports(d, sg.dilations);

    auto labels = exponentials::lambda_in_ball(d.translations, radius);
    sg.block_size = labels.size();
    size_t nd = sg.dilations.size();
    size_t n = nd * sg.block_size;
    sg.full.labels = labels;
    sg.full.n = n;
    sg.full.radius = radius;
    sg.full.a.assign(n * n, {0.0, 0.0});

    ShadowRegion tile = geometry::shadow_of(d.tile);
    const long bs = static_cast<long>(sg.block_size);

    for (size_t di = 0; di < nd; ++di) {
        // block entries through the dilated region: with B = g^{-T},
        // <f_l, f_u> = ft_{BW}(B^{-T}(l - u)) / |det B|
        Mat2 B = dual_matrix(d, sg.dilations[di]);
        ShadowRegion image = geometry::affine_image(tile, B, ShadowPoint{0, 0});
        Mat2 Bit = B.inverse_transpose();
        double inv_det = 1.0 / std::abs(B.det_shadow());
        size_t base = di * sg.block_size;

#pragma omp parallel for schedule(static)
        for (long r = 0; r < bs; ++r) {
            for (long c = r; c < bs; ++c) {
                double dx = labels[r].x - labels[c].x;
                double dy = labels[r].y - labels[c].y;
                ShadowPoint f = Bit.apply(ShadowPoint{dx, dy});
                std::complex<double> v = exponentials::polygon_ft(image, f.x, f.y) * inv_det;
                sg.full.a[(base + r) * n + (base + c)] = v;
                if (c != r) sg.full.a[(base + c) * n + (base + r)] = std::conj(v);
            }
        }
    }
    return sg;
}

InequalityTriple riesz_inequality_check(const SystemGram& sg,
                                        const exponentials::BoundsEstimate& bounds,
                                        const CoefficientVector& coeffs) {
    const size_t n = sg.full.n;
    std::vector<std::complex<double>> c(n, {0.0, 0.0});
    double norm2 = 0;
    for (const auto& [key, val] : coeffs.entries) {
        auto [dil, tr] = key;
        if (dil >= sg.dilations.size() || tr >= sg.block_size)
            throw std::out_of_range("riesz_inequality_check: coefficient index out of range");
        c[dil * sg.block_size + tr] = val;
        norm2 += std::norm(val);
    }
    std::complex<double> quad = 0;
    for (size_t r = 0; r < n; ++r) {
        if (c[r] == std::complex<double>(0.0, 0.0)) continue;
        for (size_t col = 0; col < n; ++col) {
            if (c[col] == std::complex<double>(0.0, 0.0)) continue;
            quad += std::conj(c[r]) * sg.full.at(r, col) * c[col];
        }
    }
    InequalityTriple out;
    out.lhs = bounds.lambda_min * norm2;
    out.middle = quad.real();
    out.rhs = bounds.lambda_max * norm2;
    return out;
}

std::vector<GridNode> sampling_grid(const WaveletSystemDescriptor& d, long k_cutoff, long m_cutoff,
                                    double radius) {
    std::vector<GridNode> out;
    auto labels = exponentials::lambda_in_ball(d.translations, radius);
    for (const auto& dil : enumerate_dilations(d, k_cutoff, m_cutoff)) {
        Mat2 A = dilation_matrix(d, dil);
        for (const auto& l : labels) {
            ShadowPoint al = A.apply(ShadowPoint{l.x, l.y});
            out.push_back({dil.k, dil.ml, l.x, l.y, al.x, al.y});
        }
    }
    return out;
}

void write_grid_csv(const std::vector<GridNode>& grid, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("write_grid_csv: cannot open " + path);
    f << "k,m,lambda1,lambda2,Alambda1,Alambda2\n";
    char buf[192];
    for (const auto& g : grid) {
        std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g,%.17g,%.17g\n", g.k, g.ml, g.lambda1,
                      g.lambda2, g.a_lambda1, g.a_lambda2);
        f << buf;
    }
}

}  // namespace tilewave::wavelet
