#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: brute-force rasterization for overlay multiplicities, cyclic Jacobi
// for eigenvalues, adaptive Gauss-Legendre quadrature for region integrals.

#include "tilewave/geometry.hpp"
#include "tilewave/overlay.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using tilewave::Rational;
namespace geo = tilewave::geometry;

/// Multiplicity of a point in a family of regions by direct membership tests;
/// -1 when the point touches any boundary.
inline long raster_multiplicity(const std::vector<geo::Region>& regions, const geo::Point2& p) {
    long mult = 0;
    for (const auto& r : regions) {
        geo::Location loc = geo::locate(r, p);
        if (loc == geo::Location::Boundary) return -1;
        if (loc == geo::Location::Inside) ++mult;
    }
    return mult;
}

/// Check an overlay result against brute-force rasterization on a grid of
/// interior rational points: each non-boundary grid point must carry the same
/// multiplicity in the cell decomposition (0 when in no cell) as by direct
/// membership.  Returns the number of grid points compared.
inline long raster_check(const std::vector<geo::Region>& regions,
                         const std::vector<geo::OverlayCell>& cells, const geo::BBox& box,
                         int grid) {
    long checked = 0;
    for (int gx = 1; gx < grid; ++gx) {
        for (int gy = 1; gy < grid; ++gy) {
            geo::Point2 p{box.xmin + (box.xmax - box.xmin) * gx / grid,
                          box.ymin + (box.ymax - box.ymin) * gy / grid};
            long want = raster_multiplicity(regions, p);
            if (want < 0) continue;
            long got = 0;
            bool on_cell_edge = false;
            for (const auto& c : cells) {
                geo::Location loc = geo::locate(c.poly, p);
                if (loc == geo::Location::Boundary) on_cell_edge = true;
                if (loc == geo::Location::Inside) got = c.multiplicity;
            }
            if (on_cell_edge) continue;
            if (got != want) return -1;  // disagreement
            ++checked;
        }
    }
    return checked;
}

/// Cyclic Jacobi eigenvalues of a real symmetric matrix (row-major, small n).
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, size_t n) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off < 1e-24) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
                double t = std::copysign(1.0, theta) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Integral of f over an exact region by fan triangulation and subdivided
/// degree-12 Gauss-Legendre quadrature (tensor rule on the unit triangle via
/// the Duffy map).  Subdivision keeps the phase variation per patch small, so
/// trigonometric integrands converge to full precision.
inline std::complex<double> integrate_region(
    const geo::Region& w, const std::function<std::complex<double>(double, double)>& f,
    int subdivisions) {
    static const double gl_x[6] = {0.03376524289842399, 0.16939530676686776,
                                   0.38069040695840155, 0.6193095930415985,
                                   0.8306046932331322,  0.966234757101576};
    static const double gl_w[6] = {0.08566224618958512, 0.18038078652406936,
                                   0.23395696728634555, 0.23395696728634555,
                                   0.18038078652406936, 0.08566224618958512};

    std::complex<double> total = 0;
    for (const auto& part : w.parts) {
        std::vector<std::array<double, 2>> v;
        for (const auto& q : part.v)
            v.push_back({tilewave::to_double(q.x), tilewave::to_double(q.y)});
        // fan triangulation (parts are convex in every use below)
        for (size_t t = 1; t + 1 < v.size(); ++t) {
            auto A = v[0], B = v[t], C = v[t + 1];
            double jac_T = std::abs((B[0] - A[0]) * (C[1] - A[1]) -
                                    (C[0] - A[0]) * (B[1] - A[1]));  // 2 * area(ABC)
            int s = subdivisions;
            double h = 1.0 / s;
            // uniform refinement of the (u,v) parameter triangle into s^2 cells
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j + i < s; ++j) {
                    for (int up = 0; up < 2; ++up) {
                        if (up == 1 && j + i == s - 1) continue;
                        double u0 = i * h, v0 = j * h;
                        // parameter-space vertices of the subtriangle
                        double q0u = up ? u0 + h : u0, q0v = v0;
                        double q1u = up ? u0 + h : u0 + h, q1v = up ? v0 + h : v0;
                        double q2u = u0, q2v = v0 + h;
                        // Duffy map square -> unit triangle, then affine into
                        // the subtriangle, then barycentric into ABC
                        for (int gx = 0; gx < 6; ++gx) {
                            for (int gy = 0; gy < 6; ++gy) {
                                double a = gl_x[gx];
                                double b = gl_x[gy] * (1 - a);
                                double wgt = gl_w[gx] * gl_w[gy] * (1 - a);
                                double u = q0u + a * (q1u - q0u) + b * (q2u - q0u);
                                double vv = q0v + a * (q1v - q0v) + b * (q2v - q0v);
                                double qx = A[0] + u * (B[0] - A[0]) + vv * (C[0] - A[0]);
                                double qy = A[1] + u * (B[1] - A[1]) + vv * (C[1] - A[1]);
                                total += f(qx, qy) * (wgt * h * h * jac_T);
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

}  // namespace oracles
