#include "tilewave/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tilewave::numeric {

std::vector<double> realify(const std::vector<std::complex<double>>& a, size_t n) {
    size_t m = 2 * n;
    std::vector<double> s(m * m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            double re = a[i * n + j].real();
            double im = a[i * n + j].imag();
            s[i * m + j] = re;
            s[i * m + (j + n)] = -im;
            s[(i + n) * m + j] = im;
            s[(i + n) * m + (j + n)] = re;
        }
    }
    return s;
}

namespace {

// Householder vector for x (length L), normalized to v[0] = 1.
// Returns tau and beta with (I - tau v v^T) x = beta e1.
double make_householder(const double* x, size_t L, std::vector<double>& v, double& tau) {
    double alpha = x[0];
    double xnorm = 0;
    for (size_t i = 1; i < L; ++i) xnorm += x[i] * x[i];
    xnorm = std::sqrt(xnorm);
    v.assign(L, 0.0);
    v[0] = 1.0;
    if (xnorm == 0) {
        tau = 0;
        return alpha;
    }
    double beta = -std::copysign(std::hypot(alpha, xnorm), alpha);
    tau = (beta - alpha) / beta;
    double scale = 1.0 / (alpha - beta);
    for (size_t i = 1; i < L; ++i) v[i] = x[i] * scale;
    return beta;
}

}  // namespace

Tridiagonal tridiagonalize_serial(std::vector<double>& s, size_t n) {
    Tridiagonal t;
    t.d.resize(n);
    t.e.assign(n > 0 ? n - 1 : 0, 0.0);
    if (n == 0) return t;

    std::vector<double> v, p, w;
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t L = n - j - 1;
        std::vector<double> x(L);
        for (size_t i = 0; i < L; ++i) x[i] = s[(j + 1 + i) * n + j];
        double tau;
        double beta = make_householder(x.data(), L, v, tau);
        t.e[j] = beta;
        t.d[j] = s[j * n + j];
        if (tau == 0) continue;

        p.assign(L, 0.0);
        for (size_t r = 0; r < L; ++r) {
            const double* row = &s[(j + 1 + r) * n + (j + 1)];
            double acc = 0;
            for (size_t c = 0; c < L; ++c) acc += row[c] * v[c];
            p[r] = tau * acc;
        }
        double pv = 0;
        for (size_t r = 0; r < L; ++r) pv += p[r] * v[r];
        double half = tau * pv / 2;
        w.assign(L, 0.0);
        for (size_t r = 0; r < L; ++r) w[r] = p[r] - half * v[r];
        for (size_t r = 0; r < L; ++r) {
            double* row = &s[(j + 1 + r) * n + (j + 1)];
            double vr = v[r], wr = w[r];
            for (size_t c = 0; c < L; ++c) row[c] -= vr * w[c] + wr * v[c];
        }
    }
    if (n >= 2) {
        t.d[n - 2] = s[(n - 2) * n + (n - 2)];
        t.e[n - 2] = s[(n - 1) * n + (n - 2)];
    }
    t.d[n - 1] = s[(n - 1) * n + (n - 1)];
    return t;
}

Tridiagonal tridiagonalize(std::vector<double>& s, size_t n) {
    constexpr size_t kBlock = 48;
    constexpr size_t kTail = 128;
    Tridiagonal t;
    t.d.resize(n);
    t.e.assign(n > 0 ? n - 1 : 0, 0.0);
    if (n == 0) return t;

    std::vector<double> V, W;  // L x nb panels, column-major
    std::vector<double> v, p;

    size_t j0 = 0;
    while (n - j0 > kTail) {
        size_t nb = std::min(kBlock, n - j0 - 2);
        size_t L0 = n - j0;         // rows j0..n-1, relative indexing
        V.assign(L0 * nb, 0.0);
        W.assign(L0 * nb, 0.0);

        for (size_t i = 0; i < nb; ++i) {
            size_t col = j0 + i;
            size_t L = n - col - 1;  // length below the diagonal

            // bring column col up to date with the panel reflectors so far
            if (i > 0) {
                for (size_t r = col; r < n; ++r) {
                    double acc = s[r * n + col];
                    size_t rr = r - j0, cr = col - j0;
                    for (size_t q = 0; q < i; ++q)
                        acc -= V[q * L0 + rr] * W[q * L0 + cr] + W[q * L0 + rr] * V[q * L0 + cr];
                    s[r * n + col] = acc;
                }
            }
            t.d[col] = s[col * n + col];

            double tau;
            std::vector<double> x(L);
            for (size_t r = 0; r < L; ++r) x[r] = s[(col + 1 + r) * n + col];
            double beta = make_householder(x.data(), L, v, tau);
            t.e[col] = beta;
            for (size_t r = 0; r < L; ++r) V[i * L0 + (r + i + 1)] = v[r];
            if (tau == 0) continue;

            // w = tau (A_stale v - V (W^T v) - W (V^T v)) then the rank-1 correction
            p.assign(L, 0.0);
#pragma omp parallel for schedule(static)
            for (long r = 0; r < long(L); ++r) {
                const double* row = &s[(col + 1 + r) * n + (col + 1)];
                double acc = 0;
                for (size_t c = 0; c < L; ++c) acc += row[c] * v[c];
                p[r] = acc;
            }
            // corrections from panel columns 0..i-1
            for (size_t q = 0; q < i; ++q) {
                const double* Vq = &V[q * L0 + (i + 1)];
                const double* Wq = &W[q * L0 + (i + 1)];
                double wv = 0, vv = 0;
                for (size_t r = 0; r < L; ++r) {
                    wv += Wq[r] * v[r];
                    vv += Vq[r] * v[r];
                }
                for (size_t r = 0; r < L; ++r) p[r] -= Vq[r] * wv + Wq[r] * vv;
            }
            double pv = 0;
            for (size_t r = 0; r < L; ++r) {
                p[r] *= tau;
                pv += p[r] * v[r];
            }
            double half = tau * pv / 2;
            for (size_t r = 0; r < L; ++r) W[i * L0 + (r + i + 1)] = p[r] - half * v[r];
        }

        // trailing update A -= V W^T + W V^T over rows/cols j0+nb..n-1
        size_t base = j0 + nb;
        size_t M = n - base;
#pragma omp parallel for schedule(static)
        for (long r = 0; r < long(M); ++r) {
            double* row = &s[(base + r) * n + base];
            size_t rr = (base + r) - j0;
            for (size_t q = 0; q < nb; ++q) {
                double vr = V[q * L0 + rr], wr = W[q * L0 + rr];
                const double* Vq = &V[q * L0 + (nb)];
                const double* Wq = &W[q * L0 + (nb)];
                if (vr != 0 || wr != 0) {
                    for (size_t c = 0; c < M; ++c) row[c] -= vr * Wq[c] + wr * Vq[c];
                }
            }
        }
        j0 = base;
    }

    // unblocked tail on the remaining submatrix
    size_t m = n - j0;
    std::vector<double> tail(m * m);
    for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c) tail[r * m + c] = s[(j0 + r) * n + (j0 + c)];
    Tridiagonal tt = tridiagonalize_serial(tail, m);
    for (size_t i = 0; i < m; ++i) t.d[j0 + i] = tt.d[i];
    for (size_t i = 0; i + 1 < m; ++i) t.e[j0 + i] = tt.e[i];
    return t;
}

long sturm_count(const Tridiagonal& t, double x) {
    constexpr double tiny = 1e-300;
    size_t n = t.n();
    long cnt = 0;
    double q = t.d[0] - x;
    if (q < 0) ++cnt;
    for (size_t i = 1; i < n; ++i) {
        if (q == 0) q = tiny;
        q = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / q;
        if (q < 0) ++cnt;
    }
    return cnt;
}

ExtremeEigen extreme_eigenvalues(const Tridiagonal& t) {
    size_t n = t.n();
    if (n == 0) throw std::invalid_argument("extreme_eigenvalues: empty matrix");
    double lo = t.d[0], hi = t.d[0];
    for (size_t i = 0; i < n; ++i) {
        double r = 0;
        if (i > 0) r += std::abs(t.e[i - 1]);
        if (i + 1 < n) r += std::abs(t.e[i]);
        lo = std::min(lo, t.d[i] - r);
        hi = std::max(hi, t.d[i] + r);
    }
    double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    double tol = 1e-13 * scale;

    ExtremeEigen out;
    auto bisect = [&](long target) {
        double a = lo, b = hi;
        while (b - a > tol) {
            double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (sturm_count(t, mid) >= target)
                b = mid;
            else
                a = mid;
            ++out.iterations;
        }
        out.residual = std::max(out.residual, b - a);
        return 0.5 * (a + b);
    };
    out.min = bisect(1);
    out.max = bisect(static_cast<long>(n));
    return out;
}

std::vector<double> all_eigenvalues(Tridiagonal t) {
    // implicit-shift QL with Wilkinson shifts
    long n = static_cast<long>(t.n());
    std::vector<double>& d = t.d;
    std::vector<double> e = t.e;
    e.push_back(0.0);

    for (long l = 0; l < n; ++l) {
        int iter = 0;
        long m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 64) throw std::runtime_error("all_eigenvalues: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                long i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace tilewave::numeric
