#pragma once

#include "tilewave/geometry.hpp"
#include "tilewave/hermitian_eig.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace tilewave::exponentials {

using geometry::Lattice2;
using geometry::Point2;
using geometry::Region;

struct ShiftCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dual lattice: basis replaced by its transpose inverse, exact.
Lattice2 dual_lattice(const Lattice2& g);

/// Translation set Lambda = union of k shifted copies of the dual lattice.
/// The shifts are real-valued; admissibility is certified numerically
/// (det_criterion), not assumed.
struct TranslationSet {
    Lattice2 dual;
    std::vector<std::array<double, 2>> shifts;
    std::uint64_t seed = 0;
    bool seeded = false;

    long k() const { return static_cast<long>(shifts.size()); }
};

/// Seeded shifts drawn uniformly from the dual fundamental domain.
/// Throws ShiftCollision when two shifts coincide modulo the dual lattice
/// (within 1e-12 in lattice coordinates).
TranslationSet generate_lambda(const Lattice2& g, long k, std::uint64_t seed);
TranslationSet generate_lambda(const Lattice2& g, std::vector<std::array<double, 2>> shifts);

/// The set of lattice points gamma with x - gamma strictly inside w, sorted by
/// lattice coordinates; nullopt when x meets any translate boundary.
std::optional<std::vector<Point2>> covering_translates(const Region& w, const Lattice2& g,
                                                       const Point2& x);

/// Admissibility certificate for the shifts: at seeded rational sample points
/// x, the k x k matrix M[j][m] = exp(2 pi i <x_j, gamma_m(x)>) built from the
/// covering translates must stay uniformly invertible.  min |det M| near zero
/// flags an inadmissible shift choice.
struct DetReport {
    double min_abs_det = 0;
    std::array<long, 10> histogram{};  // |det| / Hadamard bound, 10 bins on [0,1]
    long samples = 0;
    long discards = 0;
    std::uint64_t seed = 0;
};

DetReport det_criterion(const Region& w, const Lattice2& g, const TranslationSet& ts,
                        long samples, std::uint64_t seed);
DetReport det_criterion_serial(const Region& w, const Lattice2& g, const TranslationSet& ts,
                               long samples, std::uint64_t seed);

/// Fourier transform of the region indicator, int_W exp(-2 pi i <xi, x>) dx,
/// in closed form via the divergence theorem (one term per boundary edge).
/// At xi = 0 this is the exact area.  Phases are reduced modulo 1 before
/// exponentiation, so integer-frequency values on integer geometry are exact.
std::complex<double> polygon_ft(const geometry::ShadowRegion& w, double xi1, double xi2);
std::complex<double> polygon_ft(const Region& w, double xi1, double xi2);

/// Label of a point of Lambda: shift index and dual-lattice coordinates.
struct LambdaLabel {
    long shift_idx = 0;
    long i = 0, j = 0;
    double x = 0, y = 0;
};

/// Lambda restricted to the closed disk of the given radius, ordered by
/// (shift index, i, j).
std::vector<LambdaLabel> lambda_in_ball(const TranslationSet& ts, double radius);

/// Hermitian Gram matrix G[r][c] = int_W e^{2 pi i <lambda_c - lambda_r, x>} dx
/// of the exponentials over the truncated translation set.
struct GramMatrix {
    std::vector<LambdaLabel> labels;
    std::vector<std::complex<double>> a;  // row-major n x n
    size_t n = 0;
    double radius = 0;

    std::complex<double>& at(size_t r, size_t c) { return a[r * n + c]; }
    const std::complex<double>& at(size_t r, size_t c) const { return a[r * n + c]; }
};

GramMatrix gram(const Region& w, const TranslationSet& ts, double radius);
GramMatrix gram_serial(const Region& w, const TranslationSet& ts, double radius);

/// Extreme eigenvalues of a Gram finite section.  The estimates bound the
/// true lower Riesz constant from above and the upper one from below; the
/// caveat records that a finite section never certifies the infinite system.
struct BoundsEstimate {
    double lambda_min = 0, lambda_max = 0;
    double truncation_radius = 0;
    long iterations = 0;
    double residual = 0;
    std::string caveat;
};

BoundsEstimate riesz_bounds(const GramMatrix& g);

/// Gram container I/O: binary (little-endian, versioned header) and CSV.
void write_gram_binary(const GramMatrix& g, const std::string& path);
GramMatrix read_gram_binary(const std::string& path);
void write_gram_csv(const GramMatrix& g, const std::string& path);

}  // namespace tilewave::exponentials
