#pragma once

#include "tilewave/groups.hpp"
#include "tilewave/overlay.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace tilewave::tiling {

using geometry::CoverageReport;
using geometry::Lattice2;
using geometry::Region;

/// Exact covering function of w over the fundamental domain of g.
///
/// Every lattice translate gamma with (gamma + F) meeting bbox(w) is clipped
/// against w; the clips are pulled back into F and overlaid.  Cell
/// multiplicities are the covering values; boundaries are never counted.
CoverageReport covering_function(const Region& w, const Lattice2& g);

struct TilingVerdict {
    bool pass = false;
    long k = 0;
    std::optional<geometry::CoverageCell> witness;  // a cell of wrong multiplicity
    CoverageReport report;
};

/// Pass iff the covering function is constant k.  A pass implies the exact
/// identity area(w) == k * covolume(g), which is re-checked on every run.
TilingVerdict verify_k_tiling(const Region& w, const Lattice2& g, long k);

/// Histogram of covering values at seeded rational sample points.
/// Points are basis*(n1, n2)/2^31 with 31-bit numerators from the per-sample
/// splitmix64 stream; membership tests are exact, boundary hits are discarded.
struct SampleHistogram {
    std::map<long, long> counts;
    long boundary_discards = 0;
    long samples = 0;
    std::uint64_t seed = 0;
};

SampleHistogram sample_covering(const Region& w, const Lattice2& g, long count,
                                std::uint64_t seed);
/// Plain rational-arithmetic reference; same draw protocol, identical output.
SampleHistogram sample_covering_serial(const Region& w, const Lattice2& g, long count,
                                       std::uint64_t seed);

/// Sampled certificate that the dual action of the discrete shear family
/// covers the frequency plane exactly once.  Each sample is factorized to its
/// unique claimed cover; membership is re-checked through the matrix pullback
/// and every neighbor within the index window must fail to cover.
struct MultiplicativeReport {
    long samples = 0;
    long violations = 0;
    long boundary_discards = 0;
    std::uint64_t seed = 0;
    std::vector<std::array<double, 2>> violation_points;  // first few

    bool pass() const { return violations == 0; }
};

MultiplicativeReport verify_multiplicative_shearlet(const groups::ShearletParams& p,
                                                    long samples, std::uint64_t seed,
                                                    long k_window = 2, long m_window = 2);
MultiplicativeReport verify_multiplicative_shearlet_serial(const groups::ShearletParams& p,
                                                           long samples, std::uint64_t seed,
                                                           long k_window = 2, long m_window = 2);

/// Combinatorial + shadow check that the similitude family tiles the plane:
/// the n/2 rotations of the two opposing sectors partition each polygon ring,
/// consecutive rings share exactly their common boundary polygon, and ring
/// areas exhaust every disk as the level range grows.
struct SimilitudeTilingReport {
    bool sectors_partition = false;
    bool rings_nested = false;
    bool coverage_monotone = false;
    long levels = 0;

    bool pass() const { return sectors_partition && rings_nested && coverage_monotone; }
};

SimilitudeTilingReport verify_multiplicative_similitude(const groups::SimilitudeParams& p,
                                                        long levels);

/// Round-trip/uniqueness certificate for the quasi-lattice factorization on
/// group coordinates (t, r).
struct QuasiLatticeReport {
    long samples = 0;
    long violations = 0;
    long discards = 0;
    double max_rel_error = 0;
    std::uint64_t seed = 0;

    bool pass() const { return violations == 0; }
};

QuasiLatticeReport quasi_lattice_check(const groups::ShearletParams& p, long samples,
                                       std::uint64_t seed);
QuasiLatticeReport quasi_lattice_check_serial(const groups::ShearletParams& p, long samples,
                                              std::uint64_t seed);

}  // namespace tilewave::tiling
