#pragma once

#include "tilewave/groups.hpp"
#include "tilewave/overlay.hpp"

#include <array>
#include <optional>

namespace tilewave::tiles {

using geometry::Lattice2;
using geometry::Point2;
using geometry::Region;

/// Pair of opposite wedges |x| in (1,a), |y| < b|x|/2, with the six-piece
/// partition used by the shift-and-merge construction.
/// Partition order: W+1, W+2, W+3, W-1, W-2, W-3 (W+1 is the |y| <= b/2 band,
/// W+2 the upper triangle, W+3 the lower one; W-i = -W+i).
struct ShearletTile {
    groups::ShearletParams params;
    Region region;
    std::array<Region, 6> partition;

    static const std::array<const char*, 6> labels;
    Rational area() const { return region.area(); }
};

ShearletTile shearlet_tile(const groups::ShearletParams& p);

/// Result of shifting the six partition pieces and overlaying them.  When the
/// pieces overlap somewhere the construction fails for those parameters and
/// `overlap` holds an exact witness cell.
struct ShiftMerge {
    Region merged;
    std::vector<Point2> shifts;
    std::optional<geometry::OverlayCell> overlap;

    bool ok() const { return !overlap.has_value(); }
};

ShiftMerge shearlet_shift_merge(const ShearletTile& t);

enum class LatticeSource { FormulaDerived, AreaForced };

struct LatticePrediction {
    Lattice2 lattice;
    long k_predicted = 0;
    bool consistent = false;  // exact identity k * covolume == tile area
    LatticeSource source = LatticeSource::AreaForced;
};

/// Candidate tiling lattices for the shearlet tile: first the closed-form
/// candidate (minimal alpha, beta housing the construction's shift vectors),
/// then the area-forced family Gamma = alpha*Z x beta*Z with integral
/// k = area/(alpha*beta).  Candidates are predictions; certification is the
/// covering-function oracle's job.
std::vector<LatticePrediction> shearlet_lattice_candidates(const groups::ShearletParams& p,
                                                           long denom_bound = 12);

/// Trapezoid pair |y| in (1,a], |x| <= |y| in b-scaled coordinates
/// (x replaced by x/b, b = tan(pi/n)); the scaling keeps every coordinate
/// rational, and translational tiling is invariant under the common linear
/// change of variables.  Partition order: V+1, V+2, V+3, V-1, V-2, V-3.
struct SimilitudeTile {
    groups::SimilitudeParams params;
    Region region;
    std::array<Region, 6> partition;

    static const std::array<const char*, 6> labels;
    double b() const;  // tan(pi/n), the scale factor removed from x
    Rational area() const { return region.area(); }
};

SimilitudeTile similitude_tile(const groups::SimilitudeParams& p);

/// Scaled lattice (a+1)Z x Z with k = 2(a-1); always area-consistent.
LatticePrediction similitude_lattice(const groups::SimilitudeParams& p);

/// Shift-and-merge for the similitude tile (scaled coordinates); the shifts
/// are parameter-uniform, unlike the shearlet ones.
ShiftMerge similitude_shift_merge(const SimilitudeTile& t);

/// Regular n-gon ring a^level * (K_n \ a^{-1} K_n), as n trapezoid sectors in
/// unscaled (shadow) coordinates.  Sector 0 spans the angular interval of the
/// upper half of the tile; sector j is its rotation by 2*pi*j/n.
geometry::ShadowRegion polygon_ring(const groups::SimilitudeParams& p, long level);

/// Vertices of a^level * K_n (outer polygon of the ring at that level).
geometry::ShadowPolygon ring_outer_polygon(const groups::SimilitudeParams& p, long level);

}  // namespace tilewave::tiles
