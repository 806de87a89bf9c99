#pragma once

#include "tilewave/geometry.hpp"

namespace tilewave::geometry {

struct OverlayCell {
    Polygon poly;
    long multiplicity = 0;  // number of input regions whose interior contains the cell
};

/// Exact overlay of a family of regions.
///
/// The arrangement of all input edges is decomposed into vertical slabs at
/// every vertex and every pairwise edge intersection; inside a slab edges
/// cannot cross, so the slab splits into trapezoid cells bounded by two
/// consecutive edges.  Each cell's multiplicity is decided by an exact
/// point-in-region test at an interior rational sample point.  Only cells of
/// multiplicity >= 1 are returned, sorted by slab and height.
std::vector<OverlayCell> overlay(const std::vector<Region>& regions);

/// Cells with their multiplicities dropped, as a Region.
Region cells_to_region(const std::vector<OverlayCell>& cells);

/// Equality almost everywhere: the symmetric difference has zero area.
bool region_equal(const Region& a, const Region& b);

namespace detail {
/// Exact intersection of a (possibly non-convex) simple polygon with a convex
/// window, via the overlay engine.
Region clip_general(const Polygon& part, const Polygon& window);
}  // namespace detail

}  // namespace tilewave::geometry
