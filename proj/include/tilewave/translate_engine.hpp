#pragma once

#include "tilewave/geometry.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tilewave::detail {

/// Exact membership of fundamental-domain samples in lattice translates of a
/// region, evaluated in lattice coefficient coordinates: the point
/// basis*(u, v) lies in (w + basis*(i, j)) iff (u - i, v - j) lies in the
/// preimage basis^{-1} w.
///
/// Sample points are (n1, n2)/2^31.  After one global scaling by
/// D * 2^31 (D = lcm of preimage vertex denominators) every predicate is an
/// integer sign computation in int128; when the scaled coordinates would
/// overflow, evaluation falls back to rational arithmetic (still exact).
class TranslateEngine {
public:
    TranslateEngine(const geometry::Region& w, const geometry::Lattice2& g);

    /// Covering multiplicity at the sample, or -1 on a boundary hit.
    int multiplicity_at(std::uint32_t n1, std::uint32_t n2) const;

    /// Lattice coordinates (i, j), sorted, of all translates whose copy of w
    /// strictly contains the sample; nullopt on a boundary hit.
    std::optional<std::vector<std::pair<long, long>>> translates_at(std::uint32_t n1,
                                                                    std::uint32_t n2) const;

    /// Same, for an arbitrary exact point given in lattice coefficients.
    std::optional<std::vector<std::pair<long, long>>> translates_at(const Rational& u,
                                                                    const Rational& v) const;

    bool fast_path() const { return fast_ok_; }

private:
    struct ScaledPolygon {
        std::vector<std::pair<std::int64_t, std::int64_t>> v;
        std::int64_t xmin, xmax, ymin, ymax;
    };

    enum class Loc { Inside, Boundary, Outside };
    Loc locate_scaled(const ScaledPolygon& poly, std::int64_t px, std::int64_t py) const;

    geometry::Region preimage_;
    long i_lo_, i_hi_, j_lo_, j_hi_;
    bool fast_ok_ = false;
    Integer denom_;                       // D
    std::int64_t sample_scale_ = 0;       // D (multiplies 31-bit numerators)
    std::int64_t translate_scale_ = 0;    // D * 2^31 (multiplies integer translates)
    std::vector<ScaledPolygon> scaled_;
};

}  // namespace tilewave::detail
