#pragma once

#include "tilewave/exponentials.hpp"
#include "tilewave/groups.hpp"
#include "tilewave/tiling.hpp"

#include <map>
#include <variant>

namespace tilewave::wavelet {

using exponentials::GramMatrix;
using exponentials::TranslationSet;
using geometry::Region;

/// One dilation of the truncated system: scale index k and shear index m
/// (shearlet) or rotation index l (similitude).
struct DilationIndex {
    long k = 0;
    long ml = 0;
};

/// Frequency-domain description of the wavelet system: the tile W (so that
/// psi-hat = c_psi * 1_W), the dilation family with truncation bounds, and the
/// translation set.  Verification evidence must be attached before any Gram
/// assembly: the tile's multiplicative tiling report and a positive
/// determinant certificate for the shifts.
struct WaveletSystemDescriptor {
    Region tile;
    std::variant<groups::ShearletParams, groups::SimilitudeParams> params;
    long k_max = 2;
    long m_max = 2;  // ignored for similitude (l runs over the full range)
    TranslationSet translations;
    double c_psi = 1.0;

    bool tiling_verified = false;
    bool translations_verified = false;
    bool verified() const { return tiling_verified && translations_verified; }
};

/// psi(x) = c_psi * integral over W of e^{2 pi i <x, xi>} d xi.
std::complex<double> eval_psi(const WaveletSystemDescriptor& d, double x1, double x2);

/// Block-diagonal Gram of the dilated exponential system.  Each diagonal
/// block is computed independently through its dilated region (change of
/// variables), so block equality with the plain exponential Gram is a
/// genuine numerical check, not a copy.  Cross-dilation blocks are exactly
/// zero once pairwise disjointness of the dilated supports is verified.
struct SystemGram {
    GramMatrix full;
    std::vector<DilationIndex> dilations;
    size_t block_size = 0;
};

SystemGram system_gram(const WaveletSystemDescriptor& d, long k_cutoff, long m_cutoff,
                       double radius);

/// Finitely supported coefficients indexed by (dilation, translation).
struct CoefficientVector {
    std::map<std::pair<size_t, size_t>, std::complex<double>> entries;
};

struct InequalityTriple {
    double lhs = 0, middle = 0, rhs = 0;
    bool holds(double slack = 1e-9) const {
        return lhs <= middle * (1 + slack) + slack && middle <= rhs * (1 + slack) + slack;
    }
};

/// lhs = lambda_min * sum |c|^2, middle = c* G c, rhs = lambda_max * sum |c|^2.
InequalityTriple riesz_inequality_check(const SystemGram& sg,
                                        const exponentials::BoundsEstimate& bounds,
                                        const CoefficientVector& coeffs);

/// Node of the sampling grid {(A lambda, A)}: the wavelet coefficient at this
/// node is a sample of the continuous transform there.
struct GridNode {
    long k = 0;
    long ml = 0;
    double lambda1 = 0, lambda2 = 0;
    double a_lambda1 = 0, a_lambda2 = 0;
};

std::vector<GridNode> sampling_grid(const WaveletSystemDescriptor& d, long k_cutoff, long m_cutoff,
                                    double radius);

void write_grid_csv(const std::vector<GridNode>& grid, const std::string& path);

}  // namespace tilewave::wavelet
