#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tilewave::numeric {

/// Real symmetric tridiagonal matrix: diagonal d, off-diagonal e (|e| = n-1).
struct Tridiagonal {
    std::vector<double> d, e;
    size_t n() const { return d.size(); }
};

/// Realify an n x n complex Hermitian matrix to the 2n x 2n symmetric form
/// [[Re, -Im], [Im, Re]]; the spectrum is doubled in multiplicity.
std::vector<double> realify(const std::vector<std::complex<double>>& a, size_t n);

/// Householder tridiagonalization of a real symmetric matrix (full storage,
/// row-major, destroyed).  Blocked panels with OpenMP-parallel symmetric
/// matvec and trailing update.
Tridiagonal tridiagonalize(std::vector<double>& s, size_t n);

/// Unblocked single-thread reference, kept for testing.
Tridiagonal tridiagonalize_serial(std::vector<double>& s, size_t n);

/// Number of eigenvalues strictly below x (Sturm sequence count).
long sturm_count(const Tridiagonal& t, double x);

struct ExtremeEigen {
    double min = 0, max = 0;
    long iterations = 0;
    double residual = 0;  // final bisection bracket width
};

/// Extreme eigenvalues by bisection on the Sturm count.
ExtremeEigen extreme_eigenvalues(const Tridiagonal& t);

/// Full spectrum, ascending, by implicit-shift QL.
std::vector<double> all_eigenvalues(Tridiagonal t);

}  // namespace tilewave::numeric
