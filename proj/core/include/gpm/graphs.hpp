#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpm/matrix.hpp"

namespace gpm {

// Laplacian of the path on t vertices (t >= 2).
Matrix path_laplacian(int t);
// Laplacian of the cycle on t vertices (t >= 3).
Matrix cycle_laplacian(int t);

// Eigenvalues in the closed forms 2(1 - cos(pi k / t)) and 4 sin^2(pi k / t),
// k = 0..t-1, sorted ascending.
std::vector<double> path_laplacian_spectrum_formula(int t);
std::vector<double> cycle_laplacian_spectrum_formula(int t);

// Eigenvalues of a symmetric matrix, sorted ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

// Laplacian Delta^T D Delta of an edge-weighted graph given as
// (edge list, per-edge weights) on vertices 0..nv-1.
Matrix weighted_laplacian(int nv, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<double>& weights);

// Elementary symmetric polynomials E_0..E_t of the cycle Laplacian's
// eigenvalues, computed exactly in integer arithmetic from the
// characteristic polynomial (Faddeev-LeVerrier). E_k counts the rooted
// spanning forests of the t-cycle with k edges. 3 <= t <= 16.
std::vector<long long> cycle_laplacian_elementary_symmetric(int t);

}  // namespace gpm
