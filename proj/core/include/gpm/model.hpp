#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "gpm/matrix.hpp"
#include "gpm/permutation.hpp"

namespace gpm {

// One draw of the planted model: x_i i.i.d. standard Gaussian in R^d,
// y_{planted(i)} = x_i + z_i with z_i ~ N(0, sigma2 I_d), all streams
// derived from `seed`. Immutable after construction and safe to share
// across worker threads.
struct Instance {
  int n = 0;
  int d = 0;
  double sigma2 = 0.0;
  std::uint64_t seed = 0;
  bool planted_random = false;  // false: planted fixed to identity
  Matrix points_x;              // n x d, row i = x_i
  Matrix points_y;              // n x d, row j = y_j in observed order
  Permutation planted;          // y_{planted(i)} = x_i + z_i
};

struct CostMatrices {
  Matrix w0;  // squared distances ||x_i - y_j||^2
  Matrix w;   // inner products <x_i, y_j>
};

struct ErrorReport {
  int error_count = 0;
  double poly_rate = 0.0;  // log(1 v |E|) / log n
  std::set<int> error_indices;
};

// The x and unit-noise streams are sigma2-independent: regenerating with
// the same seed but a different sigma2 reuses the same x's and rescales
// the same noise draws, which is what the paired-noise experiments need.
Instance generate_instance(int n, int d, double sigma2, std::uint64_t seed,
                           bool planted_random = false);

CostMatrices cost_matrices(const Instance& inst);

ErrorReport error_report(const Permutation& estimate, const Permutation& truth, int n);

// JSON round-trip: parameters and seed only, points are regenerated on load.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& json_text);

// Flat binary dump (row-major float64, rows*cols values, no header).
void write_matrix_binary(const Matrix& m, const std::string& path);

}  // namespace gpm
