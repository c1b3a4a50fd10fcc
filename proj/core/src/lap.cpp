#include "gpm/lap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gpm {

namespace {

constexpr double kBig = std::numeric_limits<double>::max();

void check_input(const Matrix& cost) {
  if (cost.rows() == 0) throw std::invalid_argument("assignment: empty matrix");
  if (!cost.square()) throw std::invalid_argument("assignment: matrix not square");
  for (std::size_t i = 0; i < cost.rows(); ++i)
    for (std::size_t j = 0; j < cost.cols(); ++j)
      if (!std::isfinite(cost(i, j)))
        throw std::invalid_argument("assignment: non-finite entry");
}

// Dense Jonker-Volgenant for minimization: column reduction, reduction
// transfer, two augmenting-row-reduction sweeps, then shortest augmenting
// paths for the remaining free rows. Fills rowsol and the column duals v.
void lapjv(const Matrix& c, std::vector<int>& rowsol, std::vector<double>& v) {
  const int n = static_cast<int>(c.rows());
  rowsol.assign(n, -1);
  v.assign(n, 0.0);
  std::vector<int> colsol(n, -1);
  std::vector<int> free_rows(n, 0);
  std::vector<int> matches(n, 0);

  // Column reduction. Scanning j downward and i upward keeps ties
  // deterministic: the smallest row index wins each column.
  for (int j = n - 1; j >= 0; --j) {
    double minv = c(0, j);
    int imin = 0;
    for (int i = 1; i < n; ++i) {
      if (c(i, j) < minv) {
        minv = c(i, j);
        imin = i;
      }
    }
    v[j] = minv;
    if (++matches[imin] == 1) {
      rowsol[imin] = j;
      colsol[j] = imin;
    } else {
      colsol[j] = -1;
    }
  }

  // Reduction transfer.
  int numfree = 0;
  for (int i = 0; i < n; ++i) {
    if (matches[i] == 0) {
      free_rows[numfree++] = i;
    } else if (matches[i] == 1) {
      const int j1 = rowsol[i];
      double minv = kBig;
      for (int j = 0; j < n; ++j)
        if (j != j1) minv = std::min(minv, c(i, j) - v[j]);
      if (minv != kBig) v[j1] -= minv;
    }
  }

  // Augmenting row reduction, two sweeps.
  for (int loop = 0; loop < 2; ++loop) {
    int k = 0;
    const int prvnumfree = numfree;
    numfree = 0;
    while (k < prvnumfree) {
      const int i = free_rows[k++];
      double umin = c(i, 0) - v[0];
      double usubmin = kBig;
      int j1 = 0, j2 = -1;
      for (int j = 1; j < n; ++j) {
        const double h = c(i, j) - v[j];
        if (h < usubmin) {
          if (h >= umin) {
            usubmin = h;
            j2 = j;
          } else {
            usubmin = umin;
            umin = h;
            j2 = j1;
            j1 = j;
          }
        }
      }
      int i0 = colsol[j1];
      bool improved = false;
      if (umin < usubmin) {
        // Guard against a sub-ulp price change looping forever.
        const double nv = v[j1] - (usubmin - umin);
        improved = nv < v[j1];
        v[j1] = nv;
      } else if (i0 >= 0 && j2 >= 0) {
        j1 = j2;
        i0 = colsol[j1];
      }
      rowsol[i] = j1;
      colsol[j1] = i;
      if (i0 >= 0) {
        if (improved)
          free_rows[--k] = i0;  // reconsider the bumped row right away
        else
          free_rows[numfree++] = i0;
      }
    }
  }

  // Shortest augmenting path for each remaining free row.
  std::vector<double> d(n);
  std::vector<int> pred(n), collist(n);
  for (int f = 0; f < numfree; ++f) {
    const int freerow = free_rows[f];
    for (int j = 0; j < n; ++j) {
      d[j] = c(freerow, j) - v[j];
      pred[j] = freerow;
      collist[j] = j;
    }

    int low = 0, up = 0, last = -1, endofpath = -1;
    double mind = 0.0;
    bool unassigned_found = false;
    do {
      if (up == low) {
        // Form the next block of columns at minimal tentative distance.
        last = low - 1;
        mind = d[collist[up++]];
        for (int k = up; k < n; ++k) {
          const int j = collist[k];
          const double h = d[j];
          if (h <= mind) {
            if (h < mind) {
              up = low;
              mind = h;
            }
            collist[k] = collist[up];
            collist[up++] = j;
          }
        }
        for (int k = low; k < up; ++k) {
          if (colsol[collist[k]] < 0) {
            endofpath = collist[k];
            unassigned_found = true;
            break;
          }
        }
      }
      if (!unassigned_found) {
        const int j1 = collist[low++];
        const int i = colsol[j1];
        const double h = c(i, j1) - v[j1] - mind;
        for (int k = up; k < n; ++k) {
          const int j = collist[k];
          const double v2 = c(i, j) - v[j] - h;
          if (v2 < d[j]) {
            pred[j] = i;
            if (v2 == mind) {
              if (colsol[j] < 0) {
                endofpath = j;
                unassigned_found = true;
                break;
              }
              collist[k] = collist[up];
              collist[up++] = j;
            }
            d[j] = v2;
          }
        }
      }
    } while (!unassigned_found);

    for (int k = 0; k <= last; ++k) {
      const int j1 = collist[k];
      v[j1] += d[j1] - mind;
    }

    int i;
    do {
      i = pred[endofpath];
      colsol[endofpath] = i;
      std::swap(rowsol[i], endofpath);
    } while (i != freerow);
  }
}

// Another optimal permutation exists iff the digraph on columns with an arc
// rowsol(a) -> b for every off-assignment tight arc (i, b) has a directed
// cycle: any alternative optimum must use tight arcs only, and a different
// perfect matching of tight arcs is exactly such a cycle.
bool detect_alternative_optimum(const Matrix& c, const std::vector<int>& rowsol,
                                const std::vector<double>& v) {
  const int n = static_cast<int>(c.rows());
  double scale = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(c(i, j)));
  const double eps = 1e-9 * scale;

  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    const int ji = rowsol[i];
    const double ui = c(i, ji) - v[ji];
    for (int j = 0; j < n; ++j) {
      if (j == ji) continue;
      if (c(i, j) - ui - v[j] <= eps) adj[ji].push_back(j);
    }
  }

  // Iterative DFS cycle detection.
  std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    stack.clear();
    stack.emplace_back(s, 0);
    color[s] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx < adj[u].size()) {
        const int w = adj[u][idx++];
        if (color[w] == 1) return true;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

double assignment_objective(const Matrix& cost, const Permutation& perm) {
  double total = 0.0;
  for (int i = 0; i < perm.size(); ++i) total += cost(i, perm(i));
  return total;
}

AssignmentSolution solve_assignment(const Matrix& cost, Direction direction) {
  check_input(cost);
  const int n = static_cast<int>(cost.rows());

  Matrix work = cost;
  if (direction == Direction::Maximize)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) work(i, j) = -work(i, j);

  std::vector<int> rowsol;
  std::vector<double> v;
  lapjv(work, rowsol, v);

  AssignmentSolution sol;
  sol.permutation = Permutation(rowsol);
  sol.direction = direction;
  sol.objective = assignment_objective(cost, sol.permutation);
  sol.alternative_optimum = detect_alternative_optimum(work, rowsol, v);
  return sol;
}

AssignmentSolution brute_force_assignment(const Matrix& cost, Direction direction) {
  check_input(cost);
  const int n = static_cast<int>(cost.rows());
  if (n > 10) throw std::invalid_argument("brute_force_assignment: n > 10");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double best_obj = assignment_objective(cost, Permutation(perm));
  bool tie_seen = false;
  while (std::next_permutation(perm.begin(), perm.end())) {
    double obj = 0.0;
    for (int i = 0; i < n; ++i) obj += cost(i, perm[i]);
    const bool better =
        direction == Direction::Minimize ? obj < best_obj : obj > best_obj;
    if (better) {
      best_obj = obj;
      best = perm;
      tie_seen = false;
    } else if (obj == best_obj) {
      tie_seen = true;
    }
  }

  AssignmentSolution sol;
  sol.permutation = Permutation(best);
  sol.direction = direction;
  sol.objective = best_obj;
  sol.alternative_optimum = tie_seen;
  return sol;
}

AssignmentSolution mle(const Instance& inst) {
  const CostMatrices cm = cost_matrices(inst);
  return solve_assignment(cm.w0, Direction::Minimize);
}

}  // namespace gpm
