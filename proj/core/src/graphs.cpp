#include "gpm/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace gpm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

Matrix path_laplacian(int t) {
  if (t < 2) throw std::invalid_argument("path_laplacian: t must be >= 2");
  Matrix L(t, t);
  for (int i = 0; i + 1 < t; ++i) {
    L(i, i) += 1.0;
    L(i + 1, i + 1) += 1.0;
    L(i, i + 1) -= 1.0;
    L(i + 1, i) -= 1.0;
  }
  return L;
}

Matrix cycle_laplacian(int t) {
  if (t < 3) throw std::invalid_argument("cycle_laplacian: t must be >= 3");
  Matrix L(t, t);
  for (int i = 0; i < t; ++i) {
    const int j = (i + 1) % t;
    L(i, i) += 1.0;
    L(j, j) += 1.0;
    L(i, j) -= 1.0;
    L(j, i) -= 1.0;
  }
  return L;
}

std::vector<double> path_laplacian_spectrum_formula(int t) {
  std::vector<double> ev(t);
  for (int k = 0; k < t; ++k) ev[k] = 2.0 * (1.0 - std::cos(kPi * k / t));
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> cycle_laplacian_spectrum_formula(int t) {
  std::vector<double> ev(t);
  for (int k = 0; k < t; ++k) {
    const double s = std::sin(kPi * k / t);
    ev[k] = 4.0 * s * s;
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("symmetric_eigenvalues: not square");
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd em(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) em(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(em, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigenvalues: eigensolver failed");
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = solver.eigenvalues()[i];
  return ev;
}

Matrix weighted_laplacian(int nv, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<double>& weights) {
  if (weights.size() != edges.size())
    throw std::invalid_argument("weighted_laplacian: weight count mismatch");
  Matrix L(nv, nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    if (i < 0 || j < 0 || i >= nv || j >= nv || i == j)
      throw std::invalid_argument("weighted_laplacian: bad edge");
    if (weights[e] < 0.0)
      throw std::invalid_argument("weighted_laplacian: negative weight");
    L(i, i) += weights[e];
    L(j, j) += weights[e];
    L(i, j) -= weights[e];
    L(j, i) -= weights[e];
  }
  return L;
}

std::vector<long long> cycle_laplacian_elementary_symmetric(int t) {
  if (t < 3 || t > 16)
    throw std::invalid_argument("cycle_laplacian_elementary_symmetric: need 3 <= t <= 16");

  // Integer cycle Laplacian.
  std::vector<std::vector<long long>> A(t, std::vector<long long>(t, 0));
  for (int i = 0; i < t; ++i) {
    const int j = (i + 1) % t;
    A[i][i] += 1;
    A[j][j] += 1;
    A[i][j] -= 1;
    A[j][i] -= 1;
  }

  // Faddeev-LeVerrier: M_0 = I, c_0 = 1; M_k = A M_{k-1} + c_{k-1} I,
  // c_k = -tr(A M_k)/k. The divisions are exact for an integer matrix.
  // Char poly is x^t + c_1 x^{t-1} + ... + c_t with c_k = (-1)^k E_k.
  using I128 = __int128;
  std::vector<std::vector<I128>> M(t, std::vector<I128>(t, 0));
  for (int i = 0; i < t; ++i) M[i][i] = 1;
  std::vector<I128> coef(t + 1, 0);
  coef[0] = 1;

  for (int k = 1; k <= t; ++k) {
    // AM = A * M
    std::vector<std::vector<I128>> AM(t, std::vector<I128>(t, 0));
    for (int i = 0; i < t; ++i)
      for (int l = 0; l < t; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < t; ++j) AM[i][j] += A[i][l] * M[l][j];
      }
    I128 trace = 0;
    for (int i = 0; i < t; ++i) trace += AM[i][i];
    coef[k] = -trace / k;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) M[i][j] = AM[i][j] + (i == j ? coef[k] : 0);
  }

  std::vector<long long> ek(t + 1);
  for (int k = 0; k <= t; ++k) {
    const I128 v = (k % 2 == 0) ? coef[k] : -coef[k];
    ek[k] = static_cast<long long>(v);
  }
  return ek;
}

}  // namespace gpm
