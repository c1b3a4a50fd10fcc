#include "gpm/model.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gpm {

namespace {
// Substream indices under the instance seed. Keeping x, noise and the
// planted permutation on separate streams means toggling one knob never
// perturbs the draws of the others.
constexpr std::uint64_t kStreamX = 1;
constexpr std::uint64_t kStreamNoise = 2;
constexpr std::uint64_t kStreamPlanted = 3;
}  // namespace

Instance generate_instance(int n, int d, double sigma2, std::uint64_t seed,
                           bool planted_random) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  if (d < 1) throw std::invalid_argument("generate_instance: d must be >= 1");
  if (sigma2 < 0.0 || !std::isfinite(sigma2))
    throw std::invalid_argument("generate_instance: sigma2 must be finite and >= 0");

  Instance inst;
  inst.n = n;
  inst.d = d;
  inst.sigma2 = sigma2;
  inst.seed = seed;
  inst.planted_random = planted_random;
  inst.points_x = Matrix(n, d);
  inst.points_y = Matrix(n, d);

  Rng rx(derive_seed(seed, kStreamX));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) inst.points_x(i, j) = rx.normal();

  if (planted_random) {
    Rng rp(derive_seed(seed, kStreamPlanted));
    inst.planted = Permutation::random(n, rp);
  } else {
    inst.planted = Permutation::identity(n);
  }

  const double sigma = std::sqrt(sigma2);
  Rng rz(derive_seed(seed, kStreamNoise));
  for (int i = 0; i < n; ++i) {
    const int target = inst.planted(i);
    for (int j = 0; j < d; ++j)
      inst.points_y(target, j) = inst.points_x(i, j) + sigma * rz.normal();
  }
  return inst;
}

CostMatrices cost_matrices(const Instance& inst) {
  const int n = inst.n;
  const int d = inst.d;
  CostMatrices cm;
  cm.w0 = Matrix(n, n);
  cm.w = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    const double* xi = inst.points_x.row(i);
    for (int j = 0; j < n; ++j) {
      const double* yj = inst.points_y.row(j);
      double dist2 = 0.0, dot = 0.0;
      for (int k = 0; k < d; ++k) {
        const double diff = xi[k] - yj[k];
        dist2 += diff * diff;
        dot += xi[k] * yj[k];
      }
      cm.w0(i, j) = dist2;
      cm.w(i, j) = dot;
    }
  }
  return cm;
}

ErrorReport error_report(const Permutation& estimate, const Permutation& truth, int n) {
  if (estimate.size() != n || truth.size() != n)
    throw std::invalid_argument("error_report: permutation size mismatch");
  ErrorReport rep;
  for (int i = 0; i < n; ++i)
    if (estimate(i) != truth(i)) rep.error_indices.insert(i);
  rep.error_count = static_cast<int>(rep.error_indices.size());
  rep.poly_rate = rep.error_count <= 1
                      ? 0.0
                      : std::log(static_cast<double>(rep.error_count)) /
                            std::log(static_cast<double>(n));
  return rep;
}

std::string instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["format"] = "gpm-instance-v1";
  j["n"] = inst.n;
  j["d"] = inst.d;
  j["sigma2"] = inst.sigma2;
  j["seed"] = inst.seed;
  j["planted"] = inst.planted_random ? "random" : "identity";
  return j.dump(2);
}

Instance instance_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (j.value("format", "") != "gpm-instance-v1")
    throw std::runtime_error("instance_from_json: unknown format");
  const std::string planted = j.value("planted", "identity");
  if (planted != "identity" && planted != "random")
    throw std::runtime_error("instance_from_json: bad planted mode");
  return generate_instance(j.at("n").get<int>(), j.at("d").get<int>(),
                           j.at("sigma2").get<double>(),
                           j.at("seed").get<std::uint64_t>(), planted == "random");
}

void write_matrix_binary(const Matrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(m.rows() * m.cols() * sizeof(double)));
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace gpm
