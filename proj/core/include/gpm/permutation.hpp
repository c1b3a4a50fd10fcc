#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gpm/rng.hpp"

namespace gpm {

// Bijection on {0..n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    Permutation p;
    p.image_ = std::move(img);
    return p;
  }

  // Fisher-Yates from the given stream; uniform on S_n.
  static Permutation random(int n, Rng& rng) {
    Permutation p = identity(n);
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(p.image_[i], p.image_[j]);
    }
    return p;
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    Permutation p;
    p.image_ = std::move(inv);
    return p;
  }

  // (p.then(q))(i) = q(p(i)): apply this first, then q.
  Permutation then(const Permutation& q) const {
    if (q.size() != size()) throw std::invalid_argument("size mismatch in composition");
    std::vector<int> img(image_.size());
    for (int i = 0; i < size(); ++i) img[i] = q.image_[image_[i]];
    Permutation p;
    p.image_ = std::move(img);
    return p;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  int fixed_point_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i) c += (image_[i] == i);
    return c;
  }

  // Cycle decomposition; partitions {0..n-1}, each cycle listed from its
  // smallest element following the permutation's action.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cyc.push_back(j);
        j = image_[j];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::vector<std::vector<int>> nontrivial_cycles() const {
    auto all = cycles();
    std::vector<std::vector<int>> out;
    for (auto& c : all)
      if (c.size() >= 2) out.push_back(std::move(c));
    return out;
  }

  bool operator==(const Permutation& other) const { return image_ == other.image_; }
  bool operator!=(const Permutation& other) const { return !(*this == other); }

 private:
  void validate() const {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
  }

  std::vector<int> image_;
};

}  // namespace gpm
