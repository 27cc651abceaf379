// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "cleave/errors.hpp"

namespace cleave {

/// Permutation of {1,...,k}, stored 0-based internally.
class Permutation {
 public:
  Permutation() = default;

  /// images[j] = sigma(j+1), 1-based values.
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<size_t>(v - 1)])
        throw BadLabelsError("not a permutation");
      seen[static_cast<size_t>(v - 1)] = 1;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> v(static_cast<size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int k, int a, int b) {
    Permutation p = identity(k);
    std::swap(p.img_[static_cast<size_t>(a - 1)], p.img_[static_cast<size_t>(b - 1)]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }

  /// sigma(j), 1-based.
  int operator()(int j) const { return img_[static_cast<size_t>(j - 1)]; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int j = 1; j <= size(); ++j) inv[static_cast<size_t>((*this)(j)-1)] = j;
    return Permutation(std::move(inv));
  }

  /// (this o other)(j) = this(other(j)).
  Permutation compose(const Permutation& other) const {
    std::vector<int> v(img_.size());
    for (int j = 1; j <= size(); ++j) v[static_cast<size_t>(j - 1)] = (*this)(other(j));
    return Permutation(std::move(v));
  }

  /// Order pattern of sigma over a sorted subset H of {1..size()}: the
  /// permutation of {1..|H|} ordering the symbols of H the way sigma does.
  Permutation restrict_pattern(const std::vector<int>& subset) const {
    std::vector<int> vals;
    vals.reserve(subset.size());
    for (int h : subset) vals.push_back((*this)(h));
    std::vector<int> order(vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[static_cast<size_t>(a)] < vals[static_cast<size_t>(b)]; });
    std::vector<int> pattern(vals.size());
    for (size_t rank = 0; rank < order.size(); ++rank)
      pattern[static_cast<size_t>(order[rank])] = static_cast<int>(rank) + 1;
    return Permutation(std::move(pattern));
  }

  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Operadic block substitution: the permutation of {1..k+m-1} acting as
/// sigma on the k slots of the outer operation (with slot i fattened to
/// the m-element block at positions i..i+m-1) and as tau within the block.
/// The sigma-equivariance law quantifies over exactly these permutations,
/// and restrict_pattern recovers sigma and tau from the result.
inline Permutation block_substitution(const Permutation& sigma, int i,
                                      const Permutation& tau) {
  int k = sigma.size(), m = tau.size();
  std::vector<int> img(static_cast<size_t>(k + m - 1));
  for (int l = 1; l <= k + m - 1; ++l) {
    int v;
    if (l < i)
      v = sigma(l) + (sigma(l) > sigma(i) ? m - 1 : 0);
    else if (l <= i + m - 1)
      v = sigma(i) + tau(l - i + 1) - 1;
    else
      v = sigma(l - m + 1) + (sigma(l - m + 1) > sigma(i) ? m - 1 : 0);
    img[static_cast<size_t>(l - 1)] = v;
  }
  return Permutation(std::move(img));
}

/// All permutations of {1..k} in lexicographic order of image vectors.
inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> v(static_cast<size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace cleave
