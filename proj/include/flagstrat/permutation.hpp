// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLAGSTRAT_PERMUTATION_HPP_
#define FLAGSTRAT_PERMUTATION_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

#include "flagstrat/errors.hpp"

namespace flagstrat {

// Permutation of {0, ..., n-1} in one-line notation: img[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw DomainError("not a permutation in one-line notation");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  // Longest element: i -> n-1-i.
  static Permutation longest(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
    return Permutation(std::move(img));
  }

  // One-based digits, e.g. {4,3,1,7,6,2,5}; convenient for transcribing
  // worked examples.
  static Permutation from_one_based(const std::vector<int>& digits) {
    std::vector<int> img(digits.size());
    for (size_t i = 0; i < digits.size(); ++i) img[i] = digits[i] - 1;
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw SizeMismatchError("composing permutations of different sizes");
    std::vector<int> img(a.n());
    for (int i = 0; i < a.n(); ++i) img[i] = a(b(i));
    return Permutation(std::move(img));
  }

  int inversions() const {
    int c = 0;
    for (size_t i = 0; i < img_.size(); ++i)
      for (size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int n) {
  if (n < 0 || n > 8) throw DomainError("all_permutations limited to n <= 8");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace flagstrat

#endif  // FLAGSTRAT_PERMUTATION_HPP_
