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

#ifndef FLAGSTRAT_BITSET_HPP_
#define FLAGSTRAT_BITSET_HPP_

#include <cstdint>
#include <vector>

namespace flagstrat {

// Fixed-size bitset whose size is chosen at runtime. Ground sets here are
// poset elements, so sizes range from a handful of bits up to a few hundred
// (tuple posets over [4]^P reach 256 elements).
class DynBitset {
 public:
  DynBitset() : n_(0) {}
  explicit DynBitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator|=(const DynBitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // Set difference: keeps bits of *this not in o.
  DynBitset& operator-=(const DynBitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a -= b; }

  bool operator==(const DynBitset& o) const {
    return n_ == o.n_ && w_ == o.w_;
  }
  bool operator!=(const DynBitset& o) const { return !(*this == o); }

  // Total order used only to make containers and output deterministic.
  bool operator<(const DynBitset& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  bool is_subset_of(const DynBitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h ^ static_cast<size_t>(n_);
  }

  static DynBitset full(int n) {
    DynBitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }
  static DynBitset of(int n, std::initializer_list<int> elems) {
    DynBitset b(n);
    for (int e : elems) b.set(e);
    return b;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

struct DynBitsetHash {
  size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace flagstrat

#endif  // FLAGSTRAT_BITSET_HPP_
