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

#ifndef FLAGSTRAT_SUBSPACE_HPP_
#define FLAGSTRAT_SUBSPACE_HPP_

#include <cstdint>
#include <vector>

#include "flagstrat/fq.hpp"

namespace flagstrat {

// k-dimensional subspace of F_p^n in canonical form: the n x k basis matrix
// whose transpose is in reduced row echelon form. `pivot_rows` are the
// echelon pivot positions, strictly increasing.
class Subspace {
 public:
  Subspace() = default;

  // Canonicalizes the span of the columns of `columns` (n x m, any m with
  // the right span). Throws ZeroVectorError if the span is zero.
  static Subspace from_columns(const FqMatrix& columns);
  static Subspace coordinate_subspace(int n, int p, const std::vector<int>& coords);

  int n() const { return basis_.rows(); }
  int k() const { return basis_.cols(); }
  int p() const { return basis_.p(); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }

  bool contains(const std::vector<int>& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const { return basis_ < o.basis_; }
  size_t hash() const { return basis_.hash(); }

 private:
  FqMatrix basis_;
  std::vector<int> pivot_rows_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace act_on_subspace(const FqMatrix& a, const Subspace& w);
// Sum of subspaces (span of the union of bases).
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// All k-dimensional subspaces of F_p^n, generated directly in echelon form;
// count is the Gaussian binomial.
std::vector<Subspace> enumerate_subspaces(int k, int n, int p, const Budget& budget = {});

// Projective coordinates of the wedge of the basis: value at each k-subset
// of rows is the corresponding maximal minor, scaled so the first nonzero
// coordinate (in lexicographic subset order) is 1. `support` holds the
// subsets with nonzero coordinate, as bitmasks.
struct PluckerVector {
  int n = 0, k = 0, p = 2;
  std::vector<int> coords;        // indexed by lex rank of the k-subset
  std::vector<uint32_t> support;  // masks of nonzero coordinates, lex order

  bool operator==(const PluckerVector& o) const {
    return n == o.n && k == o.k && p == o.p && coords == o.coords;
  }
};

PluckerVector plucker(const Subspace& w);

// Lexicographically ordered k-subsets of {0..n-1} as bitmasks; "lex" refers
// to the increasing tuple of elements.
std::vector<uint32_t> all_ksubset_masks(int n, int k);
std::vector<int> mask_to_tuple(uint32_t mask);
uint32_t tuple_to_mask(const std::vector<int>& tuple);

// k-th compound matrix: entry (J, I) is the minor of A with rows J and
// columns I, both running over lex-ordered k-subsets.
FqMatrix exterior_power_matrix(const FqMatrix& a, int k);

}  // namespace flagstrat

#endif  // FLAGSTRAT_SUBSPACE_HPP_
