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

#ifndef FLAGSTRAT_FQ_HPP_
#define FLAGSTRAT_FQ_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flagstrat/errors.hpp"

namespace flagstrat {

bool is_prime(long long p);
inline void require_prime(long long p) {
  if (!is_prime(p)) throw NotPrimeError("modulus " + std::to_string(p) + " is not prime");
}

inline int fq_neg(int a, int p) { return a == 0 ? 0 : p - a; }
int fq_inv(int a, int p);

// Dense matrix over F_p, entries reduced to [0, p). Row-major.
class FqMatrix {
 public:
  FqMatrix() : p_(2), rows_(0), cols_(0) {}
  FqMatrix(int rows, int cols, int p)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    require_prime(p);
  }
  FqMatrix(int rows, int cols, int p, std::vector<int> entries)
      : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
    require_prime(p);
    if (static_cast<int>(a_.size()) != rows * cols)
      throw ShapeError("entry count does not match shape");
    for (int& v : a_) v = ((v % p) + p) % p;
  }

  static FqMatrix identity(int n, int p) {
    FqMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& at(int r, int c) { return a_[r * cols_ + c]; }
  int at(int r, int c) const { return a_[r * cols_ + c]; }
  const std::vector<int>& data() const { return a_; }

  FqMatrix transposed() const {
    FqMatrix t(cols_, rows_, p_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  // Columns selected by `cols` (in the given order).
  FqMatrix select_columns(const std::vector<int>& cols) const {
    FqMatrix s(rows_, static_cast<int>(cols.size()), p_);
    for (int r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols.size(); ++c) s.at(r, static_cast<int>(c)) = at(r, cols[c]);
    return s;
  }

  // Square submatrix rows x cols for minors.
  FqMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    FqMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), p_);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c)
        s.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    return s;
  }

  bool operator==(const FqMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }
  bool operator<(const FqMatrix& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
  }

  size_t hash() const {
    size_t h = std::hash<int>()(p_) * 31 + rows_ * 7 + cols_;
    for (int v : a_) h = h * 1000003 + v;
    return h;
  }

 private:
  int p_;
  int rows_, cols_;
  std::vector<int> a_;
};

struct FqMatrixHash {
  size_t operator()(const FqMatrix& m) const { return m.hash(); }
};

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);

// In-place row reduction to reduced row echelon form; returns rank and,
// optionally, the pivot columns.
int rref(FqMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(const FqMatrix& m);
int determinant(const FqMatrix& m);
bool is_invertible(const FqMatrix& m);
// Throws SingularError on non-invertible input.
FqMatrix inverse(const FqMatrix& m);

// Matrix-vector product over F_p.
std::vector<int> apply(const FqMatrix& m, const std::vector<int>& v);

// q-analog helpers: [n]_q, [n]_q!, and the Gaussian binomial, all exact.
long long q_int(int n, long long q);
long long q_factorial(int n, long long q);
long long gaussian_binomial(int n, int k, long long q);
long long binomial(int n, int k);

// Order of GL(n, F_p): prod_{i} (p^n - p^i).
long long gl_order(int n, long long p);

// All invertible n x n matrices over F_p, by filtering all p^(n^2) matrices.
std::vector<FqMatrix> enumerate_gl(int n, int p, const Budget& budget = {});
void for_each_gl(int n, int p, const Budget& budget,
                 const std::function<void(const FqMatrix&)>& fn);

}  // namespace flagstrat

#endif  // FLAGSTRAT_FQ_HPP_
