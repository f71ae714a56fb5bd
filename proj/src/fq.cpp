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

#include "flagstrat/fq.hpp"

#include <cmath>

namespace flagstrat {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int fq_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw SingularError("inverse of zero mod " + std::to_string(p));
  // Extended Euclid.
  int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.p() != b.p()) throw ShapeError("matrix product over different moduli");
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  FqMatrix c(a.rows(), b.cols(), a.p());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = static_cast<int>((c.at(i, j) + static_cast<long long>(aik) * b.at(k, j)) % a.p());
    }
  return c;
}

int rref(FqMatrix& m, std::vector<int>* pivot_cols) {
  const int p = m.p();
  int r = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const int inv = fq_inv(m.at(r, c), p);
    for (int j = 0; j < m.cols(); ++j)
      m.at(r, j) = static_cast<int>(static_cast<long long>(m.at(r, j)) * inv % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const int f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = static_cast<int>(((m.at(i, j) - static_cast<long long>(f) * m.at(r, j)) % p + p) % p);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

int rank(const FqMatrix& m) {
  FqMatrix copy = m;
  return rref(copy);
}

int determinant(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  const int p = m.p();
  FqMatrix a = m;
  long long det = 1;
  for (int c = 0; c < a.cols(); ++c) {
    int pivot = -1;
    for (int i = c; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(c, j));
      det = (p - det % p) % p;
    }
    det = det * a.at(c, c) % p;
    const int inv = fq_inv(a.at(c, c), p);
    for (int i = c + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      const long long f = static_cast<long long>(a.at(i, c)) * inv % p;
      for (int j = c; j < a.cols(); ++j)
        a.at(i, j) = static_cast<int>(((a.at(i, j) - f * a.at(c, j)) % p + p) % p);
    }
  }
  return static_cast<int>(det % p);
}

bool is_invertible(const FqMatrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

FqMatrix inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  const int n = m.rows();
  FqMatrix aug(n, 2 * n, m.p());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  // The identity block keeps the rank at n, so singularity shows up as a
  // pivot escaping into the right half.
  std::vector<int> pivots;
  rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() >= n)
    throw SingularError("matrix is not invertible");
  FqMatrix inv(n, n, m.p());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<int> apply(const FqMatrix& m, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw ShapeError("matrix-vector shape mismatch");
  std::vector<int> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    long long acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += static_cast<long long>(m.at(i, j)) * v[j];
    out[i] = static_cast<int>(acc % m.p());
  }
  return out;
}

long long q_int(int n, long long q) {
  long long v = 0, pw = 1;
  for (int i = 0; i < n; ++i) {
    v += pw;
    pw *= q;
  }
  return v;
}

long long q_factorial(int n, long long q) {
  long long v = 1;
  for (int i = 1; i <= n; ++i) v *= q_int(i, q);
  return v;
}

long long gaussian_binomial(int n, int k, long long q) {
  if (k < 0 || k > n) return 0;
  // Product form (q^n - q^i) / (q^k - q^i); compute as exact integer via
  // the recurrence on q-binomials to avoid intermediate division issues.
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.
  std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(k + 1, 0));
  for (int i = 0; i <= n; ++i) t[i][0] = 1;
  for (int i = 1; i <= n; ++i) {
    long long qk = 1;
    for (int j = 1; j <= k && j <= i; ++j) {
      qk *= q;
      t[i][j] = t[i - 1][j - 1] + qk * t[i - 1][j];
    }
  }
  return t[n][k];
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

long long gl_order(int n, long long p) {
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  long long v = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    v *= (pn - pi);
    pi *= p;
  }
  return v;
}

void for_each_gl(int n, int p, const Budget& budget,
                 const std::function<void(const FqMatrix&)>& fn) {
  require_prime(p);
  long long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= p;
    if (total > (1LL << 40)) break;
  }
  check_budget(total * n * n * n, budget, "enumerate_gl(" + std::to_string(n) + "," + std::to_string(p) + ")");
  std::vector<int> entries(n * n, 0);
  while (true) {
    FqMatrix m(n, n, p, entries);
    if (is_invertible(m)) fn(m);
    int i = 0;
    while (i < n * n && entries[i] == p - 1) entries[i++] = 0;
    if (i == n * n) break;
    ++entries[i];
  }
}

std::vector<FqMatrix> enumerate_gl(int n, int p, const Budget& budget) {
  std::vector<FqMatrix> out;
  for_each_gl(n, p, budget, [&](const FqMatrix& m) { out.push_back(m); });
  return out;
}

}  // namespace flagstrat
