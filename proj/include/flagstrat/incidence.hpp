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

#ifndef FLAGSTRAT_INCIDENCE_HPP_
#define FLAGSTRAT_INCIDENCE_HPP_

#include <functional>
#include <vector>

#include "flagstrat/fq.hpp"
#include "flagstrat/poset.hpp"

namespace flagstrat {

// Matrices supported on the diagonal and the strict relations of P. With the
// identity a linear extension these are upper triangular, so a conforming
// matrix is invertible iff its diagonal is nonzero.
bool is_incidence_member(const Poset& p, const FqMatrix& a);
bool is_incidence_group_member(const Poset& p, const FqMatrix& a);
bool is_unipotent_member(const Poset& p, const FqMatrix& a);

long long incidence_group_order(const Poset& p, long long q);
long long unipotent_order(const Poset& p, long long q);

// Free-entry enumeration: diagonal over the nonzero scalars, one field entry
// per strict relation.
std::vector<FqMatrix> enumerate_incidence_group(const Poset& poset, int p,
                                                const Budget& budget = {});
std::vector<FqMatrix> enumerate_unipotent(const Poset& poset, int p,
                                          const Budget& budget = {});
void for_each_incidence_group(const Poset& poset, int p, const Budget& budget,
                              const std::function<void(const FqMatrix&)>& fn);

// Anti-isomorphism onto the dual poset's group: A -> W A^T W with W the
// reversal permutation matrix. Throws MembershipError.
FqMatrix dual_conjugation(const Poset& poset, const FqMatrix& a);

// Checks the quotient structure of a complemented pair P <= Q:
// |I*(Q)|/|I*(P)| = |U(P^c(Q))| and the unipotent complement meets every
// coset exactly once (via an explicit coset canonicalizer).
struct QuotientCheckReport {
  long long group_order_q = 0;
  long long group_order_p = 0;
  long long quotient_size = 0;
  long long unipotent_order = 0;
  bool counts_match = false;
  bool bijection_verified = false;
  bool ok() const { return counts_match && bijection_verified; }
};

QuotientCheckReport complemented_quotient_check(const Poset& p, const Poset& q,
                                                int prime,
                                                const Budget& budget = {});

// Canonical representative of the coset A * I*(P;F) inside I*(Q;F), for a
// complemented pair: the unique member of the coset lying in U(P^c(Q)).
FqMatrix coset_canonical_form(const Poset& p, const Poset& q, const FqMatrix& a);

}  // namespace flagstrat

#endif  // FLAGSTRAT_INCIDENCE_HPP_
