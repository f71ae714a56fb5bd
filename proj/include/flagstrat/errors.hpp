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

#ifndef FLAGSTRAT_ERRORS_HPP_
#define FLAGSTRAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace flagstrat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input relation closes into a cycle, so no partial order exists.
struct CycleError : Error {
  using Error::Error;
};
// Partial order exists but the identity labeling is not a linear extension
// (some i <_P j with i > j as integers).
struct NotLinearlyExtendedError : Error {
  using Error::Error;
};
// Two posets combined with different ground sets.
struct SizeMismatchError : Error {
  using Error::Error;
};
// Modulus is not prime.
struct NotPrimeError : Error {
  using Error::Error;
};
// Matrix shapes or moduli incompatible with the requested operation.
struct ShapeError : Error {
  using Error::Error;
};
struct SingularError : Error {
  using Error::Error;
};
// Element does not belong to the group or set the operation requires.
struct MembershipError : Error {
  using Error::Error;
};
// Ideals passed to the Moebius function are not nested.
struct NotComparableError : Error {
  using Error::Error;
};
// Complement requested for P not refined by Q.
struct NotSubposetError : Error {
  using Error::Error;
};
// Complement poset absent where an operation requires it.
struct NotComplementedError : Error {
  using Error::Error;
};
struct NotStrictSpernerError : Error {
  using Error::Error;
};
struct NotFlagMatroidError : Error {
  using Error::Error;
};
struct EmptyInputError : Error {
  using Error::Error;
};
struct ZeroVectorError : Error {
  using Error::Error;
};
struct OutOfRangeError : Error {
  using Error::Error;
};
struct InvalidFlagError : Error {
  using Error::Error;
};
// Malformed flag input: wrong ambient dimension, wrong modulus, or wrong
// tuple length. A well-formed tuple that merely fails to be a flag is a
// `false` result, not an error.
struct DimensionMismatchError : Error {
  using Error::Error;
};
// Subset of the ground set is not downward closed where an ideal is required.
struct NotAnIdealError : Error {
  using Error::Error;
};
// Estimated work exceeds the configured budget.
struct BudgetExceededError : Error {
  using Error::Error;
};
// Index or value outside the documented domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Soft cap on scalar operations for enumerative calls. Estimates are coarse
// (counted in field operations); the point is to refuse jobs that are orders
// of magnitude too big, not to meter precisely.
struct Budget {
  long long scalar_ops = 100'000'000;
};

inline void check_budget(long long estimate, const Budget& budget,
                         const std::string& what) {
  if (estimate > budget.scalar_ops)
    throw BudgetExceededError(what + ": estimated " +
                              std::to_string(estimate) +
                              " scalar ops exceeds budget " +
                              std::to_string(budget.scalar_ops));
}

}  // namespace flagstrat

#endif  // FLAGSTRAT_ERRORS_HPP_
