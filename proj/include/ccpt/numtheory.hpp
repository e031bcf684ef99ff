// ccpt/numtheory.hpp

// Copyright 2026  The ccpt authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CCPT_NUMTHEORY_HPP_
#define CCPT_NUMTHEORY_HPP_

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccpt/errors.hpp"

namespace ccpt {

/// Greatest common divisor of two positive integers.
inline long long gcd(long long a, long long b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("gcd: arguments must be positive");
  return std::gcd(a, b);
}

/// Euler totient: the number of integers in 1..n coprime to n.
inline long long totient(long long n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

/// All positive divisors of n in ascending order.
inline std::vector<long long> divisors(long long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long long> small;
  std::vector<long long> large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Residues a in 1..floor(q/2) with gcd(a, q) = 1, ascending.  One residue is
// kept from each conjugate pair {a, q - a}, so for q >= 3 the count is
// totient(q) / 2.  For q = 1 the enumeration would be empty; the degenerate
// subspaces for q in {1, 2} are indexed by k = 1, so [1] is returned there.
inline std::vector<int> half_residues(int q) {
  if (q < 1) throw std::invalid_argument("half_residues: q must be positive");
  if (q == 1) return {1};
  std::vector<int> out;
  for (int a = 1; a <= q / 2; ++a) {
    if (std::gcd(a, q) == 1) out.push_back(a);
  }
  return out;
}

inline bool is_valid_ccps_id(int q, int k) {
  if (q < 1 || k < 1) return false;
  if (q <= 2) return k == 1;
  return k <= q / 2 && std::gcd(k, q) == 1;
}

/// Identifies one conjugate-pair subspace: period q >= 1 and frequency index
/// k, where k = 1 for q in {1, 2} and k is a half residue of q otherwise.
class CcpsId {
 public:
  CcpsId() : q_(1), k_(1) {}
  CcpsId(int q, int k) : q_(q), k_(k) {
    if (!is_valid_ccps_id(q, k)) {
      throw InvalidId("invalid id (q=" + std::to_string(q) +
                      ", k=" + std::to_string(k) + ")");
    }
  }

  int q() const noexcept { return q_; }
  int k() const noexcept { return k_; }

  friend auto operator<=>(const CcpsId&, const CcpsId&) = default;

 private:
  int q_;
  int k_;
};

}  // namespace ccpt

#endif  // CCPT_NUMTHEORY_HPP_
