// tests/test_numtheory.cpp

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

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ccpt/numtheory.hpp"
#include "test_util.hpp"

using ccpt::CcpsId;
using ccpt::InvalidId;

TEST_CASE("gcd matches hand values and is symmetric") {
  CHECK(ccpt::gcd(5, 2) == 1);
  CHECK(ccpt::gcd(6, 4) == 2);
  CHECK(ccpt::gcd(1, 1) == 1);
  CHECK(ccpt::gcd(12, 12) == 12);
  for (long long a = 1; a <= 40; ++a) {
    for (long long b = 1; b <= 40; ++b) {
      CHECK(ccpt::gcd(a, b) == ccpt::gcd(b, a));
    }
  }
  CHECK_THROWS_AS(ccpt::gcd(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ccpt::gcd(3, -1), std::invalid_argument);
}

TEST_CASE("reflection of a residue preserves the gcd") {
  for (long long q = 2; q <= 128; ++q) {
    for (long long k = 1; k < q; ++k) {
      CHECK(ccpt::gcd(k, q) == ccpt::gcd(q - k, q));
    }
  }
}

TEST_CASE("totient agrees with the counting definition") {
  CHECK(ccpt::totient(1) == 1);
  CHECK(ccpt::totient(2) == 1);
  CHECK(ccpt::totient(5) == 4);
  CHECK(ccpt::totient(6) == 2);
  for (long long n = 1; n <= 256; ++n) {
    CHECK(ccpt::totient(n) == testutil::totient_bruteforce(n));
  }
  CHECK_THROWS_AS(ccpt::totient(0), std::invalid_argument);
}

TEST_CASE("totient is even beyond n = 2") {
  for (long long n = 3; n <= 256; ++n) {
    CHECK(ccpt::totient(n) % 2 == 0);
  }
}

TEST_CASE("divisors are ascending, bounded by n, and complete") {
  CHECK(ccpt::divisors(1) == std::vector<long long>{1});
  CHECK(ccpt::divisors(6) == std::vector<long long>{1, 2, 3, 6});
  CHECK(ccpt::divisors(32) == std::vector<long long>{1, 2, 4, 8, 16, 32});
  for (long long n = 1; n <= 200; ++n) {
    const auto divs = ccpt::divisors(n);
    REQUIRE(!divs.empty());
    CHECK(divs.front() == 1);
    CHECK(divs.back() == n);
    for (std::size_t i = 0; i < divs.size(); ++i) {
      CHECK(n % divs[i] == 0);
      if (i > 0) CHECK(divs[i - 1] < divs[i]);
    }
    // every divisor is listed
    long long count = 0;
    for (long long d = 1; d <= n; ++d) {
      if (n % d == 0) ++count;
    }
    CHECK(static_cast<long long>(divs.size()) == count);
  }
}

TEST_CASE("totients of the divisors of n sum to n") {
  for (long long n = 1; n <= 256; ++n) {
    long long sum = 0;
    for (long long d : ccpt::divisors(n)) sum += ccpt::totient(d);
    CHECK(sum == n);
  }
}

TEST_CASE("half_residues keeps one residue per conjugate pair") {
  CHECK(ccpt::half_residues(1) == std::vector<int>{1});
  CHECK(ccpt::half_residues(2) == std::vector<int>{1});
  CHECK(ccpt::half_residues(5) == std::vector<int>{1, 2});
  CHECK(ccpt::half_residues(6) == std::vector<int>{1});
  CHECK(ccpt::half_residues(12) == std::vector<int>{1, 5});
  for (int q = 3; q <= 256; ++q) {
    const auto hr = ccpt::half_residues(q);
    CHECK(2 * static_cast<long long>(hr.size()) == ccpt::totient(q));
    for (std::size_t i = 0; i < hr.size(); ++i) {
      CHECK(hr[i] >= 1);
      CHECK(hr[i] <= q / 2);
      CHECK(ccpt::gcd(hr[i], q) == 1);
      if (i > 0) CHECK(hr[i - 1] < hr[i]);
    }
  }
  CHECK_THROWS_AS(ccpt::half_residues(0), std::invalid_argument);
}

TEST_CASE("ids accept exactly the half residues") {
  CHECK_NOTHROW(CcpsId(1, 1));
  CHECK_NOTHROW(CcpsId(2, 1));
  CHECK_NOTHROW(CcpsId(5, 2));
  CHECK_NOTHROW(CcpsId(12, 5));

  CHECK_THROWS_AS(CcpsId(0, 1), InvalidId);
  CHECK_THROWS_AS(CcpsId(-4, 1), InvalidId);
  CHECK_THROWS_AS(CcpsId(1, 2), InvalidId);
  CHECK_THROWS_AS(CcpsId(2, 2), InvalidId);
  CHECK_THROWS_AS(CcpsId(5, 0), InvalidId);
  CHECK_THROWS_AS(CcpsId(5, 3), InvalidId);   // above q/2
  CHECK_THROWS_AS(CcpsId(9, 3), InvalidId);   // shares a factor with q
  CHECK_THROWS_AS(CcpsId(6, 5), InvalidId);   // conjugate of 1, above q/2

  // exhaustively: the constructor accepts k iff k is a listed half residue
  for (int q = 1; q <= 64; ++q) {
    const auto hr = ccpt::half_residues(q);
    for (int k = 0; k <= q + 1; ++k) {
      const bool listed =
          std::find(hr.begin(), hr.end(), k) != hr.end();
      if (listed) {
        CHECK_NOTHROW(CcpsId(q, k));
      } else {
        CHECK_THROWS_AS(CcpsId(q, k), InvalidId);
      }
    }
  }
}

TEST_CASE("ids order by period then frequency") {
  CHECK(CcpsId(3, 1) < CcpsId(5, 1));
  CHECK(CcpsId(5, 1) < CcpsId(5, 2));
  CHECK(CcpsId(5, 2) == CcpsId(5, 2));
}
