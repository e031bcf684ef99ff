// tests/test_sequences.cpp

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

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ccpt/sequence.hpp"
#include "test_util.hpp"

using ccpt::CcpsId;
using ccpt::Sequence;

TEST_CASE("amplitude is halved only for the degenerate periods") {
  CHECK(ccpt::amplitude(1) == 0.5);
  CHECK(ccpt::amplitude(2) == 0.5);
  CHECK(ccpt::amplitude(3) == 1.0);
  CHECK(ccpt::amplitude(64) == 1.0);
  CHECK_THROWS_AS(ccpt::amplitude(0), std::invalid_argument);
}

TEST_CASE("conjugate-pair sums match frozen samples") {
  const Sequence c11 = ccpt::ccps(CcpsId(1, 1));
  REQUIRE(c11.size() == 1);
  CHECK(c11[0].real() == 1.0);

  const Sequence c21 = ccpt::ccps(CcpsId(2, 1));
  REQUIRE(c21.size() == 2);
  CHECK(c21[0].real() == 1.0);
  CHECK(c21[1].real() == -1.0);

  // quarter-period angles come out exact
  const Sequence c41 = ccpt::ccps(CcpsId(4, 1));
  REQUIRE(c41.size() == 4);
  CHECK(c41[0].real() == 2.0);
  CHECK(c41[1].real() == 0.0);
  CHECK(c41[2].real() == -2.0);
  CHECK(c41[3].real() == 0.0);

  const Sequence c51 = ccpt::ccps(CcpsId(5, 1));
  REQUIRE(c51.size() == 5);
  const double golden51[5] = {2.0, 0.6180339887498949, -1.618033988749895,
                              -1.618033988749895, 0.6180339887498949};
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(std::abs(c51[n].real() - golden51[n]) < 1e-12);
  }

  const Sequence c52 = ccpt::ccps(CcpsId(5, 2));
  const double golden52[5] = {2.0, -1.618033988749895, 0.6180339887498949,
                              0.6180339887498949, -1.618033988749895};
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(std::abs(c52[n].real() - golden52[n]) < 1e-12);
  }
}

TEST_CASE("conjugate-pair sums are exactly real and exactly even") {
  for (int q = 1; q <= 64; ++q) {
    for (int k : ccpt::half_residues(q)) {
      const Sequence c = ccpt::ccps(CcpsId(q, k));
      REQUIRE(c.size() == static_cast<std::size_t>(q));
      CHECK(c.is_real());
      for (int n = 1; n < q; ++n) {
        // bit-for-bit, not approximately: both samples fold to one angle
        CHECK(c[static_cast<std::size_t>(n)].real() ==
              c[static_cast<std::size_t>(q - n)].real());
      }
    }
  }
}

TEST_CASE("one period of a nondegenerate sum adds to zero") {
  for (int q = 2; q <= 64; ++q) {
    for (int k : ccpt::half_residues(q)) {
      const Sequence c = ccpt::ccps(CcpsId(q, k));
      double sum = 0.0;
      for (const auto& v : c) sum += v.real();
      CHECK(std::abs(sum) < 1e-12);
    }
  }
}

TEST_CASE("peak value sits at n = 0 and equals twice the amplitude") {
  for (int q = 1; q <= 40; ++q) {
    for (int k : ccpt::half_residues(q)) {
      const Sequence c = ccpt::ccps(CcpsId(q, k));
      CHECK(c[0].real() == 2.0 * ccpt::amplitude(q));
      for (std::size_t n = 1; n < c.size(); ++n) {
        CHECK(c[n].real() <= c[0].real() + 1e-15);
      }
    }
  }
}

TEST_CASE("exponential pair members are exact conjugates that sum to the "
          "cosine sequence") {
  const auto [s41, s43] = ccpt::exp_pair(CcpsId(4, 1));
  REQUIRE(s41.size() == 4);
  CHECK(s41[0] == ccpt::Complex(1.0, 0.0));
  CHECK(s41[1] == ccpt::Complex(0.0, 1.0));
  CHECK(s41[2] == ccpt::Complex(-1.0, 0.0));
  CHECK(s41[3] == ccpt::Complex(0.0, -1.0));
  CHECK(s43[1] == ccpt::Complex(0.0, -1.0));
  CHECK(s43[3] == ccpt::Complex(0.0, 1.0));

  for (int q = 3; q <= 48; ++q) {
    for (int k : ccpt::half_residues(q)) {
      const CcpsId id(q, k);
      const auto [a, b] = ccpt::exp_pair(id);
      const Sequence c = ccpt::ccps(id);
      for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(b[n] == std::conj(a[n]));
        CHECK((a[n] + b[n]).real() == c[n].real());
        CHECK((a[n] + b[n]).imag() == 0.0);
        CHECK(std::abs(std::abs(a[n]) - 1.0) < 1e-15);
      }
    }
  }

  // degenerate periods: the pair collapses to a single real exponential
  for (int q = 1; q <= 2; ++q) {
    const auto [a, b] = ccpt::exp_pair(CcpsId(q, 1));
    const Sequence c = ccpt::ccps(CcpsId(q, 1));
    for (std::size_t n = 0; n < a.size(); ++n) {
      CHECK(a[n] == b[n]);
      CHECK(a[n].imag() == 0.0);
      CHECK(c[n].real() == 2.0 * ccpt::amplitude(q) * a[n].real());
    }
  }
}

TEST_CASE("ramanujan sums match the full exponential sum") {
  for (int q = 1; q <= 64; ++q) {
    const Sequence rs = ccpt::ramanujan_sum(q);
    const auto oracle = testutil::ramanujan_exponential_sum(q);
    REQUIRE(rs.size() == static_cast<std::size_t>(q));
    for (std::size_t n = 0; n < rs.size(); ++n) {
      CHECK(std::abs(oracle[n].imag()) < 1e-9);
      CHECK(std::abs(rs[n].real() - oracle[n].real()) < 1e-9);
      // samples are exact integers after snapping
      CHECK(rs[n].real() == std::round(rs[n].real()));
      CHECK(rs[n].imag() == 0.0);
    }
    CHECK(rs[0].real() == static_cast<double>(ccpt::totient(q)));
  }
}

TEST_CASE("ramanujan sums match frozen periods") {
  CHECK(ccpt::ramanujan_sum(1).real_part() == std::vector<double>{1});
  CHECK(ccpt::ramanujan_sum(2).real_part() == std::vector<double>{1, -1});
  CHECK(ccpt::ramanujan_sum(5).real_part() ==
        std::vector<double>{4, -1, -1, -1, -1});
  CHECK(ccpt::ramanujan_sum(6).real_part() ==
        std::vector<double>{2, 1, -1, -2, -1, 1});
  CHECK_THROWS_AS(ccpt::ramanujan_sum(0), std::invalid_argument);
}

TEST_CASE("circular shift is a pure permutation") {
  const Sequence x(std::vector<double>{10, 20, 30, 40});
  CHECK(ccpt::circular_shift(x, 1).real_part() ==
        std::vector<double>{40, 10, 20, 30});
  CHECK(ccpt::circular_shift(x, -1).real_part() ==
        std::vector<double>{20, 30, 40, 10});
  CHECK(ccpt::circular_shift(x, 4).real_part() == x.real_part());
  CHECK(ccpt::circular_shift(x, 9).real_part() ==
        ccpt::circular_shift(x, 1).real_part());

  // composition: shifting twice equals shifting by the sum, bitwise
  const Sequence r = testutil::random_real_sequence(11, 7001);
  for (long long a = -5; a <= 5; ++a) {
    for (long long b = -5; b <= 5; ++b) {
      const Sequence lhs =
          ccpt::circular_shift(ccpt::circular_shift(r, a), b);
      const Sequence rhs = ccpt::circular_shift(r, a + b);
      for (std::size_t i = 0; i < r.size(); ++i) CHECK(lhs[i] == rhs[i]);
    }
  }
}

TEST_CASE("periodic extension concatenates whole copies") {
  const Sequence x(std::vector<double>{1, 2});
  const Sequence e = ccpt::periodic_extend(x, 3);
  CHECK(e.real_part() == std::vector<double>{1, 2, 1, 2, 1, 2});
  CHECK(ccpt::periodic_extend(x, 1).real_part() == x.real_part());
  CHECK_THROWS_AS(ccpt::periodic_extend(x, 0), std::invalid_argument);
}

TEST_CASE("distinct subspaces are orthogonal; equal ids reproduce the "
          "cosine inner product") {
  for (int q1 = 1; q1 <= 12; ++q1) {
    for (int k1 : ccpt::half_residues(q1)) {
      for (int q2 = 1; q2 <= 12; ++q2) {
        for (int k2 : ccpt::half_residues(q2)) {
          const long long n = std::lcm<long long>(q1, q2);
          const Sequence c1 = ccpt::ccps(CcpsId(q1, k1));
          const Sequence c2 = ccpt::ccps(CcpsId(q2, k2));
          const long long shifts1[] = {0, 1 % q1, 3 % q1};
          const long long shifts2[] = {0, 2 % q2, (q2 - 1) % q2};
          for (const long long l1 : shifts1) {
            for (const long long l2 : shifts2) {
              const Sequence e1 = ccpt::periodic_extend(
                  ccpt::circular_shift(c1, l1),
                  static_cast<std::size_t>(n / q1));
              const Sequence e2 = ccpt::periodic_extend(
                  ccpt::circular_shift(c2, l2),
                  static_cast<std::size_t>(n / q2));
              double dot = 0.0;
              for (std::size_t i = 0; i < e1.size(); ++i) {
                dot += e1[i].real() * e2[i].real();
              }
              double expected = 0.0;
              if (q1 == q2 && k1 == k2) {
                expected = 2.0 * static_cast<double>(n) *
                           ccpt::amplitude(q1) *
                           std::cos(2.0 * std::numbers::pi * k1 *
                                    static_cast<double>(l1 - l2) / q1);
              }
              CHECK(std::abs(dot - expected) <
                    1e-10 * static_cast<double>(n));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("signal text round-trips at 12 significant digits") {
  const std::vector<double> values = {0.0,
                                      1.0,
                                      -1.0,
                                      0.6180339887498949,
                                      -1.618033988749895,
                                      3.141592653589793e8,
                                      -2.2250738585072014e-8,
                                      123456.789012};
  const Sequence x{values};
  std::ostringstream os;
  ccpt::write_signal_text(os, x);
  std::istringstream is(os.str());
  const Sequence back = ccpt::read_signal_text(is);
  REQUIRE(back.size() == x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double scale = std::max(1.0, std::abs(values[i]));
    CHECK(std::abs(back[i].real() - values[i]) <= 1e-11 * scale);
    CHECK(back[i].imag() == 0.0);
  }
}

TEST_CASE("complex signals serialize as two columns") {
  const Sequence x(std::vector<ccpt::Complex>{{1.5, -2.5}, {0.0, 3.0}});
  std::ostringstream os;
  ccpt::write_signal_text(os, x);
  CHECK(os.str() == "1.5 -2.5\n0 3\n");
  std::istringstream is(os.str());
  const Sequence back = ccpt::read_signal_text(is);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == ccpt::Complex(1.5, -2.5));
  CHECK(back[1] == ccpt::Complex(0.0, 3.0));
}

TEST_CASE("reader skips comments and rejects junk") {
  {
    std::istringstream is("# header\n\n1.5\n2.5 # trailing note\n");
    const Sequence x = ccpt::read_signal_text(is);
    REQUIRE(x.size() == 2);
    CHECK(x[0].real() == 1.5);
    CHECK(x[1].real() == 2.5);
  }
  {
    std::istringstream is("1.5\nnot-a-number\n");
    CHECK_THROWS_AS(ccpt::read_signal_text(is), ccpt::IoError);
  }
  {
    std::istringstream is("1 2 3\n");
    CHECK_THROWS_AS(ccpt::read_signal_text(is), ccpt::IoError);
  }
  {
    std::istringstream is("# only a comment\n");
    CHECK_THROWS_AS(ccpt::read_signal_text(is), ccpt::IoError);
  }
}

TEST_CASE("negative zero serializes as plain zero") {
  CHECK(ccpt::format_value(-0.0) == "0");
  CHECK(ccpt::format_value(0.0) == "0");
  CHECK(ccpt::format_value(-0.5) == "-0.5");
}
