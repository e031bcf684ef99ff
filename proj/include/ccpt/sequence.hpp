// ccpt/sequence.hpp

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

#ifndef CCPT_SEQUENCE_HPP_
#define CCPT_SEQUENCE_HPP_

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccpt/errors.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

using Complex = std::complex<double>;

namespace detail {

// cos(2*pi*r/den) with the angle reduced to [0, den/2] before any floating
// point work: the residue is folded through the cosine's even symmetry, so
// c(r) and c(den - r) are evaluated from identical bits.  Quarter-period
// multiples return exact 0 / +-1.
inline double cos_2pi(long long r, long long den) {
  r %= den;
  if (r < 0) r += den;
  const long long folded = r <= den - r ? r : den - r;
  if (folded == 0) return 1.0;
  if (2 * folded == den) return -1.0;
  if (4 * folded == den) return 0.0;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(folded) /
                  static_cast<double>(den));
}

// exp(j*2*pi*r/den).  The real part reuses cos_2pi; the imaginary part is
// evaluated at the folded residue with an explicit sign so that conjugate
// residues r and den - r produce exact conjugates.
inline Complex exp_2pi(long long r, long long den) {
  r %= den;
  if (r < 0) r += den;
  const double re = cos_2pi(r, den);
  const long long folded = r <= den - r ? r : den - r;
  const double sign = r == folded ? 1.0 : -1.0;
  double im;
  if (folded == 0 || 2 * folded == den) {
    im = 0.0;
  } else if (4 * folded == den) {
    im = sign;
  } else {
    im = sign * std::sin(2.0 * std::numbers::pi * static_cast<double>(folded) /
                         static_cast<double>(den));
  }
  return {re, im};
}

}  // namespace detail

/// Peak scaling of the pair sum: 1/2 for q in {1, 2} (the two real
/// exponentials, where the pair degenerates to a single sequence), 1 otherwise.
inline double amplitude(int q) {
  if (q < 1) throw std::invalid_argument("amplitude: q must be positive");
  return q <= 2 ? 0.5 : 1.0;
}

/// One period of a discrete-time signal.  Storage is complex throughout; the
/// named generators emit exact zero imaginary parts, and is_real() checks
/// exactness rather than closeness.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::size_t n) : values_(n) {}
  explicit Sequence(std::vector<Complex> values) : values_(std::move(values)) {}
  explicit Sequence(const std::vector<double>& values) {
    values_.reserve(values.size());
    for (double v : values) values_.emplace_back(v, 0.0);
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  Complex& operator[](std::size_t i) { return values_[i]; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  auto begin() noexcept { return values_.begin(); }
  auto end() noexcept { return values_.end(); }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  const std::vector<Complex>& values() const noexcept { return values_; }

  bool is_real() const {
    for (const Complex& v : values_) {
      if (v.imag() != 0.0) return false;
    }
    return true;
  }

  std::vector<double> real_part() const {
    std::vector<double> out;
    out.reserve(values_.size());
    for (const Complex& v : values_) out.push_back(v.real());
    return out;
  }

  double energy() const {
    double sum = 0.0;
    for (const Complex& v : values_) sum += std::norm(v);
    return sum;
  }

  double norm() const { return std::sqrt(energy()); }

 private:
  std::vector<Complex> values_;
};

inline Sequence operator+(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size())
    throw LengthMismatch("sequence sum: lengths differ");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Sequence(std::move(out));
}

inline Sequence operator-(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size())
    throw LengthMismatch("sequence difference: lengths differ");
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Sequence(std::move(out));
}

inline Sequence operator*(Complex scale, const Sequence& x) {
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = scale * x[i];
  return Sequence(std::move(out));
}

inline Sequence operator*(double scale, const Sequence& x) {
  return Complex(scale, 0.0) * x;
}

/**
 * One period of the conjugate-pair sum
 *
 *   c_{q,k}(n) = 2 M cos(2 pi k n / q),   n = 0 .. q-1,
 *
 * the sum of the conjugate exponential pair exp(+-j 2 pi k n / q) scaled by
 * the amplitude M = amplitude(q).  The angle argument is reduced as
 * (k n) mod q before evaluation, so c(n) = c(q - n) holds bit-exactly.
 */
inline Sequence ccps(const CcpsId& id) {
  const int q = id.q();
  const double scale = 2.0 * amplitude(q);
  std::vector<Complex> out(static_cast<std::size_t>(q));
  for (int n = 0; n < q; ++n) {
    out[static_cast<std::size_t>(n)] =
        Complex(scale * detail::cos_2pi(static_cast<long long>(id.k()) * n, q),
                0.0);
  }
  return Sequence(std::move(out));
}

/**
 * The conjugate exponential pair (S_{q,k}, S_{q,q-k}) with
 * S_{q,k}(n) = exp(j 2 pi k n / q).  The two sequences are exact elementwise
 * conjugates, and for q >= 3 their sum reproduces ccps(id) bit-exactly.
 * For q in {1, 2} the pair degenerates: both members equal S_{q,k} itself.
 */
inline std::pair<Sequence, Sequence> exp_pair(const CcpsId& id) {
  const int q = id.q();
  const int k = id.k();
  std::vector<Complex> a(static_cast<std::size_t>(q));
  std::vector<Complex> b(static_cast<std::size_t>(q));
  for (int n = 0; n < q; ++n) {
    a[static_cast<std::size_t>(n)] =
        detail::exp_2pi(static_cast<long long>(k) * n, q);
    b[static_cast<std::size_t>(n)] =
        detail::exp_2pi(static_cast<long long>(q - k) * n, q);
  }
  return {Sequence(std::move(a)), Sequence(std::move(b))};
}

/**
 * One period of the Ramanujan sum
 *
 *   c_q(n) = sum over k in half_residues(q) of c_{q,k}(n),
 *
 * which is integer valued.  Each sample is snapped to the nearest integer;
 * a residue beyond 1e-9 trips a NumericError because it would mean the
 * cosine accumulation itself is broken.
 */
inline Sequence ramanujan_sum(int q) {
  if (q < 1)
    throw std::invalid_argument("ramanujan_sum: q must be positive");
  std::vector<double> acc(static_cast<std::size_t>(q), 0.0);
  const double scale = 2.0 * amplitude(q);
  for (int k : half_residues(q)) {
    for (int n = 0; n < q; ++n) {
      acc[static_cast<std::size_t>(n)] +=
          scale * detail::cos_2pi(static_cast<long long>(k) * n, q);
    }
  }
  std::vector<Complex> out(static_cast<std::size_t>(q));
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double snapped = std::round(acc[n]);
    if (std::abs(acc[n] - snapped) > 1e-9) {
      throw NumericError("ramanujan_sum: sample " + std::to_string(n) +
                         " is " + std::to_string(acc[n]) +
                         ", not within 1e-9 of an integer");
    }
    out[n] = Complex(snapped, 0.0);
  }
  return Sequence(std::move(out));
}

/// y(n) = x((n - l) mod len).  Any integer l is accepted; the shift is a pure
/// permutation, so samples move without being recomputed.
inline Sequence circular_shift(const Sequence& x, long long l) {
  if (x.empty())
    throw std::invalid_argument("circular_shift: empty sequence");
  const long long len = static_cast<long long>(x.size());
  long long s = l % len;
  if (s < 0) s += len;
  std::vector<Complex> out(x.size());
  for (long long n = 0; n < len; ++n) {
    out[static_cast<std::size_t>(n)] =
        x[static_cast<std::size_t>((n - s + len) % len)];
  }
  return Sequence(std::move(out));
}

/// Concatenates reps >= 1 copies of x.
inline Sequence periodic_extend(const Sequence& x, std::size_t reps) {
  if (x.empty())
    throw std::invalid_argument("periodic_extend: empty sequence");
  if (reps < 1)
    throw std::invalid_argument("periodic_extend: reps must be positive");
  std::vector<Complex> out;
  out.reserve(x.size() * reps);
  for (std::size_t r = 0; r < reps; ++r) {
    out.insert(out.end(), x.values().begin(), x.values().end());
  }
  return Sequence(std::move(out));
}

/// Shortest round-trippable decimal form at 12 significant digits.
/// Negative zero is folded to "0" so equal values serialize identically.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  if (buf[0] == '-' && buf[1] == '0' && buf[2] == '\0') return "0";
  return std::string(buf);
}

/// One sample per line.  Real sequences emit a single column; anything with a
/// nonzero imaginary part emits "re imag" pairs on every line.
inline void write_signal_text(std::ostream& os, const Sequence& x) {
  const bool real = x.is_real();
  for (const Complex& v : x) {
    os << format_value(v.real());
    if (!real) os << ' ' << format_value(v.imag());
    os << '\n';
  }
}

/// Parses the write_signal_text format: blank lines and '#' comments are
/// skipped, one token per line is a real sample, two tokens are "re imag".
inline Sequence read_signal_text(std::istream& is) {
  std::vector<Complex> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    double re = 0.0;
    if (!(tokens >> re)) {
      tokens.clear();
      tokens >> std::ws;
      if (tokens.eof()) continue;  // blank or comment-only line
      throw IoError("signal line " + std::to_string(lineno) +
                    ": not a number");
    }
    double im = 0.0;
    const bool has_im = static_cast<bool>(tokens >> im);
    tokens.clear();
    tokens >> std::ws;
    if (!tokens.eof()) {
      throw IoError("signal line " + std::to_string(lineno) +
                    ": trailing junk");
    }
    values.emplace_back(re, has_im ? im : 0.0);
  }
  if (values.empty()) throw IoError("signal stream holds no samples");
  return Sequence(std::move(values));
}

inline Sequence load_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open signal file: " + path);
  return read_signal_text(in);
}

inline void save_signal(const std::string& path, const Sequence& x) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot create signal file: " + path);
  write_signal_text(out, x);
  out.flush();
  if (!out) throw IoError("failed writing signal file: " + path);
}

}  // namespace ccpt

#endif  // CCPT_SEQUENCE_HPP_
