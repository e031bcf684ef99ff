// ccpt/derivative.hpp

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

// Conjugate-pair sums act as derivative filters when used as convolution
// taps.  With one period of c_{q,k} as the kernel (q > 1), constants map to
// zero and ramps map to the constant M*q away from the boundary, which is
// first-difference behaviour.  Shifting the taps by (q-1)/2 (odd q only)
// additionally kills ramps, which is second-difference behaviour.  The
// shifted kernel's first moment against a ramp,
//
//   ramp_moment(id, m) = sum_l l * c_{q,k}((l - m) mod q)
//                      = q / (1 - cos v) * (cos(u + v) - cos u),
//
// with u = 2 pi k m / q and v = 2 pi k / q, vanishes exactly when q divides
// 2m + 1; for odd q that happens at the midpoint m = (q-1)/2 and for even q
// never, which is why second-difference kernels require odd q.

#ifndef CCPT_DERIVATIVE_HPP_
#define CCPT_DERIVATIVE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ccpt/errors.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/sequence.hpp"

namespace ccpt {

/// Full linear convolution, direct evaluation: output length is
/// len(x) + len(h) - 1.  Direct summation is intentional; the kernels here
/// are one short period long, so an FFT would not pay for itself.
inline Sequence linear_convolve(const Sequence& x, const Sequence& h) {
  if (x.empty() || h.empty())
    throw std::invalid_argument("linear_convolve: empty operand");
  std::vector<Complex> out(x.size() + h.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) out[i + j] += x[i] * h[j];
  }
  return Sequence(std::move(out));
}

struct DerivativeKernel {
  CcpsId id;
  int order = 1;   // 1 = first difference, 2 = second difference
  Sequence taps;
};

/// order 1: taps are one period of ccps(id), q >= 2.
/// order 2: taps are ccps(id) circularly shifted by (q-1)/2, odd q >= 3.
inline DerivativeKernel make_kernel(const CcpsId& id, int order) {
  const int q = id.q();
  if (order == 1) {
    if (q < 2) {
      throw UnsupportedOrder(
          "make_kernel: first-difference taps need q >= 2, got q=" +
          std::to_string(q));
    }
    return {id, 1, ccps(id)};
  }
  if (order == 2) {
    if (q < 3 || q % 2 == 0) {
      throw UnsupportedOrder(
          "make_kernel: second-difference taps need odd q >= 3, got q=" +
          std::to_string(q));
    }
    return {id, 2, circular_shift(ccps(id), (q - 1) / 2)};
  }
  throw UnsupportedOrder("make_kernel: order must be 1 or 2, got " +
                         std::to_string(order));
}

/// First moment of the shifted taps, sum_l l * c_{q,k}((l - m) mod q),
/// evaluated by direct summation.  Zero exactly when q divides 2m + 1.
inline double ramp_moment(const CcpsId& id, int m) {
  const int q = id.q();
  if (q < 2)
    throw std::invalid_argument("ramp_moment: q must be at least 2");
  const Sequence shifted = circular_shift(ccps(id), m);
  double sum = 0.0;
  for (int l = 0; l < q; ++l) {
    sum += static_cast<double>(l) * shifted[static_cast<std::size_t>(l)].real();
  }
  return sum;
}

enum class ConvMode { kFull, kSame };

/// Convolves x with arbitrary taps.  kFull keeps all len(x) + len(taps) - 1
/// samples; kSame crops to len(x) by dropping floor((q-1)/2) leading and
/// ceil((q-1)/2) trailing samples, which centres the kernel.
inline Sequence filter_signal(const Sequence& x, const Sequence& taps,
                              ConvMode mode) {
  if (taps.empty())
    throw std::invalid_argument("filter_signal: empty taps");
  if (x.size() < taps.size()) {
    throw InputTooShort("filter_signal: signal of length " +
                        std::to_string(x.size()) +
                        " is shorter than the kernel (" +
                        std::to_string(taps.size()) + ")");
  }
  Sequence full = linear_convolve(x, taps);
  if (mode == ConvMode::kFull) return full;
  const std::size_t drop_front = (taps.size() - 1) / 2;
  std::vector<Complex> out(full.values().begin() +
                               static_cast<std::ptrdiff_t>(drop_front),
                           full.values().begin() +
                               static_cast<std::ptrdiff_t>(drop_front +
                                                           x.size()));
  return Sequence(std::move(out));
}

inline Sequence filter_signal(const Sequence& x, const DerivativeKernel& k,
                              ConvMode mode) {
  return filter_signal(x, k.taps, mode);
}

}  // namespace ccpt

#endif  // CCPT_DERIVATIVE_HPP_
