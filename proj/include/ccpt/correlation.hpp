// ccpt/correlation.hpp

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

// Period structure seen through correlation.  One period of c_{q,k} has a
// two-line spectrum (value q at bins k and q - k), so its circular
// autocorrelation is q * c_{q,k}: the conjugate-pair subspaces are closed
// under circular cross-correlation.  That closure is what makes the
// normalized autocorrelation of any signal split across the same subspaces
// as the signal itself (autocorr_decompose checks the two sides against each
// other).

#ifndef CCPT_CORRELATION_HPP_
#define CCPT_CORRELATION_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ccpt/errors.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/sequence.hpp"
#include "ccpt/subspace.hpp"

namespace ccpt {

struct SpectrumLine {
  std::size_t bin = 0;
  Complex value;
};

/// Direct-evaluation DFT, X(K) = sum_n x(n) exp(-j 2 pi K n / L), all bins.
/// The twiddle angle is reduced modulo L before evaluation, exactly like the
/// sequence generators, so pure subspace inputs produce exact zero bins.
inline std::vector<SpectrumLine> dft(const Sequence& x) {
  if (x.empty()) throw std::invalid_argument("dft: empty signal");
  const std::size_t len = x.size();
  std::vector<SpectrumLine> out(len);
  for (std::size_t bin = 0; bin < len; ++bin) {
    Complex sum{};
    for (std::size_t n = 0; n < len; ++n) {
      sum += x[n] * detail::exp_2pi(-static_cast<long long>(bin * n),
                                    static_cast<long long>(len));
    }
    out[bin] = {bin, sum};
  }
  return out;
}

/// Circular cross-correlation at every lag:
/// r_xy(l) = sum_n x(n) * conj(y((n - l) mod L)).
inline Sequence circ_xcorr(const Sequence& x, const Sequence& y) {
  if (x.empty()) throw std::invalid_argument("circ_xcorr: empty signal");
  if (x.size() != y.size())
    throw LengthMismatch("circ_xcorr: lengths differ");
  const std::size_t len = x.size();
  std::vector<Complex> out(len);
  for (std::size_t l = 0; l < len; ++l) {
    Complex sum{};
    for (std::size_t n = 0; n < len; ++n) {
      sum += x[n] * std::conj(y[(n + len - l) % len]);
    }
    out[l] = sum;
  }
  return Sequence(std::move(out));
}

namespace detail {

inline double max_projection_defect(const Sequence& s, const CcpsId& id) {
  const Sequence proj = project_fast(s, id);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    worst = std::max(worst, std::abs(proj[i] - s[i]));
  }
  return worst;
}

}  // namespace detail

/// Cross-correlates two members of the same subspace and verifies the result
/// stayed inside it.  Membership means the subspace projection fixes the
/// sequence to within 1e-8 per sample; the inputs are checked up front
/// (NotInSubspace) and the output afterwards (NumericError, which would mean
/// the closure property itself failed).
inline Sequence ccs_closure_check(const Sequence& x, const Sequence& y,
                                  const CcpsId& id) {
  const std::size_t q = static_cast<std::size_t>(id.q());
  if (x.size() != q || y.size() != q) {
    throw LengthMismatch("ccs_closure_check: operands must be one period (" +
                         std::to_string(q) + " samples)");
  }
  if (detail::max_projection_defect(x, id) > 1e-8) {
    throw NotInSubspace("ccs_closure_check: x is not in the (q=" +
                        std::to_string(id.q()) + ", k=" +
                        std::to_string(id.k()) + ") subspace");
  }
  if (detail::max_projection_defect(y, id) > 1e-8) {
    throw NotInSubspace("ccs_closure_check: y is not in the (q=" +
                        std::to_string(id.q()) + ", k=" +
                        std::to_string(id.k()) + ") subspace");
  }
  Sequence r = circ_xcorr(x, y);
  if (detail::max_projection_defect(r, id) > 1e-8) {
    throw NumericError(
        "ccs_closure_check: cross-correlation left the subspace");
  }
  return r;
}

/// Splits the normalized autocorrelation across subspaces.  Returns
/// lhs(l) = (1/N) r_x(l) and
/// rhs(l) = sum over (q, k) of (1/q) r_{q,k}(l mod q), where r_{q,k} is the
/// q-point autocorrelation of one period of the projection of x onto (q, k).
/// The two sides agree up to floating-point error; the caller picks the
/// tolerance that matters for its use.
inline std::pair<Sequence, Sequence> autocorr_decompose(const Sequence& x) {
  if (x.empty())
    throw std::invalid_argument("autocorr_decompose: empty signal");
  const std::size_t n = x.size();

  Sequence lhs = (1.0 / static_cast<double>(n)) * circ_xcorr(x, x);

  std::vector<Complex> rhs(n);
  for (const CcpsId& id : ccs_family(n)) {
    const std::size_t q = static_cast<std::size_t>(id.q());
    const Sequence proj = project_fast(x, id);
    Sequence period(std::vector<Complex>(proj.values().begin(),
                                         proj.values().begin() +
                                             static_cast<std::ptrdiff_t>(q)));
    const Sequence r = circ_xcorr(period, period);
    const double inv_q = 1.0 / static_cast<double>(q);
    for (std::size_t l = 0; l < n; ++l) rhs[l] += inv_q * r[l % q];
  }
  return {std::move(lhs), Sequence(std::move(rhs))};
}

}  // namespace ccpt

#endif  // CCPT_CORRELATION_HPP_
