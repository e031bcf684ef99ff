// ccpt/subspace.hpp

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

// Each id (q, k) names a conjugate-pair subspace of period-q signals.  The
// q x q circulant D whose column j is c_{q,k} shifted by j factors as
// D = B B^H with B holding the exponential pair as columns, and B^H B = q I,
// so P = D / q is the orthogonal projector onto the subspace.
//
// Projecting a length-N signal (q | N) does not need the N x N projector:
// summing the N/q period-length blocks of x, applying D once, scaling by 1/N
// and extending periodically gives the same vector with q^2 + q scalar
// multiplications instead of N^2.  decompose() runs that projection for every
// divisor q of N and every half residue k, which tiles the whole space:
// sum over q | N of phi(q) = N, so the projections add back up to x.

#ifndef CCPT_SUBSPACE_HPP_
#define CCPT_SUBSPACE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccpt/errors.hpp"
#include "ccpt/linalg.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/sequence.hpp"

namespace ccpt {

struct SubspaceBasis {
  CcpsId id;
  std::size_t dim = 1;      // 1 for q in {1, 2}, 2 otherwise
  Matrix<double> circulant;  // D, q x q
  Matrix<double> frame;      // F, the first dim columns of D
  Matrix<Complex> pair;      // B, q x dim, D = B B^H
};

/// Builds D, F and B for one subspace and verifies D = B B^H elementwise to
/// 1e-10 before returning.
inline SubspaceBasis build_basis(const CcpsId& id) {
  const int q = id.q();
  const std::size_t qs = static_cast<std::size_t>(q);
  const Sequence base = ccps(id);

  Matrix<double> d(qs, qs);
  for (std::size_t j = 0; j < qs; ++j) {
    for (std::size_t i = 0; i < qs; ++i) {
      d(i, j) = base[(i + qs - j) % qs].real();
    }
  }

  const std::size_t dim = q <= 2 ? 1 : 2;
  Matrix<double> f(qs, dim);
  for (std::size_t i = 0; i < qs; ++i) {
    for (std::size_t j = 0; j < dim; ++j) f(i, j) = d(i, j);
  }

  const auto [s_k, s_conj] = exp_pair(id);
  Matrix<Complex> b(qs, dim);
  for (std::size_t i = 0; i < qs; ++i) {
    b(i, 0) = s_k[i];
    if (dim == 2) b(i, 1) = s_conj[i];
  }

  for (std::size_t m = 0; m < qs; ++m) {
    for (std::size_t n = 0; n < qs; ++n) {
      Complex sum{};
      for (std::size_t c = 0; c < dim; ++c) {
        sum += b(m, c) * std::conj(b(n, c));
      }
      if (std::abs(sum - Complex(d(m, n), 0.0)) > 1e-10) {
        throw FactorizationMismatch(
            "build_basis: D and B B^H disagree at (" + std::to_string(m) +
            ", " + std::to_string(n) + ") for q=" + std::to_string(q) +
            ", k=" + std::to_string(id.k()));
      }
    }
  }

  return {id, dim, std::move(d), std::move(f), std::move(b)};
}

/// Orthogonal projection of x onto the subspace of id, via block folding:
/// fold x into one period by summation, apply D, scale by 1/N, extend back.
/// Costs exactly q^2 + q scalar multiplications, accumulated into *mults
/// when given.
inline Sequence project_fast(const Sequence& x, const CcpsId& id,
                             std::uint64_t* mults = nullptr) {
  if (x.empty()) throw std::invalid_argument("project_fast: empty signal");
  const std::size_t n = x.size();
  const std::size_t q = static_cast<std::size_t>(id.q());
  if (n % q != 0) {
    throw LengthMismatch("project_fast: period " + std::to_string(q) +
                         " does not divide signal length " +
                         std::to_string(n));
  }

  std::vector<Complex> folded(q);
  for (std::size_t i = 0; i < n; ++i) folded[i % q] += x[i];

  const Sequence base = ccps(id);
  std::vector<Complex> period(q);
  for (std::size_t m = 0; m < q; ++m) {
    Complex sum{};
    for (std::size_t j = 0; j < q; ++j) {
      sum += base[(m + q - j) % q].real() * folded[j];
    }
    period[m] = sum;
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  for (Complex& v : period) v *= inv_n;
  if (mults != nullptr) *mults += static_cast<std::uint64_t>(q) * q + q;

  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = period[i % q];
  return Sequence(std::move(out));
}

/// The N x N projector built the textbook way: tile F to length N and form
/// E (E^T E)^{-1} E^T.  Reference path for project_fast; quadratic cost.
inline Matrix<double> naive_projection_matrix(const CcpsId& id,
                                              std::size_t n) {
  const std::size_t q = static_cast<std::size_t>(id.q());
  if (n == 0 || n % q != 0) {
    throw LengthMismatch("naive_projection_matrix: period " +
                         std::to_string(q) + " does not divide length " +
                         std::to_string(n));
  }
  const SubspaceBasis basis = build_basis(id);

  Matrix<double> e(n, basis.dim);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < basis.dim; ++c) {
      e(r, c) = basis.frame(r % q, c);
    }
  }

  const Matrix<double> gram = e.adjoint() * e;
  Matrix<double> gram_inv;
  try {
    gram_inv = inverse(gram);
  } catch (const SingularSystem&) {
    throw SingularGram("naive_projection_matrix: Gram matrix is singular");
  }
  if (inf_norm(gram) * inf_norm(gram_inv) > 1e12) {
    throw SingularGram(
        "naive_projection_matrix: Gram matrix condition estimate exceeds "
        "1e12");
  }
  return e * gram_inv * e.adjoint();
}

inline Sequence project_naive(const Sequence& x, const CcpsId& id) {
  if (x.empty()) throw std::invalid_argument("project_naive: empty signal");
  const Matrix<double> p = naive_projection_matrix(id, x.size());
  return Sequence(p * x.values());
}

/// Every subspace id for signals of length n: divisors ascending, half
/// residues ascending within each divisor.  This is the canonical report and
/// coefficient order everywhere in the library.
inline std::vector<CcpsId> ccs_family(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ccs_family: length must be positive");
  std::vector<CcpsId> out;
  for (long long q : divisors(static_cast<long long>(n))) {
    for (int k : half_residues(static_cast<int>(q))) {
      out.emplace_back(static_cast<int>(q), k);
    }
  }
  return out;
}

struct ProjectionReport {
  struct Entry {
    CcpsId id;
    Sequence projection;  // length N
    double energy = 0.0;  // squared Euclidean norm of the projection
  };
  std::size_t length = 0;
  std::vector<Entry> entries;       // ccs_family order
  double residual_norm = 0.0;       // ||x - sum of projections||
};

/// Projects x onto every subspace of its length.  The projections tile the
/// space, so their sum must reconstruct x; a residual above 1e-8 * ||x||
/// trips a NumericError.  Multiplications are accumulated into *mults when
/// given (q^2 + q per subspace).
inline ProjectionReport decompose(const Sequence& x,
                                  std::uint64_t* mults = nullptr) {
  if (x.empty()) throw std::invalid_argument("decompose: empty signal");
  const std::size_t n = x.size();

  ProjectionReport report;
  report.length = n;
  std::vector<Complex> sum(n);
  for (const CcpsId& id : ccs_family(n)) {
    Sequence proj = project_fast(x, id, mults);
    for (std::size_t i = 0; i < n; ++i) sum[i] += proj[i];
    const double energy = proj.energy();
    report.entries.push_back({id, std::move(proj), energy});
  }

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) residual += std::norm(x[i] - sum[i]);
  report.residual_norm = std::sqrt(residual);
  if (report.residual_norm > 1e-8 * x.norm()) {
    throw NumericError("decompose: projections sum to a residual of " +
                       std::to_string(report.residual_norm));
  }
  return report;
}

namespace detail {

inline std::string format_sample(const Complex& v) {
  if (v.imag() == 0.0) return format_value(v.real());
  return format_value(v.real()) + "," + format_value(v.imag());
}

}  // namespace detail

/// Writes the entries whose energy exceeds min_energy, one line per subspace:
/// "q k energy", optionally followed by the projection samples (complex
/// samples as "re,imag").
inline void write_report(std::ostream& os, const ProjectionReport& report,
                         double min_energy, bool with_samples) {
  os << "# ccpt projection report\n";
  os << "N " << report.length << '\n';
  os << "residual_norm " << format_value(report.residual_norm) << '\n';
  os << "# q k energy" << (with_samples ? " samples..." : "") << '\n';
  for (const ProjectionReport::Entry& entry : report.entries) {
    if (!(entry.energy > min_energy)) continue;
    os << entry.id.q() << ' ' << entry.id.k() << ' '
       << format_value(entry.energy);
    if (with_samples) {
      for (const Complex& v : entry.projection) {
        os << ' ' << detail::format_sample(v);
      }
    }
    os << '\n';
  }
}

/// Placement of one subspace's coefficients inside a length-n coefficient
/// vector: dim consecutive slots starting at offset, in ccs_family order.
/// The offsets always finish at exactly n because sum over q | n of phi(q)
/// equals n.
struct CoeffBlock {
  CcpsId id;
  std::size_t offset = 0;
  std::size_t dim = 1;
};

inline std::vector<CoeffBlock> coeff_layout(std::size_t n) {
  std::vector<CoeffBlock> out;
  std::size_t offset = 0;
  for (const CcpsId& id : ccs_family(n)) {
    const std::size_t dim = id.q() <= 2 ? 1 : 2;
    out.push_back({id, offset, dim});
    offset += dim;
  }
  if (offset != n) {
    throw NumericError("coeff_layout: offsets end at " +
                       std::to_string(offset) + " instead of " +
                       std::to_string(n));
  }
  return out;
}

/// The n x n transform matrix whose column blocks are the frames F of every
/// subspace, tiled from period q up to length n.  Square and invertible.
inline Matrix<Complex> ccpt_matrix(std::size_t n) {
  Matrix<Complex> t(n, n);
  for (const CoeffBlock& block : coeff_layout(n)) {
    const SubspaceBasis basis = build_basis(block.id);
    const std::size_t q = static_cast<std::size_t>(block.id.q());
    for (std::size_t c = 0; c < block.dim; ++c) {
      for (std::size_t r = 0; r < n; ++r) {
        t(r, block.offset + c) = Complex(basis.frame(r % q, c), 0.0);
      }
    }
  }
  return t;
}

/// Coefficients beta with x = ccpt_matrix(n) * beta, in coeff_layout order.
inline Sequence ccpt_analyze(const Sequence& x) {
  if (x.empty()) throw std::invalid_argument("ccpt_analyze: empty signal");
  return Sequence(solve(ccpt_matrix(x.size()), x.values()));
}

/// Rebuilds the signal from analyze coefficients.
inline Sequence ccpt_synthesize(const Sequence& beta) {
  if (beta.empty())
    throw std::invalid_argument("ccpt_synthesize: empty coefficients");
  return Sequence(ccpt_matrix(beta.size()) * beta.values());
}

/// Scalar multiplications needed to decompose a length-n signal with the
/// folded projections: a constant 2 (n odd) or 8 (n even) for the q in
/// {1, 2} subspaces plus (1/2) sum over divisors q >= 3 of phi(q) (q^2 + q).
inline long long mult_count(long long n) {
  if (n < 1) throw std::invalid_argument("mult_count: n must be positive");
  long long sum = 0;
  for (long long q : divisors(n)) {
    if (q >= 3) sum += totient(q) * (q * q + q);
  }
  return (n % 2 == 0 ? 8 : 2) + sum / 2;
}

/// floor(n^2.81), the Strassen-style cost yardstick used by the bench
/// subcommand.
inline long long strassen_reference(long long n) {
  if (n < 1)
    throw std::invalid_argument("strassen_reference: n must be positive");
  return static_cast<long long>(
      std::floor(std::pow(static_cast<double>(n), 2.81)));
}

}  // namespace ccpt

#endif  // CCPT_SUBSPACE_HPP_
