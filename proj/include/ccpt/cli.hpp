// ccpt/cli.hpp

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

// Command-line front end.  run() is the whole tool: it takes argv (without
// the program name) plus the two output streams, so tests drive it
// in-process.  Exit codes: 0 success, 2 argument errors, 3 I/O and format
// errors, 4 numeric-contract violations.

#ifndef CCPT_CLI_HPP_
#define CCPT_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ccpt/correlation.hpp"
#include "ccpt/derivative.hpp"
#include "ccpt/errors.hpp"
#include "ccpt/imageio.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/sequence.hpp"
#include "ccpt/subspace.hpp"

namespace ccpt {

namespace detail {

inline void run_gen(std::ostream& out, int q, int k, int order) {
  const CcpsId id(q, k);
  const Sequence taps = order == 1 ? ccps(id) : make_kernel(id, order).taps;
  write_signal_text(out, taps);
}

inline void run_edge(const std::string& in_path, const std::string& out_path,
                     int q, int k, int order, bool sum_rs,
                     const std::string& direction, const std::string& format) {
  // Kernel parameters are validated before any file is touched, so bad
  // arguments report as argument errors even when the input is also bad.
  Sequence taps;
  if (sum_rs) {
    if (order != 1 && order != 2)
      throw UnsupportedOrder("edge: order must be 1 or 2");
    if (order == 1 && q < 2)
      throw UnsupportedOrder("edge: --sum-rs needs q >= 2");
    if (order == 2 && (q < 3 || q % 2 == 0))
      throw UnsupportedOrder("edge: second-difference taps need odd q >= 3");
    taps = ramanujan_sum(q);
    if (order == 2) taps = circular_shift(taps, (q - 1) / 2);
  } else {
    taps = make_kernel(CcpsId(q, k), order).taps;
  }

  const FlattenDirection dir = direction == "col"
                                   ? FlattenDirection::kColumnwise
                                   : FlattenDirection::kRowwise;
  const GrayImage img = load_pgm(in_path);
  const Sequence x = flatten(img, dir);
  const Sequence y = filter_signal(x, taps, ConvMode::kSame);
  const GrayImage filtered = unflatten(y, img.rows, img.cols, dir);
  save_pgm(out_path, normalize_display(filtered),
           format == "p5" ? PgmFormat::kBinary : PgmFormat::kAscii);
}

inline void run_project(const std::string& in_path,
                        const std::string& report_path, double threshold,
                        bool with_samples) {
  const Sequence x = load_signal(in_path);
  const ProjectionReport report = decompose(x);
  std::ofstream rf(report_path);
  if (!rf) throw IoError("cannot create report file: " + report_path);
  write_report(rf, report, threshold * x.energy(), with_samples);
  rf.flush();
  if (!rf) throw IoError("failed writing report file: " + report_path);
}

inline void run_periods(std::ostream& out, const std::string& in_path,
                        int top, double threshold) {
  if (top < 0) throw std::invalid_argument("periods: --top must be >= 0");
  const Sequence x = load_signal(in_path);
  const ProjectionReport report = decompose(x);
  const double min_energy = threshold * x.energy();

  std::vector<const ProjectionReport::Entry*> kept;
  for (const ProjectionReport::Entry& entry : report.entries) {
    if (entry.energy > min_energy) kept.push_back(&entry);
  }
  std::sort(kept.begin(), kept.end(),
            [](const ProjectionReport::Entry* a,
               const ProjectionReport::Entry* b) {
              if (a->energy != b->energy) return a->energy > b->energy;
              return a->id < b->id;
            });
  const std::size_t count =
      std::min(kept.size(), static_cast<std::size_t>(top));
  for (std::size_t i = 0; i < count; ++i) {
    out << kept[i]->id.q() << ' ' << kept[i]->id.k() << ' '
        << format_value(kept[i]->energy) << '\n';
  }
}

inline void run_corr(std::ostream& out, const std::string& in_path) {
  const Sequence x = load_signal(in_path);
  const auto [lhs, rhs] = autocorr_decompose(x);
  double worst = 0.0;
  for (std::size_t l = 0; l < lhs.size(); ++l) {
    worst = std::max(worst, std::abs(lhs[l] - rhs[l]));
  }
  out << "# lag normalized_autocorr subspace_sum\n";
  for (std::size_t l = 0; l < lhs.size(); ++l) {
    out << l << ' ' << format_sample(lhs[l]) << ' ' << format_sample(rhs[l])
        << '\n';
  }
  out << "max_abs_discrepancy " << format_value(worst) << '\n';
  if (worst > 1e-8) {
    throw NumericError(
        "corr: autocorrelation split disagrees with the signal "
        "autocorrelation by " +
        format_value(worst));
  }
}

inline void run_bench(std::ostream& out, long long max_n) {
  if (max_n < 0 || max_n > 1000000)
    throw std::invalid_argument("bench: --max must be in 0..1000000");
  std::vector<long long> lengths = {3, 6, 8, 32, 82};
  if (max_n >= 1) {
    // Divisor-count record setters up to max_n, via a sieve.
    std::vector<int> divisor_count(static_cast<std::size_t>(max_n) + 1, 0);
    for (long long d = 1; d <= max_n; ++d) {
      for (long long m = d; m <= max_n; m += d) {
        ++divisor_count[static_cast<std::size_t>(m)];
      }
    }
    int best = 0;
    for (long long n = 1; n <= max_n; ++n) {
      if (divisor_count[static_cast<std::size_t>(n)] > best) {
        best = divisor_count[static_cast<std::size_t>(n)];
        lengths.push_back(n);
      }
    }
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  out << "# N M_total floor(N^2.81)\n";
  for (const long long n : lengths) {
    out << n << ' ' << mult_count(n) << ' ' << strassen_reference(n) << '\n';
  }
}

}  // namespace detail

/// Parses argv (program name stripped) and runs one subcommand.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Conjugate-pair signal decomposition toolkit"};
  app.name("ccpt");
  app.require_subcommand(1);

  int gen_q = 0;
  int gen_k = 0;
  int gen_order = 1;
  CLI::App* gen = app.add_subcommand(
      "gen", "Print one period of a conjugate-pair sum or kernel");
  gen->add_option("--q", gen_q, "Period")->required();
  gen->add_option("--k", gen_k, "Frequency index")->required();
  gen->add_option("--order", gen_order,
                  "1 = plain taps, 2 = midpoint-shifted (odd q only)");

  int rs_q = 0;
  CLI::App* rs =
      app.add_subcommand("rs", "Print one period of a Ramanujan sum");
  rs->add_option("--q", rs_q, "Period")->required();

  std::string edge_in;
  std::string edge_out;
  int edge_q = 0;
  int edge_k = 1;
  int edge_order = 1;
  bool edge_sum_rs = false;
  std::string edge_direction = "col";
  std::string edge_format = "p5";
  CLI::App* edge = app.add_subcommand(
      "edge", "Filter a PGM image with a derivative kernel");
  edge->add_option("--in", edge_in, "Input PGM (P2 or P5)")->required();
  edge->add_option("--out", edge_out, "Output PGM")->required();
  edge->add_option("--q", edge_q, "Kernel period")->required();
  edge->add_option("--k", edge_k, "Frequency index (ignored with --sum-rs)");
  edge->add_option("--order", edge_order, "1 or 2");
  edge->add_flag("--sum-rs", edge_sum_rs,
                 "Use the Ramanujan sum (all k at once) as taps");
  edge->add_option("--direction", edge_direction, "Flatten direction")
      ->check(CLI::IsMember({"col", "row"}));
  edge->add_option("--format", edge_format, "Output format")
      ->check(CLI::IsMember({"p2", "p5"}));

  std::string project_in;
  std::string project_report;
  double project_threshold = 1e-10;
  bool project_samples = false;
  CLI::App* project = app.add_subcommand(
      "project", "Decompose a signal across its period subspaces");
  project->add_option("--in", project_in, "Input signal, one sample per line")
      ->required();
  project->add_option("--report", project_report, "Report file to write")
      ->required();
  project->add_option(
      "--threshold", project_threshold,
      "Keep entries with energy > threshold * signal energy (negative keeps "
      "all)");
  project->add_flag("--with-samples", project_samples,
                    "Include projection samples in the report");

  std::string periods_in;
  int periods_top = 5;
  double periods_threshold = 1e-10;
  CLI::App* periods = app.add_subcommand(
      "periods", "Rank the strongest period components of a signal");
  periods->add_option("--in", periods_in, "Input signal")->required();
  periods->add_option("--top", periods_top, "How many components to print");
  periods->add_option("--threshold", periods_threshold,
                      "Relative energy threshold");

  std::string corr_in;
  CLI::App* corr = app.add_subcommand(
      "corr", "Split the normalized autocorrelation across subspaces");
  corr->add_option("--in", corr_in, "Input signal")->required();

  long long bench_max = 0;
  CLI::App* bench = app.add_subcommand(
      "bench", "Print projection multiplication counts per signal length");
  bench->add_option("--max", bench_max,
                    "Also include divisor-record lengths up to this bound");

  gen->callback([&] { detail::run_gen(out, gen_q, gen_k, gen_order); });
  rs->callback([&] {
    write_signal_text(out, ramanujan_sum(rs_q));
  });
  edge->callback([&] {
    detail::run_edge(edge_in, edge_out, edge_q, edge_k, edge_order,
                     edge_sum_rs, edge_direction, edge_format);
  });
  project->callback([&] {
    detail::run_project(project_in, project_report, project_threshold,
                        project_samples);
  });
  periods->callback([&] {
    detail::run_periods(out, periods_in, periods_top, periods_threshold);
  });
  corr->callback([&] { detail::run_corr(out, corr_in); });
  bench->callback([&] { detail::run_bench(out, bench_max); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ccpt

#endif  // CCPT_CLI_HPP_
