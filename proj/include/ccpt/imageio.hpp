// ccpt/imageio.hpp

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

// Grayscale PGM input/output (ASCII P2 and binary P5, maxval up to 255) and
// the flatten/normalize glue between images and 1-D filtering.

#ifndef CCPT_IMAGEIO_HPP_
#define CCPT_IMAGEIO_HPP_

#include <cctype>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "ccpt/errors.hpp"
#include "ccpt/sequence.hpp"

namespace ccpt {

/// Row-major grayscale raster.  Pixels are doubles so a filtered image can
/// hold arbitrary real values; write_pgm insists on quantized 0..maxval.
struct GrayImage {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int maxval = 255;
  std::vector<double> pixels;

  double& at(std::size_t r, std::size_t c) { return pixels[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

enum class PgmFormat { kAscii, kBinary };  // P2 / P5

namespace detail {

struct PgmCursor {
  std::string_view data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }

  void skip_space_and_comments() {
    while (!eof()) {
      const char c = data[pos];
      if (c == '#') {
        while (!eof() && data[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos;
      } else {
        break;
      }
    }
  }

  // Next whitespace-delimited token, or empty at end of data.
  std::string_view token() {
    skip_space_and_comments();
    const std::size_t start = pos;
    while (!eof() && std::isspace(static_cast<unsigned char>(data[pos])) == 0 &&
           data[pos] != '#') {
      ++pos;
    }
    return data.substr(start, pos - start);
  }
};

inline long pgm_int(std::string_view tok, const char* what) {
  if (tok.empty())
    throw IoError(std::string("pgm: truncated data before ") + what);
  long value = 0;
  for (const char c : tok) {
    if (c < '0' || c > '9')
      throw IoError(std::string("pgm: malformed header: ") + what +
                    " is not a number");
    value = value * 10 + (c - '0');
    if (value > 1000000000L)
      throw IoError(std::string("pgm: malformed header: ") + what +
                    " is out of range");
  }
  return value;
}

}  // namespace detail

/// Parses a P2 or P5 byte stream.  '#' comments are honoured in the header
/// (and between P2 samples); P5 pixel data starts after exactly one
/// whitespace byte following maxval.
inline GrayImage read_pgm(std::string_view bytes) {
  detail::PgmCursor cur{bytes};

  const std::string_view magic = cur.token();
  if (magic != "P2" && magic != "P5") {
    throw IoError("pgm: malformed header: expected magic P2 or P5, got '" +
                  std::string(magic) + "'");
  }
  const bool binary = magic == "P5";

  const long cols = detail::pgm_int(cur.token(), "width");
  const long rows = detail::pgm_int(cur.token(), "height");
  if (cols < 1 || rows < 1)
    throw IoError("pgm: malformed header: dimensions must be positive");
  const long maxval = detail::pgm_int(cur.token(), "maxval");
  if (maxval < 1)
    throw IoError("pgm: malformed header: maxval must be positive");
  if (maxval > 255) {
    throw IoError("pgm: unsupported maxval " + std::to_string(maxval) +
                  " (limit is 255)");
  }

  GrayImage img;
  img.rows = static_cast<std::size_t>(rows);
  img.cols = static_cast<std::size_t>(cols);
  img.maxval = static_cast<int>(maxval);
  const std::size_t count = img.rows * img.cols;
  img.pixels.resize(count);

  if (binary) {
    if (cur.eof() ||
        std::isspace(static_cast<unsigned char>(bytes[cur.pos])) == 0) {
      throw IoError("pgm: malformed header: missing separator before data");
    }
    ++cur.pos;  // exactly one whitespace byte, then raw pixels
    if (bytes.size() - cur.pos < count) {
      throw IoError("pgm: truncated data: expected " + std::to_string(count) +
                    " pixel bytes, found " +
                    std::to_string(bytes.size() - cur.pos));
    }
    for (std::size_t i = 0; i < count; ++i) {
      const auto value = static_cast<unsigned char>(bytes[cur.pos + i]);
      if (value > maxval) {
        throw IoError("pgm: pixel value " + std::to_string(value) +
                      " exceeds maxval " + std::to_string(maxval));
      }
      img.pixels[i] = static_cast<double>(value);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const long value = detail::pgm_int(cur.token(), "pixel");
      if (value > maxval) {
        throw IoError("pgm: pixel value " + std::to_string(value) +
                      " exceeds maxval " + std::to_string(maxval));
      }
      img.pixels[i] = static_cast<double>(value);
    }
  }
  return img;
}

/// Serializes to "P2\n<cols> <rows>\n<maxval>\n" + samples (or the P5 binary
/// equivalent).  Every pixel must already be an integer in 0..maxval;
/// anything else is the caller's bug, not data to be silently rounded.
inline std::string write_pgm(const GrayImage& img, PgmFormat format) {
  if (img.rows < 1 || img.cols < 1 || img.pixels.size() != img.rows * img.cols)
    throw std::invalid_argument("write_pgm: empty or inconsistent image");
  if (img.maxval < 1 || img.maxval > 255)
    throw std::invalid_argument("write_pgm: maxval must be in 1..255");
  for (const double p : img.pixels) {
    if (!(p >= 0.0) || p > static_cast<double>(img.maxval) ||
        p != std::floor(p)) {
      throw UnquantizedPixels("write_pgm: pixel value " + std::to_string(p) +
                              " is not an integer in 0.." +
                              std::to_string(img.maxval));
    }
  }

  std::string out;
  out += format == PgmFormat::kBinary ? "P5\n" : "P2\n";
  out += std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n";
  out += std::to_string(img.maxval) + "\n";
  if (format == PgmFormat::kBinary) {
    out.reserve(out.size() + img.pixels.size());
    for (const double p : img.pixels) {
      out.push_back(static_cast<char>(static_cast<unsigned char>(p)));
    }
  } else {
    for (std::size_t r = 0; r < img.rows; ++r) {
      for (std::size_t c = 0; c < img.cols; ++c) {
        if (c > 0) out += ' ';
        out += std::to_string(static_cast<long>(img.at(r, c)));
      }
      out += '\n';
    }
  }
  return out;
}

inline GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

inline void save_pgm(const std::string& path, const GrayImage& img,
                     PgmFormat format) {
  const std::string bytes = write_pgm(img, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create image file: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("failed writing image file: " + path);
}

enum class FlattenDirection { kColumnwise, kRowwise };

/// Unrolls the raster into one long signal: column by column (top to bottom,
/// leftmost column first) or row by row.
inline Sequence flatten(const GrayImage& img, FlattenDirection direction) {
  if (img.pixels.size() != img.rows * img.cols || img.pixels.empty())
    throw std::invalid_argument("flatten: empty or inconsistent image");
  std::vector<double> out;
  out.reserve(img.pixels.size());
  if (direction == FlattenDirection::kColumnwise) {
    for (std::size_t c = 0; c < img.cols; ++c) {
      for (std::size_t r = 0; r < img.rows; ++r) out.push_back(img.at(r, c));
    }
  } else {
    out = img.pixels;
  }
  return Sequence(out);
}

/// Inverse of flatten for a real signal of exactly rows * cols samples.
inline GrayImage unflatten(const Sequence& x, std::size_t rows,
                           std::size_t cols, FlattenDirection direction) {
  if (rows < 1 || cols < 1 || x.size() != rows * cols) {
    throw LengthMismatch("unflatten: " + std::to_string(x.size()) +
                         " samples do not fill " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
  GrayImage img;
  img.rows = rows;
  img.cols = cols;
  img.pixels.resize(rows * cols);
  if (direction == FlattenDirection::kColumnwise) {
    std::size_t i = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) img.at(r, c) = x[i++].real();
    }
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) img.pixels[i] = x[i].real();
  }
  return img;
}

/// Absolute min-max display normalization: p -> round(255 |p| scaled so the
/// smallest magnitude maps to 0 and the largest to 255).  A constant-
/// magnitude image maps to all zeros.  The result always has maxval 255.
inline GrayImage normalize_display(const GrayImage& img) {
  if (img.pixels.empty() || img.pixels.size() != img.rows * img.cols)
    throw std::invalid_argument("normalize_display: empty image");
  double lo = std::abs(img.pixels[0]);
  double hi = lo;
  for (const double p : img.pixels) {
    const double mag = std::abs(p);
    lo = std::min(lo, mag);
    hi = std::max(hi, mag);
  }
  GrayImage out;
  out.rows = img.rows;
  out.cols = img.cols;
  out.maxval = 255;
  out.pixels.resize(img.pixels.size());
  if (hi > lo) {
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      out.pixels[i] =
          std::round(255.0 * (std::abs(img.pixels[i]) - lo) / (hi - lo));
    }
  }
  return out;
}

}  // namespace ccpt

#endif  // CCPT_IMAGEIO_HPP_
