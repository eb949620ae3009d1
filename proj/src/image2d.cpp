// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/image2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavekit/errors.hpp"
#include "wavekit/subband.hpp"

namespace wavekit {
namespace {

std::string dims(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

Signal row_of(const Plane& p, Eigen::Index r) {
  Signal s(static_cast<std::size_t>(p.cols()));
  for (Eigen::Index c = 0; c < p.cols(); ++c) s[static_cast<std::size_t>(c)] = p(r, c);
  return s;
}

Signal col_of(const Plane& p, Eigen::Index c) {
  Signal s(static_cast<std::size_t>(p.rows()));
  for (Eigen::Index r = 0; r < p.rows(); ++r) s[static_cast<std::size_t>(r)] = p(r, c);
  return s;
}

void put_row(Plane& p, Eigen::Index r, const Signal& s) {
  for (Eigen::Index c = 0; c < p.cols(); ++c) p(r, c) = s[static_cast<std::size_t>(c)];
}

void put_col(Plane& p, Eigen::Index c, const Signal& s) {
  for (Eigen::Index r = 0; r < p.rows(); ++r) p(r, c) = s[static_cast<std::size_t>(r)];
}

// The two passes of a separable step carry gains 1 and 2 in place of √2 each.
constexpr double kFirstPassGain = 1.0;
constexpr double kSecondPassGain = 2.0;

// Splits every column of `src` into low (top) and high (bottom) halves.
void analyse_columns(const Plane& src, const FilterSpec& f, Plane& low, Plane& high) {
  low.resize(src.rows() / 2, src.cols());
  high.resize(src.rows() / 2, src.cols());
  for (Eigen::Index c = 0; c < src.cols(); ++c) {
    auto pair = detail::analysis_with_gain(col_of(src, c), f, kSecondPassGain);
    put_col(low, c, pair.y);
    put_col(high, c, pair.z);
  }
}

Plane synthesise_columns(const Plane& low, const Plane& high, const FilterSpec& f) {
  Plane out(low.rows() * 2, low.cols());
  for (Eigen::Index c = 0; c < low.cols(); ++c) {
    put_col(out, c,
            detail::synthesis_with_gain(SubbandPair{col_of(low, c), col_of(high, c)}, f, kFirstPassGain));
  }
  return out;
}

}  // namespace

std::size_t ImagePyramid::coefficient_count() const noexcept {
  auto total = static_cast<std::size_t>(approx.size());
  for (const auto& l : levels) {
    total += static_cast<std::size_t>(l.h.size() + l.v.size() + l.d.size());
  }
  return total;
}

Quantizer::Quantizer(double step) : step_(step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ParameterError("quantizer step must be positive and finite");
  }
}

Complex Quantizer::apply(Complex c) const noexcept {
  return {std::round(c.real() / step_) * step_, std::round(c.imag() / step_) * step_};
}

double energy(const Plane& p) { return p.cwiseAbs2().sum(); }

QuadDecomp dwt2d_step(const Plane& img, const FilterSpec& f) {
  const auto rows = img.rows();
  const auto cols = img.cols();
  const auto len = static_cast<Eigen::Index>(f.length());
  if (rows % 2 != 0 || cols % 2 != 0 || rows < len || cols < len || rows == 0 || cols == 0) {
    throw SizeError("dwt2d_step: image " + dims(rows, cols) +
                    " needs even dimensions of at least " + std::to_string(len));
  }
  // Row pass: x direction.
  Plane low_x(rows, cols / 2), high_x(rows, cols / 2);
  for (Eigen::Index r = 0; r < rows; ++r) {
    auto pair = detail::analysis_with_gain(row_of(img, r), f, kFirstPassGain);
    put_row(low_x, r, pair.y);
    put_row(high_x, r, pair.z);
  }
  // Column pass: y direction.
  QuadDecomp q;
  analyse_columns(low_x, f, q.a, q.v);
  analyse_columns(high_x, f, q.h, q.d);
  return q;
}

Plane idwt2d_step(const QuadDecomp& q, const FilterSpec& f) {
  const auto r = q.a.rows();
  const auto c = q.a.cols();
  for (const Plane* p : {&q.h, &q.v, &q.d}) {
    if (p->rows() != r || p->cols() != c) {
      throw ShapeError("idwt2d: quadrant shapes differ (" + dims(r, c) + " vs " +
                       dims(p->rows(), p->cols()) + ")");
    }
  }
  const Plane low_x = synthesise_columns(q.a, q.v, f);
  const Plane high_x = synthesise_columns(q.h, q.d, f);
  Plane out(2 * r, 2 * c);
  for (Eigen::Index row = 0; row < out.rows(); ++row) {
    put_row(out, row,
            detail::synthesis_with_gain(SubbandPair{row_of(low_x, row), row_of(high_x, row)}, f,
                                        kSecondPassGain));
  }
  return out;
}

std::size_t max_levels_2d(Eigen::Index rows, Eigen::Index cols, const FilterSpec& f) {
  const auto len = static_cast<Eigen::Index>(f.length());
  std::size_t levels = 0;
  while (rows > 0 && cols > 0 && rows % 2 == 0 && cols % 2 == 0 && rows >= len && cols >= len) {
    rows /= 2;
    cols /= 2;
    ++levels;
  }
  return levels;
}

ImagePyramid dwt2d(const Plane& img, const FilterSpec& f, std::size_t levels) {
  if (levels == 0) {
    throw LevelError("dwt2d: at least one level is required");
  }
  const std::size_t allowed = max_levels_2d(img.rows(), img.cols(), f);
  if (levels > allowed) {
    throw LevelError("dwt2d: " + std::to_string(levels) + " levels requested, image " +
                     dims(img.rows(), img.cols()) + " admits " + std::to_string(allowed));
  }
  ImagePyramid p;
  Plane running = img;
  for (std::size_t l = 0; l < levels; ++l) {
    auto q = dwt2d_step(running, f);
    p.levels.push_back(DetailTriple{std::move(q.h), std::move(q.v), std::move(q.d)});
    running = std::move(q.a);
  }
  p.approx = std::move(running);
  return p;
}

Plane idwt2d(const ImagePyramid& p, const FilterSpec& f) {
  if (p.levels.empty()) {
    throw ShapeError("idwt2d: pyramid has no levels");
  }
  Plane running = p.approx;
  for (std::size_t l = p.levels.size(); l-- > 0;) {
    const auto& t = p.levels[l];
    if (t.h.rows() != running.rows() || t.h.cols() != running.cols()) {
      throw ShapeError("idwt2d: level " + std::to_string(l + 1) + " details are " +
                       dims(t.h.rows(), t.h.cols()) + " but the average is " +
                       dims(running.rows(), running.cols()));
    }
    running = idwt2d_step(QuadDecomp{std::move(running), t.h, t.v, t.d}, f);
  }
  return running;
}

ImagePyramid quantize(const ImagePyramid& p, const Quantizer& q) {
  auto apply = [&](const Plane& src) {
    return Plane(src.unaryExpr([&](const Complex& c) { return q.apply(c); }));
  };
  ImagePyramid out;
  for (const auto& t : p.levels) {
    out.levels.push_back(DetailTriple{apply(t.h), apply(t.v), apply(t.d)});
  }
  out.approx = apply(p.approx);
  return out;
}

Pyramid1D quantize(const Pyramid1D& p, const Quantizer& q) {
  auto apply = [&](const Signal& src) {
    Signal out(src.size());
    std::transform(src.begin(), src.end(), out.begin(), [&](Complex c) { return q.apply(c); });
    return out;
  };
  Pyramid1D out;
  for (const auto& d : p.details) out.details.push_back(apply(d));
  out.approx = apply(p.approx);
  return out;
}

Plane quadrant_layout(const ImagePyramid& p) {
  if (p.levels.empty()) return p.approx;
  const auto& finest = p.levels.front();
  const auto r = finest.h.rows();
  const auto c = finest.h.cols();
  Plane out(2 * r, 2 * c);
  ImagePyramid coarser{{p.levels.begin() + 1, p.levels.end()}, p.approx};
  out.topLeftCorner(r, c) = quadrant_layout(coarser);
  out.topRightCorner(r, c) = finest.h;
  out.bottomLeftCorner(r, c) = finest.v;
  out.bottomRightCorner(r, c) = finest.d;
  return out;
}

}  // namespace wavekit
