// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wavekit/filters.hpp"
#include "wavekit/subband.hpp"

namespace wavekit {

/// Image or coefficient plane. Row index is y, column index is x.
using Plane = Eigen::MatrixXcd;

/// One level of the separable transform, each quadrant N/2 × M/2.
///   a: low-pass in x and y
///   h: high-pass in x (along rows), low-pass in y
///   v: low-pass in x, high-pass in y (along columns)
///   d: high-pass in both
struct QuadDecomp {
  Plane a, h, v, d;
};

struct DetailTriple {
  Plane h, v, d;
};

/// levels[0] is the finest level; approx is the last running average.
struct ImagePyramid {
  std::vector<DetailTriple> levels;
  Plane approx;

  std::size_t level_count() const noexcept { return levels.size(); }
  std::size_t coefficient_count() const noexcept;
};

class Quantizer {
 public:
  /// ParameterError unless step > 0.
  explicit Quantizer(double step);
  double step() const noexcept { return step_; }
  /// round(c/Δ)·Δ on real and imaginary parts, halves away from zero.
  Complex apply(Complex c) const noexcept;

 private:
  double step_;
};

/// Rows first, then columns, each with the 1D analysis kernels.
QuadDecomp dwt2d_step(const Plane& img, const FilterSpec& f);

Plane idwt2d_step(const QuadDecomp& q, const FilterSpec& f);

/// Largest level count dwt2d accepts: every transformed level needs both
/// dimensions even and at least the filter length.
std::size_t max_levels_2d(Eigen::Index rows, Eigen::Index cols, const FilterSpec& f);

ImagePyramid dwt2d(const Plane& img, const FilterSpec& f, std::size_t levels);

Plane idwt2d(const ImagePyramid& p, const FilterSpec& f);

ImagePyramid quantize(const ImagePyramid& p, const Quantizer& q);
Pyramid1D quantize(const Pyramid1D& p, const Quantizer& q);

double energy(const Plane& p);

/// Coefficients of one level assembled as a/h over v/d, with a replaced by
/// the nested layout of coarser levels. Same size as the source image.
Plane quadrant_layout(const ImagePyramid& p);

}  // namespace wavekit
