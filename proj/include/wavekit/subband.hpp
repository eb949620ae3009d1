// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "wavekit/filters.hpp"

namespace wavekit {

/// Finite periodic sequence; index arithmetic is taken mod size().
using Signal = std::vector<Complex>;

/// Averages y and local differences z produced by one analysis step.
struct SubbandPair {
  Signal y;
  Signal z;
};

/// Multi-level 1D decomposition: details[0] is the finest level.
struct Pyramid1D {
  std::vector<Signal> details;
  Signal approx;

  std::size_t levels() const noexcept { return details.size(); }
  std::size_t coefficient_count() const noexcept;
};

struct CuntzReport {
  std::size_t n = 0;
  double isometry_deviation = 0.0;    // max |F_i S_j − δ_ij I|
  double resolution_deviation = 0.0;  // max |S_0 F_0 + S_1 F_1 − I|
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// y_i = √2 Σ_j conj(h_{j−2i}) x_j and z_i likewise with g. SizeError when
/// x has odd length or is shorter than the filter.
SubbandPair analysis_step(std::span<const Complex> x, const FilterSpec& f);

/// x_i = √2 Σ_j (h_{i−2j} y_j + g_{i−2j} z_j). SizeError on mismatched halves.
Signal synthesis_step(const SubbandPair& p, const FilterSpec& f);

/// Largest level count dwt1d accepts for a length-n signal.
std::size_t max_levels_1d(std::size_t n, const FilterSpec& f);

/// Iterated analysis on the running average. Every analysed length must be
/// even and the final average length at least max(L, 2); LevelError
/// otherwise.
Pyramid1D dwt1d(std::span<const Complex> x, const FilterSpec& f, std::size_t levels);

/// ShapeError when detail lengths do not halve level by level.
Signal idwt1d(const Pyramid1D& p, const FilterSpec& f);

/// Dense n × n/2 periodic matrix of S_0 (band = low) or S_1 (band = high).
Eigen::MatrixXcd slanted_synthesis_matrix(const FilterSpec& f, Band band, std::size_t n);

/// Dense n/2 × n periodic matrix of F_0 or F_1, assembled directly from the
/// analysis formula rather than by transposing.
Eigen::MatrixXcd slanted_analysis_matrix(const FilterSpec& f, Band band, std::size_t n);

/// Materializes S_i and F_i for an n-periodic signal and checks
/// F_i S_j = δ_ij I and S_0 F_0 + S_1 F_1 = I. Requires n even and n >= 2L.
CuntzReport cuntz_check(const FilterSpec& f, std::size_t n, double tol);

double energy(std::span<const Complex> x);

namespace detail {
// The kernels behind analysis_step/synthesis_step with the √2 replaced by
// `gain`. Separable 2D passes use gains 1 and 2 so the product stays exact.
SubbandPair analysis_with_gain(std::span<const Complex> x, const FilterSpec& f, double gain);
Signal synthesis_with_gain(const SubbandPair& p, const FilterSpec& f, double gain);
}  // namespace detail

}  // namespace wavekit
