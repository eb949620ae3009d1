// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wavekit/filters.hpp"

namespace wavekit {

enum class Which { phi, psi };

/// Samples of φ or ψ at x_k = (first + k) / 2^level, k = 0 .. size-1.
/// Values outside the sampled range are zero.
struct DyadicFunction {
  Which which = Which::phi;
  int level = 0;
  long long first = 0;
  std::vector<Complex> values;

  double step() const noexcept;
  double x(std::size_t k) const noexcept;
  double x_begin() const noexcept { return x(0); }
  double x_end() const noexcept { return x(values.size() - 1); }
  /// Value at grid index g (in units of 2^-level); zero off the stored range.
  Complex at_index(long long g) const noexcept;
  /// Value at the dyadic point m / 2^m_level, m_level <= level.
  Complex at_dyadic(long long m, int m_level) const noexcept;
  /// Piecewise-linear interpolation between grid points.
  Complex interpolate(double x) const noexcept;
  /// Σ values · 2^-level.
  Complex riemann_integral() const noexcept;
};

/// T_{p,q} = 2 h_{2p−q} over the integer points p, q of the half-open
/// support [start, start + L − 1).
Eigen::MatrixXcd refinement_matrix(const FilterSpec& f);

/// φ at the integers start .. start+L−1 (right endpoint is 0), normalized so
/// Σ_k φ(k) = 1. DegeneracyError when the eigenvalue-1 eigenspace does not
/// have dimension one.
DyadicFunction integer_values(const FilterSpec& f);

/// One step of φ(x) = 2 Σ h_i φ(2x − i); existing grid points are copied.
DyadicFunction refine(const DyadicFunction& phi, const FilterSpec& f);

/// integer_values followed by `level` refinements. ParameterError if level < 0.
DyadicFunction scaling_function(const FilterSpec& f, int level);

/// ψ(x) = 2 Σ g_i φ(2x − i) on the level grid, from φ at level + 1.
DyadicFunction wavelet_function(const FilterSpec& f, int level);

/// The same identity applied to a supplied φ table (used by wavelet_function).
DyadicFunction wavelet_from_phi(const DyadicFunction& phi_fine, const TapSequence& g);

/// max over the grid of |φ(x) − 2 Σ h_i φ(2x − i)|.
double scaling_identity_residual(const DyadicFunction& phi, const FilterSpec& f);

/// ⟨φ | φ(· − shift)⟩ as a Riemann sum over the grid.
Complex shifted_inner_product(const DyadicFunction& phi, int shift);

}  // namespace wavekit
