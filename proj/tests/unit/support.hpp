// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <random>
#include <vector>

#include "wavekit/image2d.hpp"
#include "wavekit/subband.hpp"

namespace wavekit::testing {

inline Signal random_signal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  Signal s(n);
  for (auto& v : s) v = Complex(d(rng), d(rng));
  return s;
}

inline Plane random_plane(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> d;
  Plane p(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) p(i, j) = Complex(d(rng), d(rng));
  return p;
}

inline double max_abs_diff(const Signal& a, const Signal& b) {
  double m = a.size() == b.size() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const Plane& a, const Plane& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

inline Plane plane(std::initializer_list<std::initializer_list<double>> rows) {
  Plane p(static_cast<Eigen::Index>(rows.size()),
          static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) p(i, j++) = v;
    ++i;
  }
  return p;
}

}  // namespace wavekit::testing
