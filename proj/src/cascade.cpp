// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/cascade.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "wavekit/errors.hpp"

namespace wavekit {
namespace {

constexpr double kEigenBucket = 1e-8;

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

double DyadicFunction::step() const noexcept { return std::ldexp(1.0, -level); }

double DyadicFunction::x(std::size_t k) const noexcept {
  return std::ldexp(static_cast<double>(first + static_cast<long long>(k)), -level);
}

Complex DyadicFunction::at_index(long long g) const noexcept {
  const long long i = g - first;
  if (i < 0 || i >= static_cast<long long>(values.size())) return {};
  return values[static_cast<std::size_t>(i)];
}

Complex DyadicFunction::at_dyadic(long long m, int m_level) const noexcept {
  if (m_level <= level) return at_index(m << (level - m_level));
  const long long scale = 1LL << (m_level - level);
  if (m % scale != 0) return {};
  return at_index(m / scale);
}

Complex DyadicFunction::interpolate(double xv) const noexcept {
  if (values.empty()) return {};
  const double t = std::ldexp(xv, level) - static_cast<double>(first);
  const double lo = std::floor(t);
  const auto i = static_cast<long long>(lo);
  const double frac = t - lo;
  const long long g = first + i;
  return (1.0 - frac) * at_index(g) + frac * at_index(g + 1);
}

Complex DyadicFunction::riemann_integral() const noexcept {
  Complex acc{};
  for (const auto& v : values) acc += v;
  return acc * step();
}

Eigen::MatrixXcd refinement_matrix(const FilterSpec& f) {
  const auto& h = f.h();
  const auto n = static_cast<Eigen::Index>(f.length()) - 1;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q < n; ++q) {
      t(p, q) = 2.0 * h.at(h.start() + static_cast<int>(2 * p - q));
    }
  }
  return t;
}

DyadicFunction integer_values(const FilterSpec& f) {
  if (f.length() < 2) {
    throw DegeneracyError("integer_values: a single-tap filter has no refinable integer values", 0);
  }
  const Eigen::MatrixXcd t = refinement_matrix(f);
  const auto n = t.rows();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(t, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("integer_values: eigen-decomposition did not converge");
  }
  std::size_t dimension = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(solver.eigenvalues()(i) - 1.0) < kEigenBucket) ++dimension;
  }
  if (dimension != 1) {
    throw DegeneracyError("integer_values: eigenvalue-1 eigenspace of the refinement matrix has "
                          "dimension " + std::to_string(dimension) + " (expected 1)",
                          dimension);
  }

  // (T − I) v = 0 together with Σ v = 1, solved in the least-squares sense.
  Eigen::MatrixXcd system(n + 1, n);
  system.topRows(n) = t - Eigen::MatrixXcd::Identity(n, n);
  system.row(n).setOnes();
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n + 1);
  rhs(n) = 1.0;
  const Eigen::VectorXcd v = system.colPivHouseholderQr().solve(rhs);
  if (!v.allFinite() || (system * v - rhs).cwiseAbs().maxCoeff() > 1e-8) {
    throw DegeneracyError("integer_values: eigenvector cannot be normalized to unit sum", 1);
  }

  DyadicFunction phi;
  phi.which = Which::phi;
  phi.level = 0;
  phi.first = f.start();
  phi.values.assign(f.length(), Complex{});
  const bool real = f.h().is_real();
  for (Eigen::Index i = 0; i < n; ++i) {
    phi.values[static_cast<std::size_t>(i)] = real ? Complex(v(i).real(), 0.0) : v(i);
  }
  return phi;
}

DyadicFunction refine(const DyadicFunction& phi, const FilterSpec& f) {
  const auto& h = f.h();
  DyadicFunction out;
  out.which = phi.which;
  out.level = phi.level + 1;
  out.first = 2 * phi.first;
  out.values.assign(phi.values.empty() ? 0 : 2 * phi.values.size() - 1, Complex{});
  const long long unit = 1LL << phi.level;  // one integer, in coarse grid units
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const long long g = out.first + static_cast<long long>(k);
    if (g % 2 == 0) {
      out.values[k] = phi.at_index(g / 2);
      continue;
    }
    // x = g / 2^(J+1), so 2x − i = (g − i 2^J) / 2^J.
    Complex acc{};
    for (int i = h.start(); i <= h.last(); ++i) {
      acc += h.at(i) * phi.at_index(g - i * unit);
    }
    out.values[k] = 2.0 * acc;
  }
  return out;
}

DyadicFunction scaling_function(const FilterSpec& f, int level) {
  if (level < 0) {
    throw ParameterError("scaling_function: resolution level must be >= 0");
  }
  auto phi = integer_values(f);
  for (int j = 0; j < level; ++j) phi = refine(phi, f);
  return phi;
}

DyadicFunction wavelet_from_phi(const DyadicFunction& phi_fine, const TapSequence& g) {
  // Level of the ψ grid is one below the φ table.
  const int level = phi_fine.level - 1;
  if (level < 0) {
    throw ParameterError("wavelet_from_phi: φ table must be at level >= 1");
  }
  const long long scale = 1LL << level;
  // ψ vanishes outside [(lo_φ + lo_g) / 2, (hi_φ + hi_g) / 2].
  const long long phi_lo = floor_div(phi_fine.first, 1LL << phi_fine.level);
  const long long phi_hi =
      ceil_div(phi_fine.first + static_cast<long long>(phi_fine.values.size()) - 1,
               1LL << phi_fine.level);
  const long long lo = ceil_div((phi_lo + g.start()) * scale, 2);
  const long long hi = floor_div((phi_hi + g.last()) * scale, 2);

  DyadicFunction psi;
  psi.which = Which::psi;
  psi.level = level;
  psi.first = lo;
  psi.values.assign(static_cast<std::size_t>(hi - lo + 1), Complex{});
  for (long long m = lo; m <= hi; ++m) {
    // 2x − i at x = m / 2^J is (2m − i 2^J) / 2^J.
    Complex acc{};
    for (int i = g.start(); i <= g.last(); ++i) {
      acc += g.at(i) * phi_fine.at_dyadic(2 * m - i * scale, level);
    }
    psi.values[static_cast<std::size_t>(m - lo)] = 2.0 * acc;
  }
  return psi;
}

DyadicFunction wavelet_function(const FilterSpec& f, int level) {
  if (level < 0) {
    throw ParameterError("wavelet_function: resolution level must be >= 0");
  }
  return wavelet_from_phi(scaling_function(f, level + 1), derive_highpass(f).g);
}

double scaling_identity_residual(const DyadicFunction& phi, const FilterSpec& f) {
  const auto& h = f.h();
  const long long unit = 1LL << phi.level;
  double worst = 0.0;
  for (std::size_t k = 0; k < phi.values.size(); ++k) {
    const long long g = phi.first + static_cast<long long>(k);
    Complex acc{};
    for (int i = h.start(); i <= h.last(); ++i) {
      acc += h.at(i) * phi.at_index(2 * g - i * unit);
    }
    worst = std::max(worst, std::abs(phi.values[k] - 2.0 * acc));
  }
  return worst;
}

Complex shifted_inner_product(const DyadicFunction& phi, int shift) {
  const long long offset = static_cast<long long>(shift) << phi.level;
  Complex acc{};
  for (std::size_t k = 0; k < phi.values.size(); ++k) {
    const long long g = phi.first + static_cast<long long>(k);
    acc += std::conj(phi.values[k]) * phi.at_index(g - offset);
  }
  return acc * phi.step();
}

}  // namespace wavekit
