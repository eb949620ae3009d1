// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/subband.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wavekit/errors.hpp"

namespace wavekit {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::size_t wrap(long long i, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

void check_analysable(std::size_t n, const FilterSpec& f, const char* who) {
  if (n < 2 || n % 2 != 0) {
    throw SizeError(std::string(who) + ": signal length " + std::to_string(n) +
                    " must be even and >= 2");
  }
  if (n < f.length()) {
    throw SizeError(std::string(who) + ": signal length " + std::to_string(n) +
                    " is shorter than the filter (" + std::to_string(f.length()) + ")");
  }
}

Signal analyse_band(std::span<const Complex> x, const TapSequence& c, double gain) {
  const std::size_t n = x.size();
  Signal out(n / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Complex acc{};
    for (int k = c.start(); k <= c.last(); ++k) {
      acc += std::conj(c.at(k)) * x[wrap(2 * static_cast<long long>(i) + k, n)];
    }
    out[i] = gain * acc;
  }
  return out;
}

void synthesise_band(std::span<const Complex> y, const TapSequence& c, double gain, Signal& x) {
  const std::size_t n = x.size();
  for (std::size_t j = 0; j < y.size(); ++j) {
    for (int k = c.start(); k <= c.last(); ++k) {
      x[wrap(2 * static_cast<long long>(j) + k, n)] += gain * c.at(k) * y[j];
    }
  }
}

const TapSequence& band_taps(const FilterSpec& f, const DerivedFilter& d, Band band) {
  return band == Band::low ? f.h() : d.g;
}

}  // namespace

std::size_t Pyramid1D::coefficient_count() const noexcept {
  std::size_t total = approx.size();
  for (const auto& d : details) total += d.size();
  return total;
}

double energy(std::span<const Complex> x) {
  double e = 0.0;
  for (const auto& v : x) e += std::norm(v);
  return e;
}

SubbandPair analysis_step(std::span<const Complex> x, const FilterSpec& f) {
  return detail::analysis_with_gain(x, f, kSqrt2);
}

Signal synthesis_step(const SubbandPair& p, const FilterSpec& f) {
  return detail::synthesis_with_gain(p, f, kSqrt2);
}

namespace detail {

SubbandPair analysis_with_gain(std::span<const Complex> x, const FilterSpec& f, double gain) {
  check_analysable(x.size(), f, "analysis_step");
  const auto g = derive_highpass(f).g;
  return SubbandPair{analyse_band(x, f.h(), gain), analyse_band(x, g, gain)};
}

Signal synthesis_with_gain(const SubbandPair& p, const FilterSpec& f, double gain) {
  if (p.y.size() != p.z.size()) {
    throw SizeError("synthesis_step: average and detail lengths differ (" +
                    std::to_string(p.y.size()) + " vs " + std::to_string(p.z.size()) + ")");
  }
  const std::size_t n = 2 * p.y.size();
  if (n == 0 || n < f.length()) {
    throw SizeError("synthesis_step: output length " + std::to_string(n) +
                    " is shorter than the filter");
  }
  Signal x(n);
  synthesise_band(p.y, f.h(), gain, x);
  synthesise_band(p.z, derive_highpass(f).g, gain, x);
  return x;
}

}  // namespace detail

std::size_t max_levels_1d(std::size_t n, const FilterSpec& f) {
  const std::size_t floor_len = std::max<std::size_t>(f.length(), 2);
  std::size_t levels = 0;
  std::size_t len = n;
  while (len % 2 == 0 && len >= f.length() && len / 2 >= floor_len) {
    len /= 2;
    ++levels;
  }
  return levels;
}

Pyramid1D dwt1d(std::span<const Complex> x, const FilterSpec& f, std::size_t levels) {
  if (levels == 0) {
    throw LevelError("dwt1d: at least one level is required");
  }
  const std::size_t allowed = max_levels_1d(x.size(), f);
  if (levels > allowed) {
    throw LevelError("dwt1d: " + std::to_string(levels) + " levels requested, length " +
                     std::to_string(x.size()) + " with a " + std::to_string(f.length()) +
                     "-tap filter admits " + std::to_string(allowed));
  }
  Pyramid1D p;
  Signal running(x.begin(), x.end());
  for (std::size_t l = 0; l < levels; ++l) {
    auto step = analysis_step(running, f);
    p.details.push_back(std::move(step.z));
    running = std::move(step.y);
  }
  p.approx = std::move(running);
  return p;
}

Signal idwt1d(const Pyramid1D& p, const FilterSpec& f) {
  if (p.details.empty()) {
    throw ShapeError("idwt1d: pyramid has no levels");
  }
  Signal running = p.approx;
  for (std::size_t l = p.details.size(); l-- > 0;) {
    if (p.details[l].size() != running.size()) {
      throw ShapeError("idwt1d: level " + std::to_string(l + 1) + " detail length " +
                       std::to_string(p.details[l].size()) + " does not match average length " +
                       std::to_string(running.size()));
    }
    running = synthesis_step(SubbandPair{std::move(running), p.details[l]}, f);
  }
  return running;
}

Eigen::MatrixXcd slanted_synthesis_matrix(const FilterSpec& f, Band band, std::size_t n) {
  const auto d = derive_highpass(f);
  const auto& c = band_taps(f, d, band);
  const auto half = static_cast<Eigen::Index>(n / 2);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), half);
  for (Eigen::Index j = 0; j < half; ++j) {
    for (int k = c.start(); k <= c.last(); ++k) {
      s(static_cast<Eigen::Index>(wrap(2 * j + k, n)), j) += kSqrt2 * c.at(k);
    }
  }
  return s;
}

Eigen::MatrixXcd slanted_analysis_matrix(const FilterSpec& f, Band band, std::size_t n) {
  const auto d = derive_highpass(f);
  const auto& c = band_taps(f, d, band);
  const auto half = static_cast<Eigen::Index>(n / 2);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(half, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < half; ++i) {
    for (int k = c.start(); k <= c.last(); ++k) {
      a(i, static_cast<Eigen::Index>(wrap(2 * i + k, n))) += kSqrt2 * std::conj(c.at(k));
    }
  }
  return a;
}

CuntzReport cuntz_check(const FilterSpec& f, std::size_t n, double tol) {
  if (n % 2 != 0 || n < 2 * f.length()) {
    throw SizeError("cuntz_check: n = " + std::to_string(n) +
                    " must be even and at least twice the filter length");
  }
  if (!(tol > 0.0)) {
    throw ParameterError("cuntz_check: tolerance must be positive");
  }
  const Eigen::MatrixXcd s0 = slanted_synthesis_matrix(f, Band::low, n);
  const Eigen::MatrixXcd s1 = slanted_synthesis_matrix(f, Band::high, n);
  const Eigen::MatrixXcd f0 = slanted_analysis_matrix(f, Band::low, n);
  const Eigen::MatrixXcd f1 = slanted_analysis_matrix(f, Band::high, n);

  const auto half = static_cast<Eigen::Index>(n / 2);
  const Eigen::MatrixXcd id_half = Eigen::MatrixXcd::Identity(half, half);
  const Eigen::MatrixXcd zero_half = Eigen::MatrixXcd::Zero(half, half);

  CuntzReport r;
  r.n = n;
  r.tolerance = tol;
  r.isometry_deviation = std::max({(f0 * s0 - id_half).cwiseAbs().maxCoeff(),
                                   (f1 * s1 - id_half).cwiseAbs().maxCoeff(),
                                   (f0 * s1 - zero_half).cwiseAbs().maxCoeff(),
                                   (f1 * s0 - zero_half).cwiseAbs().maxCoeff()});
  const auto nn = static_cast<Eigen::Index>(n);
  r.resolution_deviation =
      (s0 * f0 + s1 * f1 - Eigen::MatrixXcd::Identity(nn, nn)).cwiseAbs().maxCoeff();
  r.max_deviation = std::max(r.isometry_deviation, r.resolution_deviation);
  r.pass = r.max_deviation <= tol;
  return r;
}

}  // namespace wavekit
