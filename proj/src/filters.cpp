// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wavekit/errors.hpp"

namespace wavekit {

TapSequence::TapSequence(int start, std::vector<Complex> taps)
    : start_(start), taps_(std::move(taps)) {}

Complex TapSequence::sum() const noexcept {
  return std::accumulate(taps_.begin(), taps_.end(), Complex{});
}

bool TapSequence::is_real() const noexcept {
  return std::all_of(taps_.begin(), taps_.end(),
                     [](const Complex& c) { return c.imag() == 0.0; });
}

FilterSpec::FilterSpec(std::string name, int start, std::vector<Complex> taps,
                       bool normalized)
    : name_(std::move(name)), h_(start, std::move(taps)), normalized_(normalized) {
  if (h_.size() == 0) {
    throw ParameterError("filter '" + name_ + "' has no coefficients");
  }
  const auto taps_view = h_.taps();
  if (std::all_of(taps_view.begin(), taps_view.end(),
                  [](const Complex& c) { return c == Complex{}; })) {
    throw ParameterError("filter '" + name_ + "' is identically zero");
  }
  if (normalized_ && std::abs(h_.sum() - 1.0) > 1e-12) {
    throw ParameterError("filter '" + name_ + "' is flagged normalized but sum(h) != 1");
  }
}

std::vector<std::string> builtin_filter_names() {
  return {"haar", "db4", "stretched_haar"};
}

FilterSpec builtin_filter(const std::string& name) {
  if (name == "haar") {
    return FilterSpec(name, 0, {0.5, 0.5});
  }
  if (name == "stretched_haar") {
    return FilterSpec(name, 0, {0.5, 0.0, 0.0, 0.5});
  }
  if (name == "db4") {
    const double s3 = std::sqrt(3.0);
    return FilterSpec(name, 0,
                      {(1.0 + s3) / 8.0, (3.0 + s3) / 8.0, (3.0 - s3) / 8.0,
                       (1.0 - s3) / 8.0});
  }
  throw CatalogError("unknown filter '" + name + "' (known: haar, db4, stretched_haar)");
}

TapSequence reflect_highpass(const TapSequence& h) {
  // g_k = (-1)^k conj(h_{1-k}); support [1 - last, 1 - start].
  const int g_start = 1 - h.last();
  std::vector<Complex> g(h.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int k = g_start + static_cast<int>(i);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    g[i] = sign * std::conj(h.at(1 - k));
  }
  return TapSequence(g_start, std::move(g));
}

DerivedFilter derive_highpass(const FilterSpec& f) {
  return DerivedFilter{reflect_highpass(f.h())};
}

QmfReport qmf_check(const FilterSpec& f, double tol) {
  if (!(tol > 0.0)) {
    throw ParameterError("qmf_check: tolerance must be positive");
  }
  const auto& h = f.h();
  const int span = static_cast<int>(h.size()) - 1;
  QmfReport report;
  report.tolerance = tol;
  // Lags with overlapping support satisfy |2k| <= L - 1.
  const int max_lag = span / 2;
  auto residual = [&](int k) {
    Complex acc{};
    for (int i = h.start(); i <= h.last(); ++i) {
      acc += std::conj(h.at(i)) * h.at(i + 2 * k);
    }
    if (k == 0) acc -= 0.5;
    return acc;
  };
  for (int k = 0; k <= max_lag; ++k) report.residuals.emplace_back(k, residual(k));
  for (int k = -1; k >= -max_lag; --k) report.residuals.emplace_back(k, residual(k));
  for (const auto& [lag, r] : report.residuals) {
    report.max_residual = std::max(report.max_residual, std::abs(r));
  }
  report.pass = report.max_residual <= tol;
  return report;
}

Complex laurent_eval(const TapSequence& c, Complex z) {
  // Horner over the taps, then shift by z^start.
  Complex acc{};
  const auto taps = c.taps();
  for (auto it = taps.rbegin(); it != taps.rend(); ++it) acc = acc * z + *it;
  return acc * std::pow(z, c.start());
}

Complex symbol_eval(const FilterSpec& f, Band which, Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9) {
    throw DomainError("symbol_eval: z must lie on the unit circle");
  }
  return which == Band::low ? laurent_eval(f.h(), z)
                            : laurent_eval(derive_highpass(f).g, z);
}

}  // namespace wavekit
