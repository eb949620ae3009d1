// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace wavekit {

using Complex = std::complex<double>;

/// A finitely supported coefficient sequence c_k, k = start .. start+size-1.
///
/// Both the low-pass filter h and its derived high-pass g are stored this
/// way; the explicit start index matters because deriving g reflects the
/// support of h about 1/2.
class TapSequence {
 public:
  TapSequence() = default;
  TapSequence(int start, std::vector<Complex> taps);

  int start() const noexcept { return start_; }
  int last() const noexcept { return start_ + static_cast<int>(taps_.size()) - 1; }
  std::size_t size() const noexcept { return taps_.size(); }
  std::span<const Complex> taps() const noexcept { return taps_; }

  /// Coefficient at integer index k; zero outside the support.
  Complex at(int k) const noexcept {
    const int i = k - start_;
    return (i < 0 || i >= static_cast<int>(taps_.size())) ? Complex{} : taps_[i];
  }

  Complex sum() const noexcept;
  bool is_real() const noexcept;

  friend bool operator==(const TapSequence&, const TapSequence&) = default;

 private:
  int start_ = 0;
  std::vector<Complex> taps_;
};

/// Low-pass subband filter h with Σh = 1 when flagged normalized.
class FilterSpec {
 public:
  /// Throws ParameterError for an empty or all-zero tap list, or when
  /// `normalized` is set and |Σh − 1| > 1e-12.
  FilterSpec(std::string name, int start, std::vector<Complex> taps,
             bool normalized = true);

  const std::string& name() const noexcept { return name_; }
  const TapSequence& h() const noexcept { return h_; }
  int start() const noexcept { return h_.start(); }
  std::size_t length() const noexcept { return h_.size(); }
  bool normalized() const noexcept { return normalized_; }

 private:
  std::string name_;
  TapSequence h_;
  bool normalized_;
};

/// High-pass companion g_k = (-1)^k conj(h_{1-k}).
struct DerivedFilter {
  TapSequence g;
};

struct QmfReport {
  /// (lag k, r_k) for every lag with overlapping support, k >= 0 then k < 0.
  std::vector<std::pair<int, Complex>> residuals;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class Band { low, high };

/// Names accepted by builtin_filter().
std::vector<std::string> builtin_filter_names();

/// haar, db4 or stretched_haar; CatalogError otherwise.
FilterSpec builtin_filter(const std::string& name);

DerivedFilter derive_highpass(const FilterSpec& f);

/// Reflection applied to an arbitrary tap sequence. Applying it twice
/// returns the negated input.
TapSequence reflect_highpass(const TapSequence& h);

/// Residuals r_k = Σ_i conj(h_i) h_{i+2k} − ½δ_{0,k}. Requires tol > 0.
QmfReport qmf_check(const FilterSpec& f, double tol);

/// m0(z) = Σ h_k z^k or m1(z) = Σ g_k z^k. DomainError if ||z| − 1| > 1e-9.
Complex symbol_eval(const FilterSpec& f, Band which, Complex z);

/// Σ c_k z^k for any tap sequence, no domain restriction.
Complex laurent_eval(const TapSequence& c, Complex z);

}  // namespace wavekit
