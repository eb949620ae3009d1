// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wavekit/filters.hpp"

namespace wavekit {

/// Complex samples at x_i = x_min + i·dx.
struct SampledFunction {
  double x_min = 0.0;
  double dx = 1.0;
  std::vector<Complex> values;

  std::size_t size() const noexcept { return values.size(); }
  double x(std::size_t i) const noexcept { return x_min + static_cast<double>(i) * dx; }
  double x_max() const noexcept { return x(values.empty() ? 0 : values.size() - 1); }
};

/// Samples `fn` at n points starting at x_min. ParameterError if dx <= 0.
SampledFunction sample(const std::function<Complex(double)>& fn, double x_min, double dx,
                       std::size_t n);

/// Trapezoidal ⟨a | b⟩; both functions must share the same grid.
Complex inner_product(const SampledFunction& a, const SampledFunction& b);
double l2_norm(const SampledFunction& f);

/// Constants of the admissibility integral, split by frequency sign.
struct Admissibility {
  double c_psi = 0.0;       // ∫ |ψ̂(ω)|² / |ω| dω over all ω
  double c_positive = 0.0;  // ω > 0 half
  double c_negative = 0.0;  // ω < 0 half
  double dx = 0.0;
  std::size_t fft_size = 0;
};

/// Analyzing wavelet ψ: closed form or a tabulated function with linear
/// interpolation between samples.
class AnalyzingWavelet {
 public:
  static AnalyzingWavelet mexican_hat();
  /// +1 on [0, ½), −1 on [½, 1).
  static AnalyzingWavelet haar();
  /// exp(−x²/2); not admissible, kept for diagnostics.
  static AnalyzingWavelet gaussian();
  /// ψ from the cascade algorithm at the given resolution level.
  static AnalyzingWavelet cascade(const FilterSpec& f, int level);
  static AnalyzingWavelet tabulated(std::string name, SampledFunction samples);

  const std::string& name() const noexcept { return name_; }
  Complex operator()(double x) const { return eval_(x); }
  /// Effective support: |ψ| < 1e-10·max outside it.
  double support_lo() const noexcept { return lo_; }
  double support_hi() const noexcept { return hi_; }
  double support_width() const noexcept { return hi_ - lo_; }
  /// Sample spacing used by admissibility() when none is given.
  double default_step() const noexcept { return step_; }
  bool is_real() const noexcept { return real_; }

  const std::optional<Admissibility>& admissibility() const noexcept { return admissibility_; }
  void set_admissibility(Admissibility a) { admissibility_ = a; }

 private:
  AnalyzingWavelet(std::string name, std::function<Complex(double)> eval, double lo, double hi,
                   double step, bool real);

  std::string name_;
  std::function<Complex(double)> eval_;
  double lo_;
  double hi_;
  double step_;
  bool real_;
  std::optional<Admissibility> admissibility_;
};

/// "mexican_hat", "haar", "gaussian" or "cascade:<filter>:<J>" with a
/// builtin filter. CatalogError / ParameterError on bad specs.
AnalyzingWavelet wavelet_by_name(const std::string& spec);

/// Samples ψ at spacing dx (default: ψ.default_step()), zero-pads, takes the
/// DFT and integrates |ψ̂(ω)|²/|ω| with the trapezoidal rule, skipping ω = 0.
/// AdmissibilityError when |∫ψ| > 1e-6·‖ψ‖₁; ResolutionError when more than
/// 1e-3 of the integral sits in the upper half of the frequency band.
Admissibility admissibility(const AnalyzingWavelet& psi, std::optional<double> dx = {});

/// Copy of ψ with the admissibility constant attached.
AnalyzingWavelet with_admissibility(AnalyzingWavelet psi);

/// Scale/shift sampling of the (r, s) half plane, r > 0.
struct CwtGrid {
  std::vector<double> scales;
  std::vector<double> shifts;

  /// Geometric scales with `voices` per octave from r_min up to r_max.
  static CwtGrid geometric(double r_min, double r_max, int voices,
                           std::vector<double> shifts);
  /// `count` geometric scales spanning [r_min, r_max] inclusive.
  static CwtGrid log_spaced(double r_min, double r_max, std::size_t count,
                            std::vector<double> shifts);
  static std::vector<double> linear(double a, double b, std::size_t count);

  /// ParameterError unless both axes are nonempty and every r > 0.
  void validate() const;
};

/// ⟨ψ_{r,s} | f⟩ for r = scales[i], s = shifts[j] stored at (i, j).
struct CwtCoefficients {
  CwtGrid grid;
  Eigen::MatrixXcd c;
  double x_min = 0.0;
  double dx = 1.0;
  std::size_t samples = 0;
};

/// ψ_{r,s}(x) = r^{-1/2} ψ((x − s)/r).
Complex scaled_wavelet(const AnalyzingWavelet& psi, double r, double s, double x);

/// Trapezoidal inner products with ψ_{r,s} over the grid of f.
/// ResolutionError when ψ_{r,s} spans fewer than 4 samples of f.
CwtCoefficients cwt(const SampledFunction& f, const AnalyzingWavelet& psi, const CwtGrid& grid);

/// Double trapezoidal sum of c(r,s) ψ_{r,s}(x) dr ds / r² over the grid,
/// divided by the positive-frequency admissibility constant. The grid only
/// covers r > 0, which carries half of C_ψ for wavelets whose spectrum
/// modulus is even. AdmissibilityError if ψ carries no constant or its
/// spectrum is lopsided.
SampledFunction icwt(const CwtCoefficients& c, const AnalyzingWavelet& psi);

/// ψ_{j,k}(x) = 2^{j/2} ψ(2^j x − k) sampled at x_min + i·dx.
SampledFunction dyadic_sample(const AnalyzingWavelet& psi, int j, long long k, double x_min,
                              double dx, std::size_t n);

/// Inclusive k range, or empty to cover the support of f at every j.
struct ShiftRange {
  long long first;
  long long last;
};

/// Σ_{j,k} |⟨ψ_{j,k}|f⟩|² / ‖f‖² with Riemann-sum inner products.
/// Returns 0 for an empty j range; DomainError when ‖f‖ = 0.
double parseval_ratio(const SampledFunction& f, const AnalyzingWavelet& psi, int j_first,
                      int j_last, std::optional<ShiftRange> k_range = std::nullopt);

}  // namespace wavekit
