// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/cwt.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "wavekit/cascade.hpp"
#include "wavekit/errors.hpp"

namespace wavekit {
namespace {

constexpr double kSupportCutoff = 1e-10;
constexpr double kMeanTolerance = 1e-6;
constexpr double kTailFraction = 1e-3;
constexpr std::size_t kSamplesPerSupport = 1024;
constexpr std::size_t kPadFactor = 16;

double mexican_hat_value(double x) { return (1.0 - x * x) * std::exp(-0.5 * x * x); }

// Smallest x > 1 beyond which |(1 − x²) e^{−x²/2}| stays under the cutoff.
double mexican_hat_reach() {
  double lo = 2.0, hi = 20.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::abs(mexican_hat_value(mid)) > kSupportCutoff ? lo : hi) = mid;
  }
  return hi;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Trapezoid weights for an arbitrary increasing abscissa.
std::vector<double> trapezoid_weights(const std::vector<double>& t) {
  std::vector<double> w(t.size(), 0.0);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double half = 0.5 * (t[i + 1] - t[i]);
    w[i] += half;
    w[i + 1] += half;
  }
  return w;
}

// Index window [first, last] of grid points within [a, b], clamped to the grid.
std::pair<long long, long long> index_window(double a, double b, double x_min, double dx,
                                             std::size_t n) {
  auto first = static_cast<long long>(std::floor((a - x_min) / dx)) - 1;
  auto last = static_cast<long long>(std::ceil((b - x_min) / dx)) + 1;
  first = std::max(first, 0LL);
  last = std::min(last, static_cast<long long>(n) - 1);
  return {first, last};
}

}  // namespace

SampledFunction sample(const std::function<Complex(double)>& fn, double x_min, double dx,
                       std::size_t n) {
  if (!(dx > 0.0)) throw ParameterError("sample: dx must be positive");
  SampledFunction f{x_min, dx, std::vector<Complex>(n)};
  for (std::size_t i = 0; i < n; ++i) f.values[i] = fn(f.x(i));
  return f;
}

Complex inner_product(const SampledFunction& a, const SampledFunction& b) {
  if (a.size() != b.size() || a.x_min != b.x_min || a.dx != b.dx) {
    throw ShapeError("inner_product: functions live on different grids");
  }
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 : 1.0;
    acc += w * std::conj(a.values[i]) * b.values[i];
  }
  return acc * a.dx;
}

double l2_norm(const SampledFunction& f) { return std::sqrt(std::abs(inner_product(f, f))); }

AnalyzingWavelet::AnalyzingWavelet(std::string name, std::function<Complex(double)> eval,
                                   double lo, double hi, double step, bool real)
    : name_(std::move(name)), eval_(std::move(eval)), lo_(lo), hi_(hi), step_(step), real_(real) {}

AnalyzingWavelet AnalyzingWavelet::mexican_hat() {
  static const double reach = mexican_hat_reach();
  return AnalyzingWavelet(
      "mexican_hat", [](double x) { return Complex(mexican_hat_value(x), 0.0); }, -reach, reach,
      2.0 * reach / kSamplesPerSupport, true);
}

AnalyzingWavelet AnalyzingWavelet::haar() {
  return AnalyzingWavelet(
      "haar",
      [](double x) {
        if (x >= 0.0 && x < 0.5) return Complex(1.0, 0.0);
        if (x >= 0.5 && x < 1.0) return Complex(-1.0, 0.0);
        return Complex{};
      },
      0.0, 1.0, 1.0 / kSamplesPerSupport, true);
}

AnalyzingWavelet AnalyzingWavelet::gaussian() {
  const double reach = std::sqrt(-2.0 * std::log(kSupportCutoff));
  return AnalyzingWavelet(
      "gaussian", [](double x) { return Complex(std::exp(-0.5 * x * x), 0.0); }, -reach, reach,
      2.0 * reach / kSamplesPerSupport, true);
}

AnalyzingWavelet AnalyzingWavelet::cascade(const FilterSpec& f, int level) {
  const auto psi = wavelet_function(f, level);
  SampledFunction s{psi.x_begin(), psi.step(), psi.values};
  return tabulated("cascade:" + f.name() + ":" + std::to_string(level), std::move(s));
}

AnalyzingWavelet AnalyzingWavelet::tabulated(std::string name, SampledFunction samples) {
  if (samples.size() < 2 || !(samples.dx > 0.0)) {
    throw ParameterError("tabulated wavelet needs at least two samples and dx > 0");
  }
  const bool real = std::all_of(samples.values.begin(), samples.values.end(),
                                [](const Complex& c) { return c.imag() == 0.0; });
  const double lo = samples.x_min;
  const double hi = samples.x_max();
  const double step = samples.dx;
  auto table = std::make_shared<const SampledFunction>(std::move(samples));
  return AnalyzingWavelet(
      std::move(name),
      [table](double x) {
        const double t = (x - table->x_min) / table->dx;
        if (!(t >= 0.0) || t > static_cast<double>(table->size() - 1)) return Complex{};
        const auto i = static_cast<std::size_t>(t);
        if (i + 1 >= table->size()) return table->values.back();
        const double frac = t - static_cast<double>(i);
        return (1.0 - frac) * table->values[i] + frac * table->values[i + 1];
      },
      lo, hi, step, real);
}

AnalyzingWavelet wavelet_by_name(const std::string& spec) {
  if (spec == "mexican_hat") return AnalyzingWavelet::mexican_hat();
  if (spec == "haar") return AnalyzingWavelet::haar();
  if (spec == "gaussian") return AnalyzingWavelet::gaussian();
  if (spec.rfind("cascade:", 0) == 0) {
    const auto rest = spec.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ParameterError("wavelet spec '" + spec + "' must be cascade:<filter>:<J>");
    }
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(rest.substr(colon + 1), &used);
      if (used != rest.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParameterError("wavelet spec '" + spec + "' has a malformed level");
    }
    return AnalyzingWavelet::cascade(builtin_filter(rest.substr(0, colon)), level);
  }
  throw CatalogError("unknown wavelet '" + spec +
                     "' (known: mexican_hat, haar, gaussian, cascade:<filter>:<J>)");
}

Admissibility admissibility(const AnalyzingWavelet& psi, std::optional<double> dx_opt) {
  const double dx = dx_opt.value_or(psi.default_step());
  if (!(dx > 0.0)) throw ParameterError("admissibility: dx must be positive");
  const auto n = static_cast<std::size_t>(std::floor(psi.support_width() / dx + 1e-9)) + 1;

  std::vector<Complex> samples(n);
  Complex mean{};
  double l1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = psi(psi.support_lo() + static_cast<double>(i) * dx);
    mean += samples[i];
    l1 += std::abs(samples[i]);
  }
  if (std::abs(mean) > kMeanTolerance * l1) {
    throw AdmissibilityError("admissibility: '" + psi.name() +
                             "' does not have zero mean, C_psi diverges at omega = 0");
  }

  const std::size_t m = next_pow2(kPadFactor * n);
  samples.resize(m, Complex{});
  Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, samples);

  // Bins k and k − m share |ψ̂|; the translation phase drops out of |ψ̂|².
  const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(m) * dx);
  const double nyquist = std::numbers::pi / dx;
  Admissibility a;
  a.dx = dx;
  a.fft_size = m;
  double tail = 0.0;
  for (std::size_t k = 1; k < m; ++k) {
    const bool negative = k > m / 2;
    const double omega = negative ? -static_cast<double>(m - k) * d_omega
                                  : static_cast<double>(k) * d_omega;
    const double mag2 = std::norm(spectrum[k] * dx);
    const double term = mag2 / std::abs(omega) * d_omega;
    if (k == m / 2) {
      a.c_positive += 0.5 * term;
      a.c_negative += 0.5 * term;
    } else {
      (negative ? a.c_negative : a.c_positive) += term;
    }
    if (std::abs(omega) > 0.5 * nyquist) tail += term;
  }
  a.c_psi = a.c_positive + a.c_negative;
  if (!(a.c_psi > 0.0) || !std::isfinite(a.c_psi)) {
    throw AdmissibilityError("admissibility: '" + psi.name() + "' has no usable spectrum");
  }
  if (tail > kTailFraction * a.c_psi) {
    throw ResolutionError("admissibility: spectrum of '" + psi.name() +
                          "' is not resolved at dx = " + std::to_string(dx));
  }
  return a;
}

AnalyzingWavelet with_admissibility(AnalyzingWavelet psi) {
  psi.set_admissibility(admissibility(psi));
  return psi;
}

CwtGrid CwtGrid::geometric(double r_min, double r_max, int voices, std::vector<double> shifts) {
  if (!(r_min > 0.0) || !(r_max >= r_min) || voices < 1) {
    throw ParameterError("CwtGrid: need 0 < r_min <= r_max and voices >= 1");
  }
  CwtGrid g;
  const double ratio = std::exp2(1.0 / voices);
  // The small slack keeps r_max when it sits on the lattice up to rounding.
  for (int i = 0;; ++i) {
    const double r = r_min * std::pow(ratio, i);
    if (r > r_max * (1.0 + 1e-12)) break;
    g.scales.push_back(r);
  }
  g.shifts = std::move(shifts);
  g.validate();
  return g;
}

CwtGrid CwtGrid::log_spaced(double r_min, double r_max, std::size_t count,
                            std::vector<double> shifts) {
  if (!(r_min > 0.0) || !(r_max >= r_min) || count == 0) {
    throw ParameterError("CwtGrid: need 0 < r_min <= r_max and count >= 1");
  }
  CwtGrid g;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    g.scales.push_back(r_min * std::pow(r_max / r_min, t));
  }
  g.shifts = std::move(shifts);
  g.validate();
  return g;
}

std::vector<double> CwtGrid::linear(double a, double b, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = count == 1 ? a
                        : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

void CwtGrid::validate() const {
  if (scales.empty() || shifts.empty()) {
    throw ParameterError("CwtGrid: scale and shift axes must be nonempty");
  }
  for (double r : scales) {
    if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError("CwtGrid: scales must be > 0");
  }
}

Complex scaled_wavelet(const AnalyzingWavelet& psi, double r, double s, double x) {
  return psi((x - s) / r) / std::sqrt(r);
}

CwtCoefficients cwt(const SampledFunction& f, const AnalyzingWavelet& psi, const CwtGrid& grid) {
  grid.validate();
  if (f.size() < 2 || !(f.dx > 0.0)) {
    throw ParameterError("cwt: signal needs at least two samples and dx > 0");
  }
  for (double r : grid.scales) {
    if (r * psi.support_width() / f.dx < 4.0) {
      throw ResolutionError("cwt: scale " + std::to_string(r) + " resolves '" + psi.name() +
                            "' with fewer than 4 samples");
    }
  }
  CwtCoefficients out;
  out.grid = grid;
  out.x_min = f.x_min;
  out.dx = f.dx;
  out.samples = f.size();
  const auto rows = static_cast<Eigen::Index>(grid.scales.size());
  const auto cols = static_cast<Eigen::Index>(grid.shifts.size());
  out.c = Eigen::MatrixXcd::Zero(rows, cols);
  const std::size_t n = f.size();
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double r = grid.scales[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double s = grid.shifts[static_cast<std::size_t>(j)];
      const auto [first, last] = index_window(s + r * psi.support_lo(), s + r * psi.support_hi(),
                                              f.x_min, f.dx, n);
      Complex acc{};
      for (long long k = first; k <= last; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const double w = (idx == 0 || idx + 1 == n) ? 0.5 : 1.0;
        acc += w * std::conj(scaled_wavelet(psi, r, s, f.x(idx))) * f.values[idx];
      }
      out.c(i, j) = acc * f.dx;
    }
  }
  return out;
}

SampledFunction icwt(const CwtCoefficients& c, const AnalyzingWavelet& psi) {
  const auto& adm = psi.admissibility();
  if (!adm) {
    throw AdmissibilityError("icwt: '" + psi.name() + "' carries no admissibility constant");
  }
  if (std::abs(adm->c_positive - adm->c_negative) > 1e-3 * adm->c_psi) {
    throw AdmissibilityError("icwt: '" + psi.name() +
                             "' has an asymmetric spectrum; positive scales cannot invert it");
  }
  const auto wr = trapezoid_weights(c.grid.scales);
  const auto ws = trapezoid_weights(c.grid.shifts);
  SampledFunction out{c.x_min, c.dx, std::vector<Complex>(c.samples)};
  for (std::size_t i = 0; i < c.grid.scales.size(); ++i) {
    const double r = c.grid.scales[i];
    const double scale_weight = wr[i] / (r * r);
    if (scale_weight == 0.0) continue;
    for (std::size_t j = 0; j < c.grid.shifts.size(); ++j) {
      const double s = c.grid.shifts[j];
      const Complex coeff = c.c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                            (scale_weight * ws[j]);
      if (coeff == Complex{}) continue;
      const auto [first, last] = index_window(s + r * psi.support_lo(), s + r * psi.support_hi(),
                                              c.x_min, c.dx, c.samples);
      for (long long k = first; k <= last; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out.values[idx] += coeff * scaled_wavelet(psi, r, s, out.x(idx));
      }
    }
  }
  for (auto& v : out.values) v /= adm->c_positive;
  return out;
}

SampledFunction dyadic_sample(const AnalyzingWavelet& psi, int j, long long k, double x_min,
                              double dx, std::size_t n) {
  // Same rounding as scaled_wavelet at r = 2^-j, s = k·2^-j.
  const double root_r = std::sqrt(std::ldexp(1.0, -j));
  return sample(
      [&](double x) { return psi(std::ldexp(x, j) - static_cast<double>(k)) / root_r; }, x_min,
      dx, n);
}

double parseval_ratio(const SampledFunction& f, const AnalyzingWavelet& psi, int j_first,
                      int j_last, std::optional<ShiftRange> k_range) {
  double norm2 = 0.0;
  for (const auto& v : f.values) norm2 += std::norm(v);
  norm2 *= f.dx;
  if (!(norm2 > 0.0)) throw DomainError("parseval_ratio: f has zero norm");
  if (j_first > j_last) return 0.0;

  double total = 0.0;
  for (int j = j_first; j <= j_last; ++j) {
    const double scale = std::ldexp(1.0, j);
    const double amp = std::exp2(0.5 * j);
    long long k_lo, k_hi;
    if (k_range) {
      k_lo = k_range->first;
      k_hi = k_range->last;
    } else {
      // ψ_{j,k} lives on [(lo + k)/2^j, (hi + k)/2^j].
      k_lo = static_cast<long long>(std::floor(scale * f.x_min - psi.support_hi())) - 1;
      k_hi = static_cast<long long>(std::ceil(scale * f.x_max() - psi.support_lo())) + 1;
    }
    for (long long k = k_lo; k <= k_hi; ++k) {
      const double a = (psi.support_lo() + static_cast<double>(k)) / scale;
      const double b = (psi.support_hi() + static_cast<double>(k)) / scale;
      const auto [first, last] = index_window(a, b, f.x_min, f.dx, f.size());
      Complex acc{};
      for (long long i = first; i <= last; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const Complex w = amp * psi(std::ldexp(f.x(idx), j) - static_cast<double>(k));
        acc += std::conj(w) * f.values[idx];
      }
      total += std::norm(acc * f.dx);
    }
  }
  return total / norm2;
}

}  // namespace wavekit
