// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wavekit/filters.hpp"

namespace wavekit {

/// Fourier coefficients w_k = Σ_i conj(h_i) h_{i+k} of W = |m0|², |k| <= L−1.
struct Autocorrelation {
  int max_lag = 0;
  std::vector<Complex> w;  // w[k + max_lag]

  Complex at(int k) const noexcept {
    return (k < -max_lag || k > max_lag) ? Complex{} : w[static_cast<std::size_t>(k + max_lag)];
  }
};

/// R_{n,m} = 2 w_{2n−m} on the mode window n, m ∈ [−(L−1), L−1].
/// Row/column index i corresponds to mode i − max_mode.
struct TransferMatrix {
  int max_mode = 0;
  Eigen::MatrixXcd r;
};

enum class Verdict { onb, not_onb };

struct OnbVerdict {
  std::vector<Complex> eigenvalues;  // sorted by descending modulus
  std::size_t multiplicity = 0;      // dim ker(R − I) from the rank route
  std::size_t eigen_count = 0;       // #{λ : |λ − 1| <= tol}
  double spectral_radius = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::not_onb;
};

Autocorrelation autocorrelation(const FilterSpec& f);

TransferMatrix build_transfer_matrix(const FilterSpec& f);

/// Applies (R_W p)(z) = Σ_{u² = z} W(u) p(u) to a trigonometric polynomial
/// given by coefficients on the mode window.
Eigen::VectorXcd apply_transfer(const TransferMatrix& t, const Eigen::VectorXcd& p);

/// Rank by Gaussian elimination with column pivoting; pivots with modulus
/// <= threshold end the elimination.
std::size_t pivoted_rank(Eigen::MatrixXcd a, double threshold);

/// Default tolerance for eigenvalue-1 bucketing and the rank threshold.
inline constexpr double kLawtonTolerance = 1e-8;

/// ONB verdict from the eigenvalue-1 eigenspace of R. PreconditionError
/// when f fails qmf_check at 1e-10; NumericError if the eigen solver does
/// not converge or the two multiplicity estimates disagree.
OnbVerdict lawton_test(const FilterSpec& f, double tol = kLawtonTolerance);

std::string to_string(Verdict v);

/// Machine-readable `key=value` lines: verdict, mult1, eigs, ...
std::string format_verdict(const OnbVerdict& v);

}  // namespace wavekit
