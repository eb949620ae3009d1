// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/transfer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdio>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit {

Autocorrelation autocorrelation(const FilterSpec& f) {
  const auto& h = f.h();
  Autocorrelation a;
  a.max_lag = static_cast<int>(f.length()) - 1;
  a.w.assign(static_cast<std::size_t>(2 * a.max_lag + 1), Complex{});
  for (int k = 0; k <= a.max_lag; ++k) {
    Complex acc{};
    for (int i = h.start(); i <= h.last(); ++i) acc += std::conj(h.at(i)) * h.at(i + k);
    a.w[static_cast<std::size_t>(a.max_lag + k)] = acc;
    a.w[static_cast<std::size_t>(a.max_lag - k)] = std::conj(acc);
  }
  return a;
}

TransferMatrix build_transfer_matrix(const FilterSpec& f) {
  const auto w = autocorrelation(f);
  TransferMatrix t;
  t.max_mode = w.max_lag;
  const int size = 2 * t.max_mode + 1;
  t.r = Eigen::MatrixXcd::Zero(size, size);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) {
      const int n = row - t.max_mode;
      const int m = col - t.max_mode;
      t.r(row, col) = 2.0 * w.at(2 * n - m);
    }
  }
  return t;
}

Eigen::VectorXcd apply_transfer(const TransferMatrix& t, const Eigen::VectorXcd& p) {
  if (p.size() != t.r.cols()) {
    throw ShapeError("apply_transfer: coefficient vector does not match the mode window");
  }
  return t.r * p;
}

std::size_t pivoted_rank(Eigen::MatrixXcd a, double threshold) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < std::min(rows, cols); ++k) {
    // Largest remaining entry decides both the pivot row and column.
    Eigen::Index pr = k, pc = k;
    double best = -1.0;
    for (Eigen::Index c = k; c < cols; ++c) {
      for (Eigen::Index r = k; r < rows; ++r) {
        if (std::abs(a(r, c)) > best) {
          best = std::abs(a(r, c));
          pr = r;
          pc = c;
        }
      }
    }
    if (best <= threshold) break;
    a.row(k).swap(a.row(pr));
    a.col(k).swap(a.col(pc));
    for (Eigen::Index r = k + 1; r < rows; ++r) {
      const Complex factor = a(r, k) / a(k, k);
      a.row(r).tail(cols - k) -= factor * a.row(k).tail(cols - k);
    }
    ++rank;
  }
  return rank;
}

OnbVerdict lawton_test(const FilterSpec& f, double tol) {
  if (!(tol > 0.0)) {
    throw ParameterError("lawton_test: tolerance must be positive");
  }
  if (!qmf_check(f, 1e-10).pass) {
    throw PreconditionError("lawton_test: filter '" + f.name() +
                            "' does not satisfy the QMF relations");
  }
  const auto t = build_transfer_matrix(f);
  const auto n = t.r.rows();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(t.r, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("lawton_test: eigen-decomposition did not converge");
  }
  OnbVerdict v;
  v.tolerance = tol;
  for (Eigen::Index i = 0; i < n; ++i) v.eigenvalues.push_back(solver.eigenvalues()(i));
  std::stable_sort(v.eigenvalues.begin(), v.eigenvalues.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  for (const auto& lambda : v.eigenvalues) {
    v.spectral_radius = std::max(v.spectral_radius, std::abs(lambda));
    if (std::abs(lambda - 1.0) <= tol) ++v.eigen_count;
  }

  const double scale = std::max(1.0, t.r.cwiseAbs().maxCoeff());
  const auto rank = pivoted_rank(t.r - Eigen::MatrixXcd::Identity(n, n), tol * scale);
  v.multiplicity = static_cast<std::size_t>(n) - rank;
  // The eigenvalue count bounds the eigenspace dimension from above.
  if (v.multiplicity == 0 || v.eigen_count < v.multiplicity) {
    throw NumericError("lawton_test: eigenvalue count (" + std::to_string(v.eigen_count) +
                       ") and rank deficiency of R − I (" + std::to_string(v.multiplicity) +
                       ") are inconsistent");
  }
  v.verdict = v.multiplicity == 1 ? Verdict::onb : Verdict::not_onb;
  return v;
}

std::string to_string(Verdict v) { return v == Verdict::onb ? "ONB" : "NOT_ONB"; }

std::string format_verdict(const OnbVerdict& v) {
  std::ostringstream os;
  os << "verdict=" << to_string(v.verdict) << '\n';
  os << "mult1=" << v.multiplicity << '\n';
  os << "eigcount1=" << v.eigen_count << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.spectral_radius);
  os << "spectral_radius=" << buf << '\n';
  os << "eigs=";
  for (std::size_t i = 0; i < v.eigenvalues.size(); ++i) {
    const auto& e = v.eigenvalues[i];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", e.real() + 0.0, e.imag() + 0.0);
    os << (i ? "," : "") << buf;
  }
  os << '\n';
  return os.str();
}

}  // namespace wavekit
