// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"
#include "wavekit/errors.hpp"
#include "wavekit/subband.hpp"

using namespace wavekit;
using wavekit::testing::max_abs_diff;
using wavekit::testing::random_signal;

namespace {

const std::vector<std::string> kQmfFilters{"haar", "db4", "stretched_haar"};
const double kRoot2 = std::sqrt(2.0);

// Direct sums straight from the definitions, no periodic index tricks.
SubbandPair analysis_oracle(const Signal& x, const FilterSpec& f) {
  const auto g = derive_highpass(f).g;
  const auto n = static_cast<int>(x.size());
  SubbandPair p{Signal(n / 2), Signal(n / 2)};
  for (int i = 0; i < n / 2; ++i)
    for (int j = 0; j < n; ++j)
      for (int wrap = -4; wrap <= 4; ++wrap) {
        const int k = j + wrap * n - 2 * i;
        p.y[i] += kRoot2 * std::conj(f.h().at(k)) * x[j];
        p.z[i] += kRoot2 * std::conj(g.at(k)) * x[j];
      }
  return p;
}

}  // namespace

TEST_CASE("analysis_step worked examples", "[subband]") {
  const auto haar = builtin_filter("haar");
  auto p = analysis_step(Signal{1, 1, 1, 1}, haar);
  CHECK(max_abs_diff(p.y, {kRoot2, kRoot2}) < 1e-15);
  CHECK(max_abs_diff(p.z, {0, 0}) == 0.0);

  p = analysis_step(Signal{1, 2, 3, 4}, haar);
  CHECK(max_abs_diff(p.y, {3 * kRoot2 / 2, 7 * kRoot2 / 2}) < 1e-14);
  CHECK(max_abs_diff(p.z, {-kRoot2 / 2, -kRoot2 / 2}) < 1e-14);
  CHECK(std::abs(energy(p.y) + energy(p.z) - 30.0) < 1e-12);

  for (const auto& name : kQmfFilters) {
    p = analysis_step(Signal(8), builtin_filter(name));
    CHECK(energy(p.y) + energy(p.z) == 0.0);
  }

  CHECK_THROWS_AS(analysis_step(Signal(5), haar), SizeError);
  CHECK_THROWS_AS(analysis_step(Signal(2), builtin_filter("db4")), SizeError);
}

TEST_CASE("analysis_step matches direct summation", "[subband]") {
  std::mt19937_64 rng(11);
  for (const auto& name : kQmfFilters) {
    const auto f = builtin_filter(name);
    const auto x = random_signal(rng, 16);
    const auto got = analysis_step(x, f);
    const auto want = analysis_oracle(x, f);
    CHECK(max_abs_diff(got.y, want.y) < 1e-13);
    CHECK(max_abs_diff(got.z, want.z) < 1e-13);
  }
}

TEST_CASE("synthesis_step worked examples", "[subband]") {
  const auto haar = builtin_filter("haar");
  CHECK(max_abs_diff(synthesis_step({{kRoot2, kRoot2}, {0, 0}}, haar), {1, 1, 1, 1}) < 1e-15);
  CHECK(max_abs_diff(synthesis_step({{0, 0}, {0, 0}}, haar), {0, 0, 0, 0}) == 0.0);
  const Signal x{1, 2, 3, 4};
  CHECK(max_abs_diff(synthesis_step(analysis_step(x, haar), haar), x) < 1e-12);
  CHECK_THROWS_AS(synthesis_step({{1, 2}, {1}}, haar), SizeError);
}

TEST_CASE("analysis is an isometry", "[subband][property]") {
  std::mt19937_64 rng(1);
  for (const auto& name : kQmfFilters) {
    const auto f = builtin_filter(name);
    for (std::size_t n : {8, 16, 64}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_signal(rng, n);
        const auto p = analysis_step(x, f);
        CHECK(std::abs(energy(p.y) + energy(p.z) - energy(x)) < 1e-10 * energy(x));
      }
    }
  }
}

TEST_CASE("pyramid level bookkeeping", "[subband]") {
  const auto haar = builtin_filter("haar");
  const auto db4 = builtin_filter("db4");
  CHECK(max_levels_1d(8, haar) == 2);
  CHECK(max_levels_1d(4, haar) == 1);
  CHECK(max_levels_1d(6, db4) == 0);
  CHECK(max_levels_1d(16, db4) == 2);

  const Signal eight{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(dwt1d(eight, haar, 3), LevelError);
  CHECK_THROWS_AS(dwt1d(Signal{1, 1, 1, 1}, haar, 2), LevelError);
  CHECK_THROWS_AS(dwt1d(eight, haar, 0), LevelError);
  CHECK_NOTHROW(dwt1d(Signal{1, 1, 1, 1}, haar, 1));

  const auto p = dwt1d(eight, haar, 2);
  const auto s1 = analysis_step(eight, haar);
  const auto s2 = analysis_step(s1.y, haar);
  REQUIRE(p.levels() == 2);
  CHECK(p.details[0] == s1.z);
  CHECK(p.details[1] == s2.z);
  CHECK(p.approx == s2.y);
  CHECK(p.coefficient_count() == 8);
}

TEST_CASE("perfect reconstruction at every admissible level", "[subband][property]") {
  std::mt19937_64 rng(2);
  for (const auto& name : kQmfFilters) {
    const auto f = builtin_filter(name);
    for (std::size_t n : {8, 16, 64}) {
      for (std::size_t levels = 1; levels <= max_levels_1d(n, f); ++levels) {
        const auto x = random_signal(rng, n);
        CHECK(max_abs_diff(idwt1d(dwt1d(x, f, levels), f), x) < 1e-10);
      }
    }
  }
}

TEST_CASE("idwt1d rejects inconsistent pyramids", "[subband]") {
  const auto haar = builtin_filter("haar");
  Pyramid1D bad{{Signal(4), Signal(1)}, Signal(2)};
  CHECK_THROWS_AS(idwt1d(bad, haar), ShapeError);
  Pyramid1D zero{{Signal(4), Signal(2)}, Signal(2)};
  CHECK(max_abs_diff(idwt1d(zero, haar), Signal(8)) == 0.0);
}

TEST_CASE("slanted matrices mirror each other", "[subband][property]") {
  for (const auto& name : {"haar", "db4"}) {
    const auto f = builtin_filter(name);
    for (auto band : {Band::low, Band::high}) {
      const auto s = slanted_synthesis_matrix(f, band, 16);
      const auto a = slanted_analysis_matrix(f, band, 16);
      REQUIRE(s.rows() == 16);
      REQUIRE(s.cols() == 8);
      CHECK(a == s.adjoint());
    }
  }
}

TEST_CASE("synthesis ranges are orthogonal", "[subband][property]") {
  std::mt19937_64 rng(3);
  for (const auto& name : kQmfFilters) {
    const auto f = builtin_filter(name);
    for (std::size_t n : {8, 16, 64}) {
      const auto u = random_signal(rng, n / 2);
      const auto v = random_signal(rng, n / 2);
      const auto su = synthesis_step({u, Signal(n / 2)}, f);
      const auto sv = synthesis_step({Signal(n / 2), v}, f);
      Complex ip{};
      for (std::size_t i = 0; i < n; ++i) ip += std::conj(su[i]) * sv[i];
      CHECK(std::abs(ip) < 1e-10);
    }
  }
}

TEST_CASE("constants have zero detail", "[subband][property]") {
  for (const auto& name : kQmfFilters) {
    const auto p = analysis_step(Signal(16, Complex(2.5, -1.0)), builtin_filter(name));
    for (const auto& z : p.z) CHECK(std::abs(z) < 1e-15);
  }
}

TEST_CASE("cuntz_check", "[subband]") {
  CHECK(cuntz_check(builtin_filter("haar"), 8, 1e-12).pass);
  CHECK(cuntz_check(builtin_filter("db4"), 16, 1e-10).pass);
  CHECK(cuntz_check(builtin_filter("stretched_haar"), 16, 1e-10).pass);
  const auto delta = cuntz_check(FilterSpec("delta", 0, {1.0, 0.0}), 8, 1e-12);
  CHECK_FALSE(delta.pass);
  CHECK(delta.max_deviation >= 0.5);
  CHECK_THROWS_AS(cuntz_check(builtin_filter("db4"), 6, 1e-10), SizeError);
  CHECK_THROWS_AS(cuntz_check(builtin_filter("haar"), 7, 1e-10), SizeError);
}
