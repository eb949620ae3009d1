// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"
#include "wavekit/errors.hpp"
#include "wavekit/image2d.hpp"

using namespace wavekit;
using wavekit::testing::max_abs_diff;
using wavekit::testing::plane;
using wavekit::testing::random_plane;

namespace {

double quad_energy(const QuadDecomp& q) {
  return energy(q.a) + energy(q.h) + energy(q.v) + energy(q.d);
}

// Row pass then column pass built from 1D analysis_step calls.
QuadDecomp separable_oracle(const Plane& img, const FilterSpec& f) {
  const auto rows = img.rows(), cols = img.cols();
  Plane lo(rows, cols / 2), hi(rows, cols / 2);
  for (Eigen::Index i = 0; i < rows; ++i) {
    Signal r(img.row(i).begin(), img.row(i).end());
    const auto p = analysis_step(r, f);
    for (Eigen::Index j = 0; j < cols / 2; ++j) {
      lo(i, j) = p.y[j];
      hi(i, j) = p.z[j];
    }
  }
  QuadDecomp q{Plane(rows / 2, cols / 2), Plane(rows / 2, cols / 2), Plane(rows / 2, cols / 2),
               Plane(rows / 2, cols / 2)};
  for (Eigen::Index j = 0; j < cols / 2; ++j) {
    Signal cl(lo.col(j).begin(), lo.col(j).end());
    Signal ch(hi.col(j).begin(), hi.col(j).end());
    const auto pl = analysis_step(cl, f);
    const auto ph = analysis_step(ch, f);
    for (Eigen::Index i = 0; i < rows / 2; ++i) {
      q.a(i, j) = pl.y[i];
      q.v(i, j) = pl.z[i];
      q.h(i, j) = ph.y[i];
      q.d(i, j) = ph.z[i];
    }
  }
  return q;
}

}  // namespace

TEST_CASE("2x2 haar example pins the axes", "[image2d]") {
  const auto q = dwt2d_step(plane({{1, 2}, {3, 4}}), builtin_filter("haar"));
  CHECK(q.a(0, 0) == Complex(5.0));
  CHECK(q.h(0, 0) == Complex(-1.0));
  CHECK(q.v(0, 0) == Complex(-2.0));
  CHECK(q.d(0, 0) == Complex(0.0));
  CHECK(quad_energy(q) == 30.0);
}

TEST_CASE("constant and zero images", "[image2d]") {
  const auto haar = builtin_filter("haar");
  const Plane c = Plane::Constant(4, 4, Complex(3.0, 0.0));
  const auto q = dwt2d_step(c, haar);
  CHECK(max_abs_diff(q.a, Plane::Constant(2, 2, 6.0)) < 1e-14);
  CHECK(q.h.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(q.v.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(q.d.cwiseAbs().maxCoeff() < 1e-15);

  const auto z = dwt2d_step(Plane::Zero(4, 4), haar);
  CHECK(quad_energy(z) == 0.0);

  const auto p = dwt2d(Plane::Constant(8, 8, 3.0), haar, 2);
  CHECK(max_abs_diff(p.approx, Plane::Constant(2, 2, 12.0)) < 1e-13);
  for (const auto& l : p.levels) {
    CHECK(l.h.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(l.v.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(l.d.cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("dwt2d_step is the separable composition of 1D steps", "[image2d][property]") {
  std::mt19937_64 rng(4);
  for (const auto& name : {"haar", "db4", "stretched_haar"}) {
    const auto f = builtin_filter(name);
    const auto img = random_plane(rng, 8, 16);
    const auto got = dwt2d_step(img, f);
    const auto want = separable_oracle(img, f);
    CHECK(max_abs_diff(got.a, want.a) < 1e-12);
    CHECK(max_abs_diff(got.h, want.h) < 1e-12);
    CHECK(max_abs_diff(got.v, want.v) < 1e-12);
    CHECK(max_abs_diff(got.d, want.d) < 1e-12);
  }
}

TEST_CASE("rank-one images decompose into outer products", "[image2d][property]") {
  std::mt19937_64 rng(5);
  const auto f = builtin_filter("db4");
  const auto y = wavekit::testing::random_signal(rng, 8);
  const auto x = wavekit::testing::random_signal(rng, 16);
  Plane img(8, 16);
  for (Eigen::Index i = 0; i < 8; ++i)
    for (Eigen::Index j = 0; j < 16; ++j) img(i, j) = y[i] * x[j];
  const auto q = dwt2d_step(img, f);
  const auto px = analysis_step(x, f);
  const auto py = analysis_step(y, f);
  auto outer = [](const Signal& col, const Signal& row) {
    Plane p(static_cast<Eigen::Index>(col.size()), static_cast<Eigen::Index>(row.size()));
    for (std::size_t i = 0; i < col.size(); ++i)
      for (std::size_t j = 0; j < row.size(); ++j) p(i, j) = col[i] * row[j];
    return p;
  };
  CHECK(max_abs_diff(q.a, outer(py.y, px.y)) < 1e-10);
  CHECK(max_abs_diff(q.h, outer(py.y, px.z)) < 1e-10);
  CHECK(max_abs_diff(q.v, outer(py.z, px.y)) < 1e-10);
  CHECK(max_abs_diff(q.d, outer(py.z, px.z)) < 1e-10);
}

TEST_CASE("2D energy conservation and perfect reconstruction", "[image2d][property]") {
  std::mt19937_64 rng(6);
  for (const auto& name : {"haar", "db4", "stretched_haar"}) {
    const auto f = builtin_filter(name);
    const auto img = random_plane(rng, 16, 16);
    CHECK(std::abs(quad_energy(dwt2d_step(img, f)) - energy(img)) < 1e-8 * energy(img));
    for (std::size_t levels = 1; levels <= max_levels_2d(16, 16, f); ++levels) {
      const auto p = dwt2d(img, f, levels);
      CHECK(p.coefficient_count() == 256);
      CHECK(max_abs_diff(idwt2d(p, f), img) < 1e-10);
    }
  }
  const auto haar = builtin_filter("haar");
  const auto small = plane({{1, 2}, {3, 4}});
  CHECK(max_abs_diff(idwt2d(dwt2d(small, haar, 1), haar), small) < 1e-12);

  Plane ramp(16, 16);
  for (Eigen::Index i = 0; i < 16; ++i)
    for (Eigen::Index j = 0; j < 16; ++j) ramp(i, j) = static_cast<double>(i * 16 + j);
  const auto db4 = builtin_filter("db4");
  CHECK(max_abs_diff(idwt2d(dwt2d(ramp, db4, 2), db4), ramp) < 1e-10);
}

TEST_CASE("2D level and shape errors", "[image2d]") {
  const auto haar = builtin_filter("haar");
  std::mt19937_64 rng(7);
  const auto img = random_plane(rng, 4, 4);
  CHECK(max_levels_2d(4, 4, haar) == 2);
  CHECK_THROWS_AS(dwt2d(img, haar, 3), LevelError);
  CHECK_THROWS_AS(dwt2d(img, haar, 0), LevelError);
  CHECK_THROWS_AS(dwt2d_step(random_plane(rng, 3, 4), haar), SizeError);

  const auto one = dwt2d(img, haar, 1);
  const auto step = dwt2d_step(img, haar);
  CHECK(one.approx == step.a);
  CHECK(one.levels[0].h == step.h);

  ImagePyramid bad = one;
  bad.levels[0].d = Plane::Zero(1, 2);
  CHECK_THROWS_AS(idwt2d(bad, haar), ShapeError);

  ImagePyramid zero{{{Plane::Zero(2, 2), Plane::Zero(2, 2), Plane::Zero(2, 2)}},
                    Plane::Zero(2, 2)};
  CHECK(idwt2d(zero, haar).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quantizer", "[image2d]") {
  CHECK_THROWS_AS(Quantizer(0.0), ParameterError);
  CHECK_THROWS_AS(Quantizer(-1.0), ParameterError);
  CHECK(Quantizer(1.0).apply(3.7) == Complex(4.0));
  CHECK(Quantizer(1.0).apply(-2.5) == Complex(-3.0));
  CHECK(Quantizer(0.5).apply(Complex(1.5, -0.5)) == Complex(1.5, -0.5));

  const auto haar = builtin_filter("haar");
  const auto img = plane({{1, 2}, {3, 4}});
  const auto rec = idwt2d(quantize(dwt2d(img, haar, 1), Quantizer(1.0)), haar);
  CHECK(max_abs_diff(rec, img) <= 2.0);
}

TEST_CASE("quantization error scales with the step", "[image2d][property]") {
  std::mt19937_64 rng(8);
  const auto f = builtin_filter("db4");
  const Plane img = random_plane(rng, 16, 16) * 50.0;
  const auto p = dwt2d(img, f, 2);
  // Synthesis is unitary, so the ℓ² error equals the coefficient error:
  // at most Δ/√2 per complex coefficient.
  for (double step : {0.25, 1.0, 4.0}) {
    const auto rec = idwt2d(quantize(p, Quantizer(step)), f);
    const double l2 = std::sqrt(energy(Plane(rec - img)));
    CHECK(l2 <= step * std::sqrt(2.0 * 256) / 2.0 + 1e-9);
  }
}

TEST_CASE("quadrant layout nests coarser levels", "[image2d]") {
  const auto haar = builtin_filter("haar");
  std::mt19937_64 rng(9);
  const auto img = random_plane(rng, 8, 8);
  const auto p = dwt2d(img, haar, 2);
  const auto lay = quadrant_layout(p);
  REQUIRE(lay.rows() == 8);
  CHECK(lay.block(0, 4, 4, 4) == p.levels[0].h);
  CHECK(lay.block(4, 0, 4, 4) == p.levels[0].v);
  CHECK(lay.block(4, 4, 4, 4) == p.levels[0].d);
  CHECK(lay.block(0, 0, 2, 2) == p.approx);
  CHECK(lay.block(0, 2, 2, 2) == p.levels[1].h);
}
