// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "support.hpp"
#include "wavekit/cli.hpp"
#include "wavekit/io.hpp"

using namespace wavekit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "wavekit_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("verify", "[cli]") {
  auto r = run({"verify", "--filter", "haar", "--lawton"});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out.find("lawton: ONB") != std::string::npos);

  r = run({"verify", "--filter", "stretched_haar", "--lawton"});
  CHECK(r.status == cli::kVerificationFailed);
  CHECK(r.out.find("lawton: NOT_ONB") != std::string::npos);

  CHECK(run({"verify", "--filter", "db4"}).status == cli::kSuccess);
  CHECK(run({"verify", "--filter", "nosuch"}).status == cli::kInputError);
  CHECK(run({"verify"}).status == cli::kInputError);
  CHECK(run({"bogus"}).status == cli::kInputError);
  CHECK(run({"--help"}).status == cli::kSuccess);

  const auto file = scratch("delta.txt");
  spit(file, "name: delta\nstart: 0\ncoeffs: 1 0\n");
  r = run({"verify", "--filter", file.string(), "--lawton"});
  CHECK(r.status == cli::kVerificationFailed);
  CHECK(r.out.find("qmf: FAIL") != std::string::npos);
}

TEST_CASE("transform 1D", "[cli]") {
  const auto in = scratch("sig.csv");
  spit(in, "1\n2\n3\n4\n5\n6\n7\n8\n");
  const auto pyr = scratch("sig.pyr");
  const auto back = scratch("sig_back.csv");
  CHECK(run({"transform", "dwt1d", "--filter", "haar", "--levels", "2", "--in", in.string(),
             "--out", pyr.string()})
            .status == cli::kSuccess);
  CHECK(run({"transform", "idwt1d", "--in", pyr.string(), "--out", back.string()}).status ==
        cli::kSuccess);
  std::ifstream b(back);
  const auto rec = io::read_signal_csv(b);
  REQUIRE(rec.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(rec[i] - double(i + 1)) < 1e-12);

  CHECK(run({"transform", "dwt1d", "--filter", "haar", "--levels", "3", "--in", in.string(),
             "--out", pyr.string()})
            .status == cli::kInputError);

  const auto six = scratch("six.csv");
  spit(six, "1\n2\n3\n4\n5\n6\n");
  for (const auto* levels : {"1", "2"}) {
    CHECK(run({"transform", "dwt1d", "--filter", "db4", "--levels", levels, "--in", six.string(),
               "--out", pyr.string()})
              .status == cli::kInputError);
  }

  const auto junk = scratch("junk.pyr");
  spit(junk, "magic: nope\n");
  CHECK(run({"transform", "idwt1d", "--in", junk.string(), "--out", back.string()}).status ==
        cli::kInputError);
}

TEST_CASE("transform 2D", "[cli]") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> px(0, 255);
  Plane img(16, 16);
  for (Eigen::Index i = 0; i < 16; ++i)
    for (Eigen::Index j = 0; j < 16; ++j) img(i, j) = px(rng);
  const auto in = scratch("img.pgm");
  {
    std::ofstream o(in, std::ios::binary);
    io::write_pgm(o, img);
  }
  const auto pyr = scratch("img.pyr");
  const auto prev = scratch("img_prev.pgm");
  const auto out = scratch("img_back.pgm");
  CHECK(run({"transform", "dwt2d", "--filter", "db4", "--levels", "2", "--in", in.string(),
             "--out", pyr.string(), "--preview", prev.string()})
            .status == cli::kSuccess);
  CHECK(fs::exists(prev));
  CHECK(run({"transform", "idwt2d", "--in", pyr.string(), "--out", out.string()}).status ==
        cli::kSuccess);
  std::ifstream o(out, std::ios::binary);
  CHECK((io::read_pgm(o) - img).cwiseAbs().maxCoeff() <= 1.0);

  CHECK(run({"transform", "dwt2d", "--filter", "haar", "--quantize", "0", "--in", in.string(),
             "--out", pyr.string()})
            .status == cli::kInputError);
  CHECK(run({"transform", "dwt2d", "--filter", "haar", "--levels", "5", "--in", in.string(),
             "--out", pyr.string()})
            .status == cli::kInputError);

  const auto odd = scratch("odd.pgm");
  spit(odd, "P2\n3 2\n255\n1 2 3 4 5 6\n");
  CHECK(run({"transform", "dwt2d", "--filter", "haar", "--in", odd.string(), "--out",
             pyr.string()})
            .status == cli::kInputError);
}

TEST_CASE("commands are deterministic", "[cli][property]") {
  const auto in = scratch("det.pgm");
  spit(in, "P2\n4 4\n255\n1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16\n");
  const auto a = scratch("det_a.pyr"), b = scratch("det_b.pyr");
  for (const auto& p : {a, b}) {
    REQUIRE(run({"transform", "dwt2d", "--filter", "haar", "--levels", "2", "--in", in.string(),
                 "--out", p.string()})
                .status == cli::kSuccess);
  }
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("cascade", "[cli]") {
  const auto out = scratch("phi.csv");
  auto r = run({"cascade", "--filter", "haar", "--resolution", "3", "--out", out.string()});
  CHECK(r.status == cli::kSuccess);
  std::ifstream in(out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double v = std::stod(line.substr(comma + 1));
    CHECK(v == (x < 1.0 ? 1.0 : 0.0));
    ++rows;
  }
  CHECK(rows == 9);

  r = run({"cascade", "--filter", "stretched_haar"});
  CHECK(r.status == cli::kNumericError);
  CHECK(r.err.find("eigenspace dimension 2") != std::string::npos);
  CHECK(run({"cascade", "--filter", "haar", "--resolution", "-1"}).status == cli::kInputError);
  CHECK(run({"cascade", "--filter", "db4", "--which", "psi"}).status == cli::kSuccess);
}

TEST_CASE("cwt", "[cli]") {
  const auto in = scratch("sine.csv");
  {
    std::ofstream o(in);
    for (int i = 0; i < 2048; ++i) {
      const double x = -32.0 + i / 32.0;
      o << io::format_real(std::sin(std::numbers::pi * x) * std::exp(-x * x / 200.0)) << '\n';
    }
  }
  const auto out = scratch("sine_scalogram.csv");
  const auto heat = scratch("sine_heat.pgm");
  auto r = run({"cwt", "--in", in.string(), "--x0", "-32", "--dx", "0.03125", "--scales",
                "0.1:2:16", "--shifts", "64", "--out", out.string(), "--heatmap", heat.string()});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out.find("C_psi=") != std::string::npos);

  // Row maximum of the heat map sits at the predicted scale √(5/2)/π.
  std::ifstream h(heat, std::ios::binary);
  const auto map = io::read_pgm(h);
  std::ifstream csv(out);
  std::string header;
  std::getline(csv, header);
  std::vector<double> scales;
  std::stringstream hs(header.substr(header.find(',') + 1));
  for (std::string tok; std::getline(hs, tok, ',');) scales.push_back(std::stod(tok));
  REQUIRE(static_cast<Eigen::Index>(scales.size()) == map.rows());
  Eigen::Index best = 0;
  map.col(map.cols() / 2).real().maxCoeff(&best);
  CHECK(std::abs(std::log2(scales[best] * std::numbers::pi / std::sqrt(2.5))) <= 1.0 / 16.0);

  CHECK(run({"cwt", "--in", in.string(), "--x0", "-32", "--dx", "0.03125", "--wavelet",
             "gaussian"})
            .status == cli::kNumericError);
  const auto empty = scratch("empty.csv");
  spit(empty, "");
  CHECK(run({"cwt", "--in", empty.string()}).status == cli::kInputError);

  r = run({"cwt", "--in", in.string(), "--x0", "-32", "--dx", "0.03125", "--scales",
           "0.1:30:10", "--shifts", "256", "--invert", "--out", out.string()});
  CHECK(r.status == cli::kSuccess);
  CHECK(r.out.find("relative_l2_error=") != std::string::npos);
}
