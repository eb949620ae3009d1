// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "wavekit/cascade.hpp"
#include "wavekit/cwt.hpp"
#include "wavekit/errors.hpp"
#include "wavekit/filters.hpp"
#include "wavekit/image2d.hpp"
#include "wavekit/io.hpp"
#include "wavekit/subband.hpp"
#include "wavekit/transfer.hpp"

namespace wavekit::cli {
namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string fmt(double v) { return io::format_real(v); }

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string filter;
  double tol = 1e-10;
  std::size_t cuntz_n = 0;
  bool lawton = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto f = io::resolve_filter(a.filter);
  out << "filter: " << f.name() << " (taps=" << f.length() << ", start=" << f.start() << ")\n";

  bool ok = true;
  const auto qmf = qmf_check(f, a.tol);
  out << "qmf: " << (qmf.pass ? "PASS" : "FAIL") << " max_residual=" << fmt(qmf.max_residual)
      << " tol=" << fmt(a.tol) << '\n';
  ok &= qmf.pass;

  std::size_t n = a.cuntz_n;
  if (n == 0) n = std::max<std::size_t>(16, 2 * f.length() + (2 * f.length()) % 2);
  const auto cuntz = cuntz_check(f, n, a.tol);
  out << "cuntz: " << (cuntz.pass ? "PASS" : "FAIL") << " n=" << n
      << " max_deviation=" << fmt(cuntz.max_deviation) << " tol=" << fmt(a.tol) << '\n';
  ok &= cuntz.pass;

  if (a.lawton) {
    if (!qmf.pass) {
      out << "lawton: SKIPPED (filter fails the QMF relations)\n";
      ok = false;
    } else {
      const auto v = lawton_test(f);
      out << "lawton: " << to_string(v.verdict) << '\n';
      out << format_verdict(v);
      ok &= v.verdict == Verdict::onb;
    }
  }
  return ok ? kSuccess : kVerificationFailed;
}

// ------------------------------------------------------------- transform

struct TransformArgs {
  std::string mode;
  std::string filter;
  std::size_t levels = 1;
  std::string in;
  std::string out;
  std::string preview;
  std::optional<double> quantize;
};

FilterSpec inverse_filter(const TransformArgs& a, const io::PyramidContainer& c) {
  return io::resolve_filter(a.filter.empty() ? c.filter : a.filter);
}

int cmd_transform(const TransformArgs& a, std::ostream& out) {
  std::optional<Quantizer> quantizer;
  if (a.quantize) quantizer.emplace(*a.quantize);

  if (a.mode == "dwt1d" || a.mode == "dwt2d") {
    if (a.filter.empty()) throw ParameterError("--filter is required for forward transforms");
    const auto f = io::resolve_filter(a.filter);
    auto in = open_in(a.in);
    io::PyramidContainer c;
    c.filter = f.name();
    if (a.mode == "dwt1d") {
      const auto x = io::read_signal_csv(in);
      if (x.empty()) throw FormatError("input signal is empty");
      auto p = dwt1d(x, f, a.levels);
      if (quantizer) p = quantize(p, *quantizer);
      c.pyramid = std::move(p);
    } else {
      const auto img = io::read_pgm(in);
      auto p = dwt2d(img, f, a.levels);
      if (quantizer) p = quantize(p, *quantizer);
      if (!a.preview.empty()) {
        auto prev = open_out(a.preview);
        io::write_pgm(prev, io::preview_layout(p));
      }
      c.pyramid = std::move(p);
    }
    auto o = open_out(a.out);
    io::write_container(o, c);
    out << a.mode << ": filter=" << f.name() << " levels=" << a.levels << " -> " << a.out << '\n';
    return kSuccess;
  }

  auto in = open_in(a.in);
  auto c = io::read_container(in);
  const auto f = inverse_filter(a, c);
  if (a.mode == "idwt1d") {
    auto* p = std::get_if<Pyramid1D>(&c.pyramid);
    if (!p) throw FormatError("idwt1d needs a 1D container (len: header)");
    if (quantizer) *p = quantize(*p, *quantizer);
    const auto x = idwt1d(*p, f);
    auto o = open_out(a.out);
    io::write_signal_csv(o, x);
  } else {
    auto* p = std::get_if<ImagePyramid>(&c.pyramid);
    if (!p) throw FormatError("idwt2d needs a 2D container (dims: header)");
    if (quantizer) *p = quantize(*p, *quantizer);
    const auto img = idwt2d(*p, f);
    auto o = open_out(a.out);
    io::write_pgm(o, img, !ends_with(a.out, ".ascii.pgm"));
  }
  out << a.mode << ": filter=" << f.name() << " -> " << a.out << '\n';
  return kSuccess;
}

// --------------------------------------------------------------- cascade

struct CascadeArgs {
  std::string filter;
  int resolution = 6;
  std::string which = "phi";
  std::string out;
};

int cmd_cascade(const CascadeArgs& a, std::ostream& out) {
  const auto f = io::resolve_filter(a.filter);
  const DyadicFunction fn = a.which == "phi" ? scaling_function(f, a.resolution)
                                             : wavelet_function(f, a.resolution);
  const auto integral = fn.riemann_integral();
  out << "cascade: filter=" << f.name() << " which=" << a.which << " J=" << a.resolution
      << " samples=" << fn.values.size() << '\n';
  out << "support=[" << fmt(fn.x_begin()) << ", " << fmt(fn.x_end()) << "]\n";
  out << "integral=" << io::format_complex(integral) << '\n';
  if (a.which == "phi") {
    out << "identity_residual=" << fmt(scaling_identity_residual(fn, f)) << '\n';
  }
  if (!a.out.empty()) {
    auto o = open_out(a.out);
    io::write_dyadic_csv(o, fn);
  }
  return kSuccess;
}

// ------------------------------------------------------------------- cwt

struct CwtArgs {
  std::string in;
  double x0 = 0.0;
  double dx = 1.0;
  std::string wavelet = "mexican_hat";
  std::string scales = "auto";
  std::size_t shifts = 256;
  std::string out;
  std::string heatmap;
  bool invert = false;
  std::string recon;
};

CwtGrid parse_grid(const CwtArgs& a, const SampledFunction& f, const AnalyzingWavelet& psi) {
  std::size_t count = std::min(a.shifts, f.size());
  if (count == 0) throw ParameterError("--shifts must be positive");
  auto shifts = CwtGrid::linear(f.x_min, f.x_max(), count);
  if (a.scales == "auto") {
    // Finest scale resolving ψ with 8 samples up to a quarter of the record.
    const double r_min = 8.0 * f.dx / psi.support_width();
    const double r_max = std::max(r_min, 0.25 * (f.x_max() - f.x_min) / psi.support_width());
    return CwtGrid::geometric(r_min, r_max, 8, std::move(shifts));
  }
  std::vector<std::string> parts;
  std::stringstream ss(a.scales);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw ParameterError("--scales must be rmin:rmax:voices");
  try {
    return CwtGrid::geometric(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]),
                              std::move(shifts));
  } catch (const std::logic_error&) {
    throw ParameterError("--scales must be rmin:rmax:voices");
  }
}

int cmd_cwt(const CwtArgs& a, std::ostream& out) {
  auto in = open_in(a.in);
  const auto f = io::read_sampled_csv(in, a.x0, a.dx);
  if (f.size() < 2) throw FormatError("input needs at least two samples");
  const auto psi = with_admissibility(wavelet_by_name(a.wavelet));
  const auto grid = parse_grid(a, f, psi);
  const auto coeffs = cwt(f, psi, grid);

  out << "cwt: wavelet=" << psi.name() << " C_psi=" << fmt(psi.admissibility()->c_psi)
      << " scales=" << grid.scales.size() << " shifts=" << grid.shifts.size() << '\n';
  // Scale with the largest mean |coefficient|.
  Eigen::Index best = 0;
  coeffs.c.cwiseAbs().rowwise().sum().maxCoeff(&best);
  out << "peak_scale=" << fmt(grid.scales[static_cast<std::size_t>(best)]) << '\n';

  if (!a.out.empty()) {
    auto o = open_out(a.out);
    io::write_scalogram_csv(o, coeffs);
  }
  if (!a.heatmap.empty()) {
    auto o = open_out(a.heatmap);
    io::write_pgm(o, io::scalogram_heatmap(coeffs));
  }
  if (a.invert) {
    const auto rec = icwt(coeffs, psi);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      num += std::norm(rec.values[i] - f.values[i]);
      den += std::norm(f.values[i]);
    }
    out << "relative_l2_error=" << fmt(den > 0.0 ? std::sqrt(num / den) : std::sqrt(num)) << '\n';
    const std::string path =
        !a.recon.empty() ? a.recon : (a.out.empty() ? a.in : a.out) + ".recon.csv";
    auto o = open_out(path);
    io::write_sampled_csv(o, rec);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wavekit: discrete and continuous wavelet transforms"};
  app.require_subcommand(1);
  std::function<int()> action;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check QMF, Cuntz and ONB conditions of a filter");
  verify->add_option("--filter", va.filter, "builtin name or filter file")->required();
  verify->add_option("--tol", va.tol, "tolerance for qmf and cuntz checks")->capture_default_str();
  verify->add_option("--cuntz-n", va.cuntz_n, "periodic size for the Cuntz check (even)");
  verify->add_flag("--lawton", va.lawton, "decide the ONB question with the transfer operator");
  verify->callback([&] { action = [&] { return cmd_verify(va, out); }; });

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "forward/inverse DWT on CSV signals or PGM images");
  transform->add_option("mode", ta.mode, "dwt1d | idwt1d | dwt2d | idwt2d")
      ->required()
      ->check(CLI::IsMember({"dwt1d", "idwt1d", "dwt2d", "idwt2d"}));
  transform->add_option("--filter", ta.filter, "builtin name or filter file");
  transform->add_option("--levels", ta.levels, "decomposition levels")->capture_default_str();
  transform->add_option("--in", ta.in, "input CSV, PGM or container")->required();
  transform->add_option("--out", ta.out, "output container, CSV or PGM")->required();
  transform->add_option("--preview", ta.preview, "quadrant preview PGM (dwt2d)");
  transform->add_option("--quantize", ta.quantize, "uniform quantizer step");
  transform->callback([&] { action = [&] { return cmd_transform(ta, out); }; });

  CascadeArgs ca;
  auto* cascade = app.add_subcommand("cascade", "scaling function or wavelet on a dyadic grid");
  cascade->add_option("--filter", ca.filter, "builtin name or filter file")->required();
  cascade->add_option("--resolution", ca.resolution, "dyadic level J")->capture_default_str();
  cascade->add_option("--which", ca.which, "phi | psi")
      ->check(CLI::IsMember({"phi", "psi"}))
      ->capture_default_str();
  cascade->add_option("--out", ca.out, "CSV of x,value rows");
  cascade->callback([&] { action = [&] { return cmd_cascade(ca, out); }; });

  CwtArgs wa;
  auto* cwt_cmd = app.add_subcommand("cwt", "continuous wavelet transform of a CSV signal");
  cwt_cmd->add_option("--in", wa.in, "CSV: value or x,value per line")->required();
  cwt_cmd->add_option("--x0", wa.x0, "first abscissa for single-column input");
  cwt_cmd->add_option("--dx", wa.dx, "sample spacing for single-column input");
  cwt_cmd->add_option("--wavelet", wa.wavelet, "mexican_hat | haar | gaussian | cascade:<filter>:<J>")
      ->capture_default_str();
  cwt_cmd->add_option("--scales", wa.scales, "rmin:rmax:voices or auto")->capture_default_str();
  cwt_cmd->add_option("--shifts", wa.shifts, "number of shifts across the record")
      ->capture_default_str();
  cwt_cmd->add_option("--out", wa.out, "scalogram CSV");
  cwt_cmd->add_option("--heatmap", wa.heatmap, "scalogram PGM");
  cwt_cmd->add_flag("--invert", wa.invert, "reconstruct and report the relative L2 error");
  cwt_cmd->add_option("--recon", wa.recon, "reconstruction CSV (default <out>.recon.csv)");
  cwt_cmd->callback([&] { action = [&] { return cmd_cwt(wa, out); }; });

  std::vector<const char*> argv{"wavekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "wavekit: " << e.what() << '\n';
    return kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "wavekit: " << e.what() << '\n';
    return kInputError;
  } catch (const DegeneracyError& e) {
    err << "wavekit: " << e.what() << " [eigenspace dimension " << e.dimension() << "]\n";
    return kNumericError;
  } catch (const NumericError& e) {
    err << "wavekit: " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace wavekit::cli
