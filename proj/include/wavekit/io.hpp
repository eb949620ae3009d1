// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wavekit/cascade.hpp"
#include "wavekit/cwt.hpp"
#include "wavekit/filters.hpp"
#include "wavekit/image2d.hpp"
#include "wavekit/subband.hpp"

namespace wavekit::io {

/// `a`, `a+bi`, `a-bi`, `bi`. FormatError otherwise.
Complex parse_complex(const std::string& text);

/// 17 significant digits; the imaginary part is written only when it is
/// nonzero or a negative zero.
std::string format_complex(Complex c);
std::string format_real(double v);

/// Plain-text filter file:
///   name: <identifier>
///   start: <integer>
///   coeffs: <space-separated values>
FilterSpec parse_filter_file(std::istream& in);

/// Builtin name, or a path to a filter file when no builtin matches.
FilterSpec resolve_filter(const std::string& name_or_path);

/// One value per line; blank lines and `#` comments skipped.
Signal read_signal_csv(std::istream& in);
void write_signal_csv(std::ostream& out, const Signal& s);

/// Columns `x,value`, or a single value column placed at x0 + i·dx.
SampledFunction read_sampled_csv(std::istream& in, double x0, double dx);
void write_sampled_csv(std::ostream& out, const SampledFunction& f);

/// P2 or P5 grayscale; pixel values are kept as read.
Plane read_pgm(std::istream& in);
/// Real parts rounded half away from zero and clamped to [0, 255].
void write_pgm(std::ostream& out, const Plane& img, bool binary = true);

/// Each quadrant affinely rescaled to 0..255, nested a/h/v/d layout.
Plane preview_layout(const ImagePyramid& p);

/// Header lines followed by labeled CSV blocks; see README for the layout.
struct PyramidContainer {
  std::string filter;
  std::variant<Pyramid1D, ImagePyramid> pyramid;
};

void write_container(std::ostream& out, const PyramidContainer& c);
PyramidContainer read_container(std::istream& in);

/// `x,value` rows at the grid resolution.
void write_dyadic_csv(std::ostream& out, const DyadicFunction& f);

/// Header rows `scales,...` and `shifts,...`, then one row per scale.
void write_scalogram_csv(std::ostream& out, const CwtCoefficients& c);
/// |c| mapped affinely to 0..255; rows are scales.
Plane scalogram_heatmap(const CwtCoefficients& c);

}  // namespace wavekit::io
