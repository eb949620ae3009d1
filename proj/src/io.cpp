// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavekit Authors

#include "wavekit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit::io {
namespace {

constexpr const char* kMagic = "wavekit-pyr1";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool skippable(const std::string& line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

long long parse_integer(const std::string& text, const char* what) {
  const auto t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || errno != 0 || *end != '\0') {
    throw FormatError(std::string("malformed ") + what + ": '" + text + "'");
  }
  return v;
}

double parse_double(const std::string& text, const char* what) {
  const auto t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || *end != '\0') {
    throw FormatError(std::string("malformed ") + what + ": '" + text + "'");
  }
  return v;
}

// "key: value" header line.
std::pair<std::string, std::string> key_value(const std::string& line) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) throw FormatError("expected 'key: value', got '" + line + "'");
  return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

std::vector<Complex> parse_row(const std::string& line) {
  std::vector<Complex> row;
  for (const auto& cell : split(line, ',')) row.push_back(parse_complex(cell));
  return row;
}

void write_plane_rows(std::ostream& out, const Plane& p) {
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    for (Eigen::Index c = 0; c < p.cols(); ++c) {
      out << (c ? "," : "") << format_complex(p(r, c));
    }
    out << '\n';
  }
}

Plane plane_from_rows(const std::vector<std::string>& lines, Eigen::Index rows, Eigen::Index cols,
                      const std::string& label) {
  if (static_cast<Eigen::Index>(lines.size()) != rows) {
    throw FormatError("block [" + label + "] has " + std::to_string(lines.size()) +
                      " rows, expected " + std::to_string(rows));
  }
  Plane p(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto row = parse_row(lines[static_cast<std::size_t>(r)]);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError("block [" + label + "] row " + std::to_string(r + 1) + " has " +
                        std::to_string(row.size()) + " values, expected " + std::to_string(cols));
    }
    for (Eigen::Index c = 0; c < cols; ++c) p(r, c) = row[static_cast<std::size_t>(c)];
  }
  return p;
}

Signal signal_from_lines(const std::vector<std::string>& lines, std::size_t len,
                         const std::string& label) {
  if (lines.size() != len) {
    throw FormatError("block [" + label + "] has " + std::to_string(lines.size()) +
                      " values, expected " + std::to_string(len));
  }
  Signal s;
  s.reserve(len);
  for (const auto& l : lines) s.push_back(parse_complex(l));
  return s;
}

Plane rescale_to_byte(const Plane& p) {
  if (p.size() == 0) return p;
  const Eigen::MatrixXd re = p.real();
  const double lo = re.minCoeff();
  const double hi = re.maxCoeff();
  if (hi - lo <= 0.0) return Plane::Constant(p.rows(), p.cols(), Complex(128.0, 0.0));
  return (((re.array() - lo) * (255.0 / (hi - lo))).matrix()).cast<Complex>();
}

// Reads a whitespace-delimited PGM header token, skipping comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  if (tok.empty()) throw FormatError("PGM: unexpected end of header");
  return tok;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto t = trim(text);
  if (t.empty()) throw FormatError("empty numeric value");
  const char* s = t.c_str();
  char* end = nullptr;
  const double first = std::strtod(s, &end);
  if (end == s) throw FormatError("malformed number '" + t + "'");
  std::string rest(end);
  if (rest.empty()) return {first, 0.0};
  if (rest == "i") return {0.0, first};
  if (rest.back() != 'i') throw FormatError("malformed number '" + t + "'");
  rest.pop_back();
  if (rest.empty() || (rest.front() != '+' && rest.front() != '-')) {
    throw FormatError("malformed number '" + t + "'");
  }
  char* end2 = nullptr;
  const double second = std::strtod(rest.c_str(), &end2);
  if (end2 == rest.c_str() || *end2 != '\0') throw FormatError("malformed number '" + t + "'");
  return {first, second};
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0 && !std::signbit(c.imag())) return format_real(c.real());
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

FilterSpec parse_filter_file(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto [k, v] = key_value(line);
    fields[k] = v;
  }
  for (const char* key : {"name", "start", "coeffs"}) {
    if (!fields.count(key)) throw FormatError(std::string("filter file lacks '") + key + ":'");
  }
  const auto start = parse_integer(fields["start"], "filter start index");
  std::vector<Complex> taps;
  std::istringstream is(fields["coeffs"]);
  std::string tok;
  while (is >> tok) taps.push_back(parse_complex(tok));
  const bool normalized = std::abs(std::accumulate(taps.begin(), taps.end(), Complex{}) - 1.0) <= 1e-12;
  return FilterSpec(fields["name"], static_cast<int>(start), std::move(taps), normalized);
}

FilterSpec resolve_filter(const std::string& name_or_path) {
  const auto names = builtin_filter_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return builtin_filter(name_or_path);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw CatalogError("unknown filter '" + name_or_path +
                       "' (not a builtin and no such filter file)");
  }
  return parse_filter_file(in);
}

Signal read_signal_csv(std::istream& in) {
  Signal s;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    s.push_back(parse_complex(line));
  }
  return s;
}

void write_signal_csv(std::ostream& out, const Signal& s) {
  for (const auto& v : s) out << format_complex(v) << '\n';
}

SampledFunction read_sampled_csv(std::istream& in, double x0, double dx) {
  std::vector<double> xs;
  std::vector<Complex> vs;
  std::string line;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    const auto cells = split(line, ',');
    if (columns == 0) columns = cells.size();
    if (cells.size() != columns || columns > 2) {
      throw FormatError("CSV rows must consistently hold 'value' or 'x,value'");
    }
    if (columns == 2) {
      xs.push_back(parse_double(cells[0], "x coordinate"));
      vs.push_back(parse_complex(cells[1]));
    } else {
      vs.push_back(parse_complex(cells[0]));
    }
  }
  if (vs.empty()) throw FormatError("CSV input holds no samples");
  if (columns == 1) return SampledFunction{x0, dx, std::move(vs)};
  if (xs.size() < 2) throw FormatError("two-column CSV needs at least two rows");
  const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(step > 0.0)) throw FormatError("x coordinates must increase");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - (xs.front() + static_cast<double>(i) * step)) > 1e-6 * step) {
      throw FormatError("x coordinates must be uniformly spaced");
    }
  }
  return SampledFunction{xs.front(), step, std::move(vs)};
}

void write_sampled_csv(std::ostream& out, const SampledFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << format_real(f.x(i)) << ',' << format_complex(f.values[i]) << '\n';
  }
}

Plane read_pgm(std::istream& in) {
  const auto magic = pgm_token(in);
  if (magic != "P2" && magic != "P5") throw FormatError("PGM: unsupported magic '" + magic + "'");
  const auto cols = parse_integer(pgm_token(in), "PGM width");
  const auto rows = parse_integer(pgm_token(in), "PGM height");
  const auto maxval = parse_integer(pgm_token(in), "PGM maxval");
  if (cols <= 0 || rows <= 0 || maxval <= 0 || maxval > 65535) {
    throw FormatError("PGM: bad dimensions or maxval");
  }
  Plane img(rows, cols);
  if (magic == "P2") {
    for (long long r = 0; r < rows; ++r) {
      for (long long c = 0; c < cols; ++c) {
        const auto v = parse_integer(pgm_token(in), "PGM pixel");
        if (v < 0 || v > maxval) throw FormatError("PGM: pixel exceeds maxval");
        img(r, c) = static_cast<double>(v);
      }
    }
    return img;
  }
  const bool wide = maxval > 255;
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      int hi = in.get();
      if (hi == EOF) throw FormatError("PGM: truncated pixel data");
      int v = hi;
      if (wide) {
        const int lo = in.get();
        if (lo == EOF) throw FormatError("PGM: truncated pixel data");
        v = (hi << 8) | lo;
      }
      img(r, c) = static_cast<double>(v);
    }
  }
  return img;
}

void write_pgm(std::ostream& out, const Plane& img, bool binary) {
  out << (binary ? "P5" : "P2") << '\n' << img.cols() << ' ' << img.rows() << "\n255\n";
  for (Eigen::Index r = 0; r < img.rows(); ++r) {
    for (Eigen::Index c = 0; c < img.cols(); ++c) {
      const double v = std::clamp(std::round(img(r, c).real()), 0.0, 255.0);
      if (binary) {
        out.put(static_cast<char>(static_cast<unsigned char>(v)));
      } else {
        out << (c ? " " : "") << static_cast<int>(v);
      }
    }
    if (!binary) out << '\n';
  }
}

Plane preview_layout(const ImagePyramid& p) {
  ImagePyramid scaled;
  scaled.approx = rescale_to_byte(p.approx);
  for (const auto& t : p.levels) {
    scaled.levels.push_back(
        DetailTriple{rescale_to_byte(t.h), rescale_to_byte(t.v), rescale_to_byte(t.d)});
  }
  return quadrant_layout(scaled);
}

void write_container(std::ostream& out, const PyramidContainer& c) {
  out << "magic: " << kMagic << '\n';
  out << "filter: " << c.filter << '\n';
  if (const auto* p1 = std::get_if<Pyramid1D>(&c.pyramid)) {
    out << "levels: " << p1->levels() << '\n';
    out << "len: " << p1->coefficient_count() << '\n';
    out << "[approx]\n";
    write_signal_csv(out, p1->approx);
    for (std::size_t l = 0; l < p1->levels(); ++l) {
      out << "[detail-" << l + 1 << "]\n";
      write_signal_csv(out, p1->details[l]);
    }
    return;
  }
  const auto& p2 = std::get<ImagePyramid>(c.pyramid);
  const auto scale = Eigen::Index{1} << p2.level_count();
  out << "levels: " << p2.level_count() << '\n';
  out << "dims: " << p2.approx.rows() * scale << 'x' << p2.approx.cols() * scale << '\n';
  out << "[a]\n";
  write_plane_rows(out, p2.approx);
  for (std::size_t l = 0; l < p2.level_count(); ++l) {
    const auto& t = p2.levels[l];
    out << "[h-" << l + 1 << "]\n";
    write_plane_rows(out, t.h);
    out << "[v-" << l + 1 << "]\n";
    write_plane_rows(out, t.v);
    out << "[d-" << l + 1 << "]\n";
    write_plane_rows(out, t.d);
  }
}

PyramidContainer read_container(std::istream& in) {
  std::map<std::string, std::string> header;
  std::map<std::string, std::vector<std::string>> blocks;
  std::string line;
  std::string current;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw FormatError("container: malformed block label '" + t + "'");
      current = t.substr(1, t.size() - 2);
      if (blocks.count(current)) throw FormatError("container: duplicate block [" + current + "]");
      blocks[current];
      continue;
    }
    if (current.empty()) {
      auto [k, v] = key_value(t);
      header[k] = v;
    } else {
      blocks[current].push_back(t);
    }
  }
  if (header["magic"] != kMagic) throw FormatError("container: missing 'magic: wavekit-pyr1'");
  if (!header.count("filter") || !header.count("levels")) {
    throw FormatError("container: header needs filter and levels");
  }
  const auto levels = parse_integer(header["levels"], "level count");
  if (levels < 1 || levels > 62) throw FormatError("container: level count out of range");
  auto block = [&](const std::string& label) -> const std::vector<std::string>& {
    const auto it = blocks.find(label);
    if (it == blocks.end()) throw FormatError("container: missing block [" + label + "]");
    return it->second;
  };

  PyramidContainer out;
  out.filter = header["filter"];
  const std::size_t expected_blocks =
      header.count("len") ? static_cast<std::size_t>(levels) + 1 : 3 * static_cast<std::size_t>(levels) + 1;

  if (header.count("len")) {
    const auto len = parse_integer(header["len"], "signal length");
    if (len <= 0 || len % (1LL << levels) != 0) {
      throw FormatError("container: length is not divisible by 2^levels");
    }
    Pyramid1D p;
    for (long long l = 1; l <= levels; ++l) {
      const auto label = "detail-" + std::to_string(l);
      p.details.push_back(signal_from_lines(block(label), static_cast<std::size_t>(len >> l), label));
    }
    p.approx = signal_from_lines(block("approx"), static_cast<std::size_t>(len >> levels), "approx");
    out.pyramid = std::move(p);
  } else if (header.count("dims")) {
    const auto parts = split(header["dims"], 'x');
    if (parts.size() != 2) throw FormatError("container: dims must be <rows>x<cols>");
    const auto rows = parse_integer(parts[0], "row count");
    const auto cols = parse_integer(parts[1], "column count");
    const auto div = 1LL << levels;
    if (rows <= 0 || cols <= 0 || rows % div != 0 || cols % div != 0) {
      throw FormatError("container: dims are not divisible by 2^levels");
    }
    ImagePyramid p;
    for (long long l = 1; l <= levels; ++l) {
      const auto r = rows >> l;
      const auto c = cols >> l;
      const auto sfx = "-" + std::to_string(l);
      p.levels.push_back(DetailTriple{plane_from_rows(block("h" + sfx), r, c, "h" + sfx),
                                      plane_from_rows(block("v" + sfx), r, c, "v" + sfx),
                                      plane_from_rows(block("d" + sfx), r, c, "d" + sfx)});
    }
    p.approx = plane_from_rows(block("a"), rows >> levels, cols >> levels, "a");
    out.pyramid = std::move(p);
  } else {
    throw FormatError("container: header needs 'len' or 'dims'");
  }
  if (blocks.size() != expected_blocks) {
    throw FormatError("container: unexpected extra blocks");
  }
  return out;
}

void write_dyadic_csv(std::ostream& out, const DyadicFunction& f) {
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    out << format_real(f.x(k)) << ',' << format_complex(f.values[k]) << '\n';
  }
}

void write_scalogram_csv(std::ostream& out, const CwtCoefficients& c) {
  out << "scales";
  for (double r : c.grid.scales) out << ',' << format_real(r);
  out << "\nshifts";
  for (double s : c.grid.shifts) out << ',' << format_real(s);
  out << '\n';
  write_plane_rows(out, c.c);
}

Plane scalogram_heatmap(const CwtCoefficients& c) {
  const Eigen::MatrixXd mag = c.c.cwiseAbs();
  const double hi = mag.size() ? mag.maxCoeff() : 0.0;
  if (!(hi > 0.0)) return Plane::Zero(c.c.rows(), c.c.cols());
  return (mag * (255.0 / hi)).cast<Complex>();
}

}  // namespace wavekit::io
