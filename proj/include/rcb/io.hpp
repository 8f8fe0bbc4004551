// Curve files (JSON) and curve sampling to CSV / SVG.
//
// File layout:
//   {"kind": "complex", "polygon": [[re, im], ...], "weights": [[re, im], ...]}
//   {"kind": "real",    "polygon": [[x, y], ...],   "weights": [w, ...]}
// Numbers are written with 17 significant digits so a write/read cycle is
// bit-exact.
#pragma once

#include "rcb/curve.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rcb::io {

using AnyCurve = std::variant<CxBezierd, RealBezierd>;

AnyCurve parse_curve(std::string_view text);
AnyCurve read_curve(const std::filesystem::path& path);

std::string to_json(const CxBezierd& curve);
std::string to_json(const RealBezierd& curve);
std::string to_json(const AnyCurve& curve);
void write_curve(const std::filesystem::path& path, const AnyCurve& curve);

/// Complex view of either kind; real curves go through from_real.
CxBezierd as_complex(const AnyCurve& curve);

/// printf-style %.17g.
std::string format_number(double value);

struct Sample {
  double t;
  Cx point;
  bool pole;
};

/// Uniform samples over [t0, t1]; poles are flagged, not thrown.
std::vector<Sample> sample_curve(const CxBezierd& curve, int count, double t0, double t1);

/// "t,x,y" rows for finite samples. Throws when every sample is a pole.
std::string render_csv(const CxBezierd& curve, int count, double t0, double t1);

/// SVG 1.1 plot. Each curve gets polylines (broken at poles), its control
/// polygon as a dashed path and its control points as circles. The view box
/// fits the finite samples plus a 10% margin.
std::string render_svg(std::span<const CxBezierd> curves, int count, double t0, double t1);

}  // namespace rcb::io
