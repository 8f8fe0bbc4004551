#include "rcb/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <limits>

namespace rcb::io {

std::vector<Sample> sample_curve(const CxBezierd& curve, int count, double t0, double t1) {
  if (count < 2) throw Error("need at least two samples");
  if (!std::isfinite(t0) || !std::isfinite(t1)) throw Error("parameter range must be finite");
  std::vector<Sample> samples;
  samples.reserve(std::size_t(count));
  for (int k = 0; k < count; ++k) {
    const double t = t0 + (t1 - t0) * double(k) / double(count - 1);
    try {
      const Cx z = eval(curve, t);
      samples.push_back({t, z, !is_finite(z)});
    } catch (const PoleError&) {
      samples.push_back({t, Cx(), true});
    }
  }
  return samples;
}

std::string render_csv(const CxBezierd& curve, int count, double t0, double t1) {
  std::string out = "t,x,y\n";
  bool any = false;
  for (const auto& s : sample_curve(curve, count, t0, t1)) {
    if (s.pole) continue;
    any = true;
    out += fmt::format("{},{},{}\n", format_number(s.t), format_number(s.point.real()),
                       format_number(s.point.imag()));
  }
  if (!any) throw Error("every sample is a pole");
  return out;
}

namespace {

constexpr std::array kColors = {"#1f4fd1", "#d1261f", "#1f9d3a", "#8a2be2"};
constexpr double kWidth = 800.0;

struct Frame {
  double x0, y1, scale;
  double x(double v) const { return (v - x0) * scale; }
  double y(double v) const { return (y1 - v) * scale; }
};

}  // namespace

std::string render_svg(std::span<const CxBezierd> curves, int count, double t0, double t1) {
  std::vector<std::vector<Sample>> sampled;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& curve : curves) {
    sampled.push_back(sample_curve(curve, count, t0, t1));
    for (const auto& s : sampled.back()) {
      if (s.pole) continue;
      xmin = std::min(xmin, s.point.real());
      xmax = std::max(xmax, s.point.real());
      ymin = std::min(ymin, s.point.imag());
      ymax = std::max(ymax, s.point.imag());
    }
  }
  if (!std::isfinite(xmin)) throw Error("every sample is a pole");

  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double mx = 0.1 * std::max(xmax - xmin, 0.1 * span);
  const double my = 0.1 * std::max(ymax - ymin, 0.1 * span);
  xmin -= mx; xmax += mx; ymin -= my; ymax += my;
  const Frame frame{xmin, ymax, kWidth / (xmax - xmin)};
  const double height = (ymax - ymin) * frame.scale;

  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.3f}\" height=\"{:.3f}\" "
      "viewBox=\"0 0 {:.3f} {:.3f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, height, kWidth, height);

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* color = kColors[c % kColors.size()];
    out += fmt::format("<g id=\"curve{}\">\n", c);
    std::string points;
    const auto flush = [&] {
      if (!points.empty())
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n",
                           color, points);
      points.clear();
    };
    for (const auto& s : sampled[c]) {
      if (s.pole) { flush(); continue; }
      if (!points.empty()) points += ' ';
      points += fmt::format("{:.3f},{:.3f}", frame.x(s.point.real()), frame.y(s.point.imag()));
    }
    flush();

    const auto& z = curves[c].polygon();
    std::string path;
    for (Eigen::Index j = 0; j < z.size(); ++j)
      path += fmt::format("{}{:.3f},{:.3f}", j == 0 ? "M" : " L", frame.x(z(j).real()),
                          frame.y(z(j).imag()));
    out += fmt::format(
        "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n",
        path, color);
    for (Eigen::Index j = 0; j < z.size(); ++j)
      out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"{}\"/>\n",
                         frame.x(z(j).real()), frame.y(z(j).imag()), color);
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

}  // namespace rcb::io
