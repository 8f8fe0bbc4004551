#include "rcb/io.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rcb::io {

namespace {

using json = nlohmann::json;

double number(const json& value, std::string_view what) {
  if (!value.is_number()) throw Error(fmt::format("{}: expected a number", what));
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw Error(fmt::format("{}: non-finite number", what));
  return x;
}

std::pair<double, double> pair(const json& value, std::string_view what) {
  if (!value.is_array() || value.size() != 2)
    throw Error(fmt::format("{}: expected a two-element array", what));
  return {number(value[0], what), number(value[1], what)};
}

const json& list_field(const json& doc, const char* name) {
  if (!doc.contains(name) || !doc[name].is_array())
    throw Error(fmt::format("missing array field \"{}\"", name));
  return doc[name];
}

std::string pair_list(const auto& first, const auto& second, Eigen::Index size) {
  std::string out = "[";
  for (Eigen::Index j = 0; j < size; ++j) {
    if (j > 0) out += ", ";
    out += fmt::format("[{}, {}]", format_number(first(j)), format_number(second(j)));
  }
  return out + "]";
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

AnyCurve parse_curve(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(fmt::format("malformed curve file: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw Error("curve file needs a string field \"kind\"");
  const auto kind = doc["kind"].get<std::string>();
  const json& polygon = list_field(doc, "polygon");
  const json& weights = list_field(doc, "weights");
  if (polygon.size() != weights.size()) throw Error("polygon and weights differ in length");
  const auto size = Eigen::Index(polygon.size());

  if (kind == "complex") {
    ComplexVector<double> z(size), w(size);
    for (Eigen::Index j = 0; j < size; ++j) {
      const auto [zr, zi] = pair(polygon[j], "polygon entry");
      const auto [wr, wi] = pair(weights[j], "weight entry");
      z(j) = Cx(zr, zi);
      w(j) = Cx(wr, wi);
    }
    return CxBezierd(std::move(z), std::move(w));
  }
  if (kind == "real") {
    RealBezierd::Points pts(size, 2);
    RealBezierd::Weights w(size);
    for (Eigen::Index j = 0; j < size; ++j) {
      std::tie(pts(j, 0), pts(j, 1)) = pair(polygon[j], "polygon entry");
      w(j) = number(weights[j], "weight entry");
    }
    return RealBezierd(std::move(pts), std::move(w));
  }
  throw Error(fmt::format("unknown curve kind \"{}\"", kind));
}

AnyCurve read_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_curve(buffer.str());
}

std::string to_json(const CxBezierd& curve) {
  const auto& z = curve.polygon();
  const auto& w = curve.weights();
  return fmt::format("{{\n  \"kind\": \"complex\",\n  \"polygon\": {},\n  \"weights\": {}\n}}\n",
                     pair_list(z.real(), z.imag(), z.size()),
                     pair_list(w.real(), w.imag(), w.size()));
}

std::string to_json(const RealBezierd& curve) {
  const auto& p = curve.points();
  std::string weights = "[";
  for (Eigen::Index j = 0; j < curve.weights().size(); ++j) {
    if (j > 0) weights += ", ";
    weights += format_number(curve.weights()(j));
  }
  weights += "]";
  return fmt::format("{{\n  \"kind\": \"real\",\n  \"polygon\": {},\n  \"weights\": {}\n}}\n",
                     pair_list(p.col(0), p.col(1), p.rows()), weights);
}

std::string to_json(const AnyCurve& curve) {
  return std::visit([](const auto& c) { return to_json(c); }, curve);
}

void write_curve(const std::filesystem::path& path, const AnyCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << to_json(curve);
}

CxBezierd as_complex(const AnyCurve& curve) {
  if (const auto* c = std::get_if<CxBezierd>(&curve)) return *c;
  return from_real(std::get<RealBezierd>(curve));
}

}  // namespace rcb::io
