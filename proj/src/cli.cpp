#include "rcb/cli.hpp"

#include "rcb/gallery.hpp"
#include "rcb/io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>

namespace rcb::cli {

namespace {

double parse_real(std::string_view text) {
  double value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw Error(fmt::format("not a finite number: \"{}\"", text));
  return value;
}

/// "re,im" or a bare real.
Cx parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(fmt::format("cannot write {}", path));
  file << text;
}

CxBezierd require_complex(const io::AnyCurve& curve) {
  if (!std::holds_alternative<CxBezierd>(curve)) throw Error("command requires a complex curve");
  return std::get<CxBezierd>(curve);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational complex Bezier curves: reduce, check, convert, transform, render"};
  app.name("rcb");
  app.require_subcommand(1);

  std::string input, output;
  std::vector<std::string> inputs;

  auto* reduce_cmd = app.add_subcommand("reduce", "Cancel common factors of numerator and denominator");
  reduce_cmd->add_option("input", input, "Curve file")->required();
  reduce_cmd->add_option("-o,--output", output, "Output curve file")->required();

  auto* check_cmd = app.add_subcommand("check", "Irreducibility test (and conic test for cubics)");
  check_cmd->add_option("input", input, "Curve file")->required();

  std::string direction;
  bool convert_reduce = false;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between complex and real forms");
  convert_cmd->add_option("input", input, "Curve file")->required();
  convert_cmd->add_option("direction", direction, "to-real or to-complex")
      ->required()
      ->check(CLI::IsMember({"to-real", "to-complex"}));
  convert_cmd->add_option("-o,--output", output, "Output curve file")->required();
  convert_cmd->add_flag("--reduce", convert_reduce, "Reduce after converting to complex");

  std::vector<std::string> mobius_args, elevate_args;
  std::string reparam_arg, scale_arg;
  bool invert_flag = false;
  auto* transform_cmd = app.add_subcommand("transform", "Apply a curve transformation");
  transform_cmd->add_option("input", input, "Complex curve file")->required();
  transform_cmd->add_option("-o,--output", output, "Output curve file")->required();
  auto* mobius_opt = transform_cmd->add_option("--mobius", mobius_args,
                                               "f(z) = (c + d z)/(a + b z); values a b c d as re,im")
                         ->expected(4)
                         ->allow_extra_args(false);
  auto* invert_opt = transform_cmd->add_flag("--invert", invert_flag, "Image under z -> 1/z");
  auto* elevate_opt = transform_cmd->add_option("--elevate", elevate_args,
                                                "Degree elevation by alpha(1-t) + beta t")
                          ->expected(2)
                          ->allow_extra_args(false);
  auto* reparam_opt = transform_cmd->add_option("--reparam", reparam_arg, "Parameter change rho > 0");
  auto* scale_opt = transform_cmd->add_option("--scale", scale_arg, "Multiply weights by lambda");
  for (auto* a : {mobius_opt, invert_opt, elevate_opt, reparam_opt, scale_opt})
    for (auto* b : {mobius_opt, invert_opt, elevate_opt, reparam_opt, scale_opt})
      if (a != b) a->excludes(b);

  int samples = 200;
  double t0 = 0.0, t1 = 1.0;
  std::string svg_path, csv_path;
  auto* render_cmd = app.add_subcommand("render", "Sample curves to SVG or CSV");
  render_cmd->add_option("inputs", inputs, "Curve files")->required();
  render_cmd->add_option("--samples", samples, "Number of uniform samples")
      ->check(CLI::Range(2, 1000000));
  render_cmd->add_option("--t0", t0, "Start parameter");
  render_cmd->add_option("--t1", t1, "End parameter");
  auto* svg_opt = render_cmd->add_option("--svg", svg_path, "SVG output path");
  auto* csv_opt = render_cmd->add_option("--csv", csv_path, "CSV output path");
  svg_opt->excludes(csv_opt);
  csv_opt->excludes(svg_opt);

  std::string gallery_name, conic_path, inverted_path;
  double gallery_a = 0.0;
  auto* gallery_cmd = app.add_subcommand("gallery", "Write a classical curve and its conic pre-image");
  gallery_cmd->add_option("name", gallery_name, "cissoid, cardioid or lemniscate")
      ->required()
      ->check(CLI::IsMember({"cissoid", "cardioid", "lemniscate"}));
  gallery_cmd->add_option("--a", gallery_a, "Size parameter (default 1/2 for cissoid, 1 otherwise)");
  gallery_cmd->add_option("--conic", conic_path, "Conic output (default <name>_conic.json)");
  gallery_cmd->add_option("--inverted", inverted_path,
                          "Inverted curve output (default <name>_inverted.json)");

  std::vector<const char*> argv{"rcb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*reduce_cmd) {
      const auto curve = io::as_complex(io::read_curve(input));
      const auto reduced = reduce(curve);
      io::write_curve(output, reduced);
      fmt::print(out, "original degree: {}\nreduced degree: {}\n", curve.degree(), reduced.degree());
      return kOk;
    }

    if (*check_cmd) {
      const auto curve = io::as_complex(io::read_curve(input));
      const auto test = irreducibility_test(curve);
      fmt::print(out, "degree: {}\nirreducible: {}\nresultant modulus: {}\nthreshold: {}\n",
                 curve.degree(), test.coprime ? "yes" : "no",
                 io::format_number(std::abs(test.resultant)),
                 io::format_number(Tolerances{}.res * test.scale));
      if (curve.degree() == 3) fmt::print(out, "conic: {}\n", test.coprime ? "no" : "yes");
      fmt::print(out, "status: {}\n", test.coprime ? "irreducible" : "reducible");
      return test.coprime ? kOk : kFalse;
    }

    if (*convert_cmd) {
      const auto curve = io::read_curve(input);
      if (direction == "to-real") {
        io::write_curve(output, to_real(require_complex(curve)));
      } else {
        if (!std::holds_alternative<RealBezierd>(curve))
          throw Error("to-complex requires a real curve");
        auto converted = from_real(std::get<RealBezierd>(curve));
        if (convert_reduce) converted = reduce(converted);
        io::write_curve(output, converted);
      }
      return kOk;
    }

    if (*transform_cmd) {
      const auto curve = require_complex(io::read_curve(input));
      std::optional<CxBezierd> result;
      if (!mobius_args.empty()) {
        const MobiusMap<double> map(parse_complex(mobius_args[0]), parse_complex(mobius_args[1]),
                                    parse_complex(mobius_args[2]), parse_complex(mobius_args[3]));
        result = mobius_image(curve, map);
      } else if (invert_flag) {
        result = invert(curve);
      } else if (!elevate_args.empty()) {
        result = degree_elevate(curve, parse_complex(elevate_args[0]), parse_complex(elevate_args[1]));
      } else if (*reparam_opt) {
        result = reparametrize(curve, parse_real(reparam_arg));
      } else if (*scale_opt) {
        result = scale_weights(curve, parse_complex(scale_arg));
      } else {
        throw Error("transform needs one of --mobius, --invert, --elevate, --reparam, --scale");
      }
      io::write_curve(output, *result);
      return kOk;
    }

    if (*render_cmd) {
      std::vector<CxBezierd> curves;
      for (const auto& path : inputs) curves.push_back(io::as_complex(io::read_curve(path)));
      if (!svg_path.empty()) {
        write_text(svg_path, io::render_svg(curves, samples, t0, t1));
      } else if (!csv_path.empty()) {
        if (curves.size() != 1) throw Error("CSV output takes exactly one curve");
        write_text(csv_path, io::render_csv(curves.front(), samples, t0, t1));
      } else {
        throw Error("render needs --svg or --csv");
      }
      return kOk;
    }

    if (*gallery_cmd) {
      using Constructor = std::function<InversionPair<double>(double)>;
      Constructor make;
      double a = 1.0;
      if (gallery_name == "cissoid") {
        make = cissoid<double>;
        a = 0.5;
      } else if (gallery_name == "cardioid") {
        make = cardioid<double>;
      } else {
        make = lemniscate<double>;
      }
      if (gallery_cmd->count("--a") > 0) a = gallery_a;
      const auto pair = make(a);
      io::write_curve(conic_path.empty() ? gallery_name + "_conic.json" : conic_path, pair.conic);
      io::write_curve(inverted_path.empty() ? gallery_name + "_inverted.json" : inverted_path,
                      pair.inverted);
      return kOk;
    }
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace rcb::cli
