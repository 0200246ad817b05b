// skewpbw: classification, PBW/Koszul analysis and deformation checks for
// skew PBW presentations over Q.

#include <skewpbw/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

std::pair<std::size_t, std::size_t> parse_bounds(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--ext-bounds", "expected I,J");
  try {
    return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--ext-bounds", "expected two non-negative integers I,J");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skewpbw;
  CLI::App app{"Skew PBW extensions over Q: classification, PBW bases, Koszulity, PBW deformations"};
  app.require_subcommand(1);

  std::vector<std::string> raw_params;
  std::string input, selector, ext_bounds = "4,4";
  cli::Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--param", raw_params, "Bind a parameter, NAME=RATIONAL (repeatable)");
    sub->add_flag("--json", opt.json, "Emit the JSON report");
    sub->add_option("--budget", opt.analysis.budget, "Rule budget for bounded completion")->capture_default_str();
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree", opt.analysis.max_degree, "Degree bound N for Hilbert prefixes")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "Shape diagnostics and subclass flags");
  classify->add_option("input", input, "File path or fixture:NAME")->required();
  add_common(classify);

  auto* analyze = app.add_subcommand("analyze", "Full report: PBW basis, Koszul verdict, Ext table, Hilbert prefixes");
  analyze->add_option("input", input, "File path or fixture:NAME")->required();
  analyze->add_option("--ext-bounds", ext_bounds, "Ext table bounds I,J")->capture_default_str();
  add_common(analyze);
  add_degree(analyze);

  auto* table = app.add_subcommand("table", "Subclass table over a fixture corpus");
  table->add_option("corpus", selector, "sridharan, core or all")->required();
  table->add_option("--expect", opt.expect, "Compare against an expectation file");
  add_common(table);

  auto* deform = app.add_subcommand("deform", "PBW deformation conditions (I), (J)");
  deform->add_option("input", input, "File path or fixture:NAME")->required();
  add_common(deform);
  add_degree(deform);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseError;
  }

  cli::Result res;
  try {
    for (const auto& b : raw_params) {
      auto [name, value] = cli::parse_param_binding(b);
      opt.params[name] = value;
    }
    std::tie(opt.analysis.ext_i, opt.analysis.ext_j) = parse_bounds(ext_bounds);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return cli::kParseError;
  }

  if (*classify)
    res = cli::run_classify(input, opt);
  else if (*analyze)
    res = cli::run_analyze(input, opt);
  else if (*table)
    res = cli::run_table(selector, opt);
  else
    res = cli::run_deform(input, opt);

  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
