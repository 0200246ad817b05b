#pragma once

/**
 * @file cli.hpp
 * @brief Commands behind the skewpbw executable, callable in-process.
 *
 * Exit codes: 0 success, 1 parse or usage error, 2 invalid shape, refuted
 * verdict or expectation mismatch, 3 resource cap.
 */

#include "skewpbw/error.hpp"
#include "skewpbw/fixtures.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/report.hpp"

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace skewpbw::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kRefuted = 2, kResourceCap = 3 };

struct Options {
  ParamBinding params;
  AnalysisOptions analysis;
  bool json = false;
  std::string expect;  // empty: no comparison
};

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Parses "NAME=RATIONAL".
inline std::pair<std::string, Rational> parse_param_binding(std::string_view s) {
  auto eq = s.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw Error(Errc::SyntaxError, "parameter binding '" + std::string(s) + "' is not NAME=RATIONAL");
  auto value = parse_rational(s.substr(eq + 1));
  if (!value) throw Error(Errc::SyntaxError, "parameter value in '" + std::string(s) + "' is not a rational number");
  return {std::string(s.substr(0, eq)), *value};
}

/// Reads "fixture:NAME" from the built-in corpus, anything else as a file path.
inline Presentation load_input(const std::string& input, const ParamBinding& params) {
  constexpr std::string_view prefix = "fixture:";
  if (input.starts_with(prefix)) return fixture(std::string_view(input).substr(prefix.size()), params);
  std::ifstream in(input);
  if (!in) throw Error(Errc::SyntaxError, "cannot read '" + input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str(), params);
}

namespace detail {

inline std::string emit(const AnalysisReport& r, bool json) {
  return json ? to_json(r).dump(2) + "\n" : to_text(r);
}

template <class F>
Result guarded(F&& body) {
  Result res;
  try {
    body(res);
  } catch (const Error& e) {
    res.out.clear();
    res.err = std::string(e.what()) + "\n";
    switch (e.code()) {
      case Errc::BudgetExceeded:
      case Errc::SizeCapExceeded:
      case Errc::InsufficientCompletion: res.exit_code = kResourceCap; break;
      case Errc::InvalidShape: res.exit_code = kRefuted; break;
      default: res.exit_code = kParseError;
    }
  }
  return res;
}

}  // namespace detail

inline Result run_classify(const std::string& input, const Options& opt) {
  return detail::guarded([&](Result& res) {
    auto r = build_classification(load_input(input, opt.params));
    res.out = detail::emit(r, opt.json);
    res.exit_code = r.shape.valid ? kOk : kRefuted;
  });
}

inline Result run_analyze(const std::string& input, const Options& opt) {
  return detail::guarded([&](Result& res) {
    auto p = load_input(input, opt.params);
    auto r = build_analysis(p, opt.analysis);
    std::string summary;
    if (auto k = koszul_summary(r); !k.empty()) summary = k + "\n";
    res.out = opt.json ? detail::emit(r, true) : summary + detail::emit(r, false);
    if (!r.shape.valid)
      res.exit_code = kRefuted;
    else if (r.ext && !r.ext->trusted)
      res.exit_code = kResourceCap;
  });
}

inline Result run_deform(const std::string& input, const Options& opt) {
  return detail::guarded([&](Result& res) {
    auto r = build_deformation(load_input(input, opt.params), opt.analysis);
    res.out = detail::emit(r, opt.json);
    auto v = r.deformation->verdict;
    if (v == DeformationVerdict::RefutedByI || v == DeformationVerdict::RefutedByJ) res.exit_code = kRefuted;
  });
}

/// One expectation line: "name C B P QC SC" with Y / n / - cells.
struct ExpectedRow {
  std::string name;
  std::vector<std::string> cells;
};

inline std::vector<ExpectedRow> parse_expectation(std::string_view text) {
  std::vector<ExpectedRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    ExpectedRow row;
    if (!(ls >> row.name)) continue;
    std::string cell;
    while (ls >> cell) row.cells.push_back(cell);
    if (row.cells.size() != 5)
      throw Error(Errc::SyntaxError, "expectation line " + std::to_string(lineno) + ": expected 5 cells after the name");
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Differences between computed rows and an expectation, one message per cell.
inline std::vector<std::string> diff_expectation(const std::vector<TableRow>& rows,
                                                 const std::vector<ExpectedRow>& expected) {
  static constexpr std::array<const char*, 5> columns{"C", "B", "P", "QC", "SC"};
  std::vector<std::string> diffs;
  std::map<std::string, const TableRow*> by_name;
  for (const auto& r : rows) by_name[r.name] = &r;
  std::set<std::string> listed;
  for (const auto& e : expected) {
    listed.insert(e.name);
    auto it = by_name.find(e.name);
    if (it == by_name.end()) {
      diffs.push_back(e.name + ": expected row missing from output");
      continue;
    }
    auto got = expectation_cells(*it->second);
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (got[c] != e.cells[c])
        diffs.push_back(e.name + " " + columns[c] + ": expected " + e.cells[c] + ", got " + got[c]);
  }
  for (const auto& r : rows)
    if (!listed.count(r.name)) diffs.push_back(r.name + ": row not present in expectation");
  return diffs;
}

inline std::vector<TableRow> table_rows(const std::string& selector, const ParamBinding& params) {
  std::vector<TableRow> rows;
  for (const auto& name : corpus(selector)) rows.push_back(table_row(name, fixture(name, params)));
  return rows;
}

inline Result run_table(const std::string& selector, const Options& opt) {
  return detail::guarded([&](Result& res) {
    auto rows = table_rows(selector, opt.params);
    res.out = opt.json ? table_json(selector, rows).dump(2) + "\n" : render_table(rows);
    if (opt.expect.empty()) return;
    std::ifstream in(opt.expect);
    if (!in) throw Error(Errc::SyntaxError, "cannot read expectation file '" + opt.expect + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto diffs = diff_expectation(rows, parse_expectation(buf.str()));
    if (diffs.empty()) return;
    res.err = "MismatchAgainstExpectation: " + std::to_string(diffs.size()) + " differing cell(s)\n";
    for (const auto& d : diffs) res.err += "  " + d + "\n";
    res.exit_code = kRefuted;
  });
}

}  // namespace skewpbw::cli
