#pragma once

/**
 * @file report.hpp
 * @brief Analysis reports: assembly from the module results, JSON and text.
 *
 * The JSON field set is fixed per tool version: every key is always emitted,
 * with null for parts a command did not compute. The schema lives in
 * docs/report.schema.json.
 */

#include "skewpbw/classify.hpp"
#include "skewpbw/deform.hpp"
#include "skewpbw/fixtures.hpp"
#include "skewpbw/koszul.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/rewrite.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace skewpbw {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
  std::size_t max_degree = 5;
  std::size_t ext_i = 4;
  std::size_t ext_j = 4;
  std::size_t budget = kDefaultRuleBudget;
  std::size_t size_cap = kDefaultSizeCap;
};

struct AnalysisReport {
  std::string command;
  Presentation presentation;
  ShapeReport shape;
  std::optional<SubclassFlags> flags;
  std::optional<PbwCertificate> pbw;
  std::optional<SSets> s_sets;
  std::optional<KoszulVerdict> koszul;
  std::optional<ExtTable> ext;
  std::optional<PairingResult> pairing;
  std::optional<std::vector<std::size_t>> hilbert_algebra;
  std::optional<std::vector<std::size_t>> hilbert_homogeneous;
  std::size_t hilbert_valid_to = 0;
  std::optional<DeformationReport> deformation;
  std::vector<std::string> notes;
};

inline std::string parameter_note(const Presentation& p) {
  if (p.params.empty()) return {};
  std::string s = "parameters specialized to";
  bool first = true;
  for (const auto& [k, v] : p.params) {
    s += (first ? " " : ", ") + k + "=" + to_string(v);
    first = false;
  }
  return s + "; special parameter values may change dimensions and verdicts";
}

inline AnalysisReport build_classification(const Presentation& p) {
  AnalysisReport r;
  r.command = "classify";
  r.presentation = p;
  r.shape = check_shape(p);
  if (r.shape.valid) r.flags = classify_subclasses(p, r.shape);
  if (auto note = parameter_note(p); !note.empty()) r.notes.push_back(note);
  return r;
}

/// Filtration dimensions of A from a (bounded) completion of its relators.
inline std::vector<std::size_t> filtered_dims(const Presentation& p, std::size_t N, std::size_t budget) {
  auto sys = certify(orient(p));
  if (sys.certificate() != Confluence::Certified) sys = complete_bounded(sys, N + 1, budget).system;
  return hilbert_prefix(sys, N).dims;
}

inline AnalysisReport build_analysis(const Presentation& p, const AnalysisOptions& opt) {
  AnalysisReport r = build_classification(p);
  r.command = "analyze";
  if (!r.shape.valid) return r;
  r.pbw = certify_pbw_basis(p, r.shape);
  r.flags->basis_certified = r.pbw->certified ? Tri::Yes : Tri::No;
  Presentation b0 = homogeneous_version(p, r.shape);
  r.s_sets = compute_S(b0, opt.max_degree);
  r.koszul = koszul_verdict(p, opt.ext_i, opt.ext_j, opt.size_cap);
  r.ext = ext_table(b0, opt.ext_i, opt.ext_j, opt.size_cap, opt.budget);
  r.pairing = hilbert_pairing(b0, opt.max_degree, opt.budget);
  r.hilbert_valid_to = opt.max_degree;
  r.hilbert_algebra = filtered_dims(p, opt.max_degree, opt.budget);
  r.hilbert_homogeneous = graded_dims(b0, opt.max_degree, opt.budget);
  r.deformation = deformation_verdict(p, opt.max_degree, opt.budget);
  return r;
}

inline AnalysisReport build_deformation(const Presentation& p, const AnalysisOptions& opt) {
  AnalysisReport r = build_classification(p);
  r.command = "deform";
  r.deformation = deformation_verdict(p, opt.max_degree, opt.budget);
  return r;
}

// ---------------------------------------------------------------- JSON

namespace detail {

using json = nlohmann::ordered_json;

inline json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline json optional_dims(const std::optional<std::vector<std::size_t>>& v) {
  return v ? json(*v) : json(nullptr);
}

inline std::string koszul_name(const KoszulVerdict& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NotPreKoszul>) return "NotPreKoszul";
        else if constexpr (std::is_same_v<T, CertifiedKoszul>) return "CertifiedKoszul";
        else if constexpr (std::is_same_v<T, RefutedAtDegree>) return "RefutedAtDegree";
        else return "InconclusiveBounded";
      },
      v);
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using detail::json;
  const auto& p = r.presentation;
  json j;
  j["tool_version"] = kToolVersion;
  j["command"] = r.command;
  j["algebra"] = p.name;
  j["generators"] = p.gens.names();
  json params = json::object();
  for (const auto& [k, v] : p.params) params[k] = to_string(v);
  j["params"] = params;
  json rels = json::array();
  for (const auto& rel : p.relators) rels.push_back(format(rel, p.gens));
  j["relators"] = rels;

  json shape;
  shape["valid"] = r.shape.valid;
  json diags = json::array();
  for (const auto& d : r.shape.diagnostics) diags.push_back({{"kind", std::string(to_string(d.kind))}, {"message", d.message}});
  shape["diagnostics"] = diags;
  json pairs = json::array();
  for (const auto& [key, d] : r.shape.pair_table)
    pairs.push_back({{"i", p.gens.name(key.first)},
                     {"j", p.gens.name(key.second)},
                     {"c", to_string(d.c)},
                     {"linear", detail::rationals(d.linear)},
                     {"constant", to_string(d.constant)}});
  shape["pairs"] = pairs;
  j["shape"] = shape;

  if (r.flags) {
    const auto& f = *r.flags;
    j["flags"] = {{"C", f.constant},
                  {"B", f.bijective},
                  {"P", f.pre_commutative},
                  {"QC", f.quasi_commutative},
                  {"SC", f.semi_commutative},
                  {"pre_koszul", f.pre_koszul},
                  {"homogeneous_pre_koszul", f.homogeneous_pre_koszul},
                  {"basis_certified", std::string(to_string(f.basis_certified))}};
  } else {
    j["flags"] = nullptr;
  }

  if (r.pbw) {
    j["pbw"] = {{"certificate", r.pbw->certified ? "yes" : "no"},
                {"obstructions", r.pbw->obstruction_count},
                {"witness", r.pbw->witness ? json(format(*r.pbw->witness, p.gens)) : json(nullptr)},
                {"witness_overlap", r.pbw->witness_word ? json(p.gens.format(*r.pbw->witness_word)) : json(nullptr)}};
  } else {
    j["pbw"] = nullptr;
  }

  if (r.s_sets) {
    json S = json::array();
    for (const auto& [a, b] : r.s_sets->S) S.push_back({p.gens.name(a), p.gens.name(b)});
    j["s_sets"] = {{"S", S}, {"counts", r.s_sets->counts}};
  } else {
    j["s_sets"] = nullptr;
  }

  if (r.koszul) {
    json k;
    k["verdict"] = detail::koszul_name(*r.koszul);
    k["homogeneous"] = nullptr;
    k["refuted_at"] = nullptr;
    k["checked_to"] = nullptr;
    if (auto* c = std::get_if<CertifiedKoszul>(&*r.koszul)) k["homogeneous"] = c->homogeneous;
    if (auto* x = std::get_if<RefutedAtDegree>(&*r.koszul)) k["refuted_at"] = {x->i, x->j};
    if (auto* x = std::get_if<InconclusiveBounded>(&*r.koszul)) k["checked_to"] = {x->max_i, x->max_j};
    j["koszul"] = k;
  } else {
    j["koszul"] = nullptr;
  }

  if (r.ext) {
    json dims = json::array();
    for (const auto& row : r.ext->dims) {
      json jr = json::array();
      for (const auto& c : row) jr.push_back(c ? json(*c) : json(nullptr));
      dims.push_back(jr);
    }
    j["ext_table"] = {{"max_i", r.ext->max_i}, {"max_j", r.ext->max_j}, {"trusted", r.ext->trusted}, {"dims", dims}};
  } else {
    j["ext_table"] = nullptr;
  }

  if (r.pairing) {
    j["hilbert_pairing"] = {{"holds", r.pairing->holds}, {"dims", r.pairing->dims}, {"dual_dims", r.pairing->dual_dims}};
  } else {
    j["hilbert_pairing"] = nullptr;
  }

  if (r.hilbert_algebra || r.hilbert_homogeneous) {
    j["hilbert"] = {{"valid_to", r.hilbert_valid_to},
                    {"algebra", detail::optional_dims(r.hilbert_algebra)},
                    {"homogeneous_version", detail::optional_dims(r.hilbert_homogeneous)}};
  } else {
    j["hilbert"] = nullptr;
  }

  if (r.deformation) {
    const auto& d = *r.deformation;
    j["deformation"] = {{"cond_I", d.cond_I},
                        {"cond_J", d.cond_J},
                        {"B_koszul_certified", d.B_koszul_certified},
                        {"verdict", std::string(to_string(d.verdict))},
                        {"trivial", d.trivial},
                        {"gr_hilbert_match", d.gr_hilbert_match},
                        {"checked_to", d.checked_to},
                        {"gr_dims", d.gr_dims},
                        {"b_dims", d.b_dims}};
  } else {
    j["deformation"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

// ---------------------------------------------------------------- text

inline const char* mark(bool b) { return b ? "✓" : "★"; }

inline std::string join_dims(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

inline std::string koszul_summary(const AnalysisReport& r) {
  if (!r.koszul) return {};
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NotPreKoszul>) {
          return "Koszul: NOT APPLICABLE (a relator has a constant term, so the algebra is not pre-Koszul)";
        } else if constexpr (std::is_same_v<T, CertifiedKoszul>) {
          if (x.homogeneous) return "homogeneous Koszul: CERTIFIED (PBW algebra)";
          return "Koszul: CERTIFIED (pre-commutative; homogeneous version is a PBW algebra)";
        } else if constexpr (std::is_same_v<T, RefutedAtDegree>) {
          return "Koszul: REFUTED (dim Ext^{" + std::to_string(x.i) + "," + std::to_string(x.j) + "} = " +
                 std::to_string(x.dim) + ")";
        } else {
          return "Koszul: INCONCLUSIVE (no off-diagonal Ext through (" + std::to_string(x.max_i) + "," +
                 std::to_string(x.max_j) + "))";
        }
      },
      *r.koszul);
}

inline std::string to_text(const AnalysisReport& r) {
  const auto& p = r.presentation;
  std::ostringstream os;
  os << "algebra " << p.name << " (" << p.n() << " generators, " << p.relators.size() << " relators)\n";
  for (const auto& rel : p.relators) os << "  " << format(rel, p.gens) << " = 0\n";
  if (r.shape.valid) {
    os << "shape: valid skew PBW presentation\n";
    for (const auto& [key, d] : r.shape.pair_table) {
      os << "  c(" << p.gens.name(key.first) << "," << p.gens.name(key.second) << ") = " << to_string(d.c);
      Poly tail;
      for (Letter g = 0; g < p.n(); ++g) tail.add_term(Word{g}, d.linear[g]);
      tail.add_term(Word{}, d.constant);
      os << ", lower part " << format(tail, p.gens) << '\n';
    }
  } else {
    os << "shape: INVALID\n";
    for (const auto& d : r.shape.diagnostics) os << "  " << to_string(d.kind) << ": " << d.message << '\n';
  }
  if (r.flags) {
    const auto& f = *r.flags;
    os << "C " << mark(f.constant) << "  B " << mark(f.bijective) << "  P " << mark(f.pre_commutative) << "  QC "
       << mark(f.quasi_commutative) << "  SC " << mark(f.semi_commutative) << '\n';
    os << "pre-Koszul " << mark(f.pre_koszul) << "  homogeneous pre-Koszul " << mark(f.homogeneous_pre_koszul) << '\n';
  }
  if (r.pbw) {
    if (r.pbw->certified) {
      os << "PBW basis: CERTIFIED (overlap ambiguities resolved: " << r.pbw->obstruction_count << ")\n";
    } else {
      os << "PBW basis: REFUTED at overlap " << p.gens.format(*r.pbw->witness_word) << ", witness "
         << format(*r.pbw->witness, p.gens) << '\n';
    }
  }
  if (auto k = koszul_summary(r); !k.empty()) os << k << '\n';
  if (r.s_sets) os << "|S^(m)|: " << join_dims(r.s_sets->counts) << '\n';
  if (r.ext) {
    os << "Ext^{i,j} of the homogeneous version (rows i, columns j)" << (r.ext->trusted ? "" : " [UNTRUSTED]") << '\n';
    for (std::size_t i = 0; i <= r.ext->max_i; ++i) {
      os << "  ";
      for (std::size_t j = 0; j <= r.ext->max_j; ++j) {
        const auto& c = r.ext->dims[i][j];
        os << (j ? " " : "") << (c ? std::to_string(*c) : std::string("?"));
      }
      os << '\n';
    }
  }
  if (r.pairing)
    os << "Hilbert pairing with the quadratic dual: " << (r.pairing->holds ? "holds" : "FAILS") << " (dual dims "
       << join_dims(r.pairing->dual_dims) << ")\n";
  if (r.hilbert_algebra) os << "Hilbert prefix (filtration of A): " << join_dims(*r.hilbert_algebra) << '\n';
  if (r.hilbert_homogeneous) os << "Hilbert prefix (homogeneous version): " << join_dims(*r.hilbert_homogeneous) << '\n';
  if (r.deformation) {
    const auto& d = *r.deformation;
    os << "deformation: (I) " << mark(d.cond_I) << "  (J) " << mark(d.cond_J) << "  B Koszul certified "
       << mark(d.B_koszul_certified) << '\n';
    os << "deformation verdict: " << to_string(d.verdict) << (d.trivial ? " (trivial, P = R)" : "") << '\n';
    os << "Gr(A) vs B Hilbert to degree " << d.checked_to << ": " << join_dims(d.gr_dims) << " vs "
       << join_dims(d.b_dims) << (d.gr_hilbert_match ? " (match)" : " (MISMATCH)") << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

// ---------------------------------------------------------------- tables

struct TableRow {
  std::string name;
  bool valid = false;
  bool C = false, B = false, P = false, QC = false, SC = false;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline TableRow table_row(const std::string& name, const Presentation& p) {
  TableRow row;
  row.name = name;
  auto shape = check_shape(p);
  row.valid = shape.valid;
  if (shape.valid) {
    auto f = classify_subclasses(p, shape);
    row.C = f.constant;
    row.B = f.bijective;
    row.P = f.pre_commutative;
    row.QC = f.quasi_commutative;
    row.SC = f.semi_commutative;
  }
  return row;
}

/// Expectation-file cells: "Y" / "n", or "-" on every cell of an invalid row.
inline std::vector<std::string> expectation_cells(const TableRow& r) {
  if (!r.valid) return {"-", "-", "-", "-", "-"};
  auto yn = [](bool b) { return std::string(b ? "Y" : "n"); };
  return {yn(r.C), yn(r.B), yn(r.P), yn(r.QC), yn(r.SC)};
}

inline std::string render_table(const std::vector<TableRow>& rows) {
  std::size_t width = 7;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
  os << pad("algebra") << "C  B  P  QC SC\n";
  for (const auto& r : rows) {
    os << pad(r.name);
    if (!r.valid) {
      os << "(not a skew PBW presentation)\n";
      continue;
    }
    os << mark(r.C) << "  " << mark(r.B) << "  " << mark(r.P) << "  " << mark(r.QC) << "  " << mark(r.SC) << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json table_json(const std::string& selector, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["corpus"] = selector;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"name", r.name}, {"valid", r.valid}, {"C", r.C}, {"B", r.B}, {"P", r.P}, {"QC", r.QC}, {"SC", r.SC}});
  j["rows"] = arr;
  return j;
}

}  // namespace skewpbw
