#pragma once

/**
 * @file classify.hpp
 * @brief Skew PBW shape recognition over a field and the subclass flags.
 *
 * A presentation has skew PBW shape when, after making every relator monic on
 * its deglex leading word, the relators are in bijection with the index pairs
 * i < j and the relator for (i, j) reads
 *
 *     x_j x_i - c_ij x_i x_j + r_1 x_1 + ... + r_n x_n + r_0,   c_ij != 0.
 *
 * Over a field every scalar is central, so each such extension is constant
 * and bijective; the remaining flags depend only on the tails r_k, r_0.
 */

#include "skewpbw/error.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/presentation.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewpbw {

enum class ShapeViolation { MissingPair, DuplicatePair, ForeignQuadraticWord, ZeroC, NotBinomialLead };

constexpr std::string_view to_string(ShapeViolation v) {
  switch (v) {
    case ShapeViolation::MissingPair: return "MissingPair";
    case ShapeViolation::DuplicatePair: return "DuplicatePair";
    case ShapeViolation::ForeignQuadraticWord: return "ForeignQuadraticWord";
    case ShapeViolation::ZeroC: return "ZeroC";
    case ShapeViolation::NotBinomialLead: return "NotBinomialLead";
  }
  return "Unknown";
}

struct ShapeDiagnostic {
  ShapeViolation kind;
  std::string message;
};

/// Data of the relator attached to the pair (i, j), i < j, zero-based.
struct PairData {
  Rational c;
  std::vector<Rational> linear;  // r_1..r_n
  Rational constant;             // r_0
  std::size_t relator_index = 0;
};

using IndexPair = std::pair<Letter, Letter>;

struct ShapeReport {
  bool valid = false;
  std::map<IndexPair, PairData> pair_table;  // empty unless valid
  std::vector<ShapeDiagnostic> diagnostics;

  bool has(ShapeViolation v) const {
    for (const auto& d : diagnostics)
      if (d.kind == v) return true;
    return false;
  }
};

enum class Tri { Unchecked, Yes, No };

constexpr std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Unchecked: return "unchecked";
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
  }
  return "unchecked";
}

struct SubclassFlags {
  bool constant = false;
  bool bijective = false;
  bool pre_commutative = false;
  bool quasi_commutative = false;
  bool semi_commutative = false;
  bool pre_koszul = false;
  bool homogeneous_pre_koszul = false;
  Tri basis_certified = Tri::Unchecked;
};

inline ShapeReport check_shape(const Presentation& p) {
  ShapeReport rep;
  const auto& gens = p.gens;
  const std::size_t n = p.n();
  auto name_pair = [&](Letter i, Letter j) { return "(" + gens.name(i) + ", " + gens.name(j) + ")"; };

  std::map<IndexPair, PairData> found;
  std::map<IndexPair, int> seen;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    const Poly& raw = p.relators[k];
    const std::string where = "relator " + std::to_string(k + 1) + " (" + format(raw, gens) + "): ";
    Poly r = monic(raw);
    auto [lead, lc] = leading_term(r);
    if (lead.degree() != 2) {
      rep.diagnostics.push_back({ShapeViolation::NotBinomialLead, where + "leading word is not quadratic"});
      continue;
    }
    Letter j = lead[0], i = lead[1];
    if (i == j) {
      rep.diagnostics.push_back(
          {ShapeViolation::ForeignQuadraticWord, where + "square " + gens.format(lead) + " as leading word"});
      continue;
    }
    if (j < i) {
      // Lead x_i x_j with i < j means x_j x_i is absent.
      rep.diagnostics.push_back({ShapeViolation::NotBinomialLead,
                                 where + "leading word " + gens.format(lead) + " is not of the form x_j*x_i with j > i"});
      continue;
    }
    const Word swapped{i, j};
    bool foreign = false;
    for (const auto& [w, c] : r.terms()) {
      if (w.degree() == 2 && w != lead && w != swapped) {
        rep.diagnostics.push_back(
            {ShapeViolation::ForeignQuadraticWord, where + "quadratic word " + gens.format(w) + " is foreign to the pair"});
        foreign = true;
      }
    }
    if (foreign) continue;
    Rational c = -r.coefficient(swapped);
    if (c == 0) {
      rep.diagnostics.push_back({ShapeViolation::ZeroC, where + "coefficient of " + gens.format(swapped) + " is zero"});
      continue;
    }
    IndexPair key{i, j};
    if (++seen[key] > 1) {
      rep.diagnostics.push_back({ShapeViolation::DuplicatePair, where + "second relation for pair " + name_pair(i, j)});
      continue;
    }
    PairData d;
    d.c = c;
    d.linear.assign(n, Rational{0});
    for (Letter g = 0; g < n; ++g) d.linear[g] = r.coefficient(Word{g});
    d.constant = r.coefficient(Word{});
    d.relator_index = k;
    found.emplace(key, std::move(d));
  }
  for (Letter i = 0; i < n; ++i)
    for (Letter j = i + 1; j < n; ++j)
      if (!seen.count({i, j}))
        rep.diagnostics.push_back({ShapeViolation::MissingPair, "no relation for pair " + name_pair(i, j)});

  rep.valid = rep.diagnostics.empty();
  if (rep.valid) rep.pair_table = std::move(found);
  return rep;
}

struct PreKoszulFlags {
  bool pre_koszul = false;
  bool homogeneous = false;
};

/// Applies to any presentation: relators without constant term make the
/// algebra pre-Koszul, and without linear terms as well, homogeneous pre-Koszul.
inline PreKoszulFlags check_pre_koszul_free(const Presentation& p) {
  PreKoszulFlags f{true, true};
  for (const auto& r : p.relators) {
    if (!graded_component(r, 0).is_zero()) f.pre_koszul = false;
    if (!graded_component(r, 1).is_zero()) f.homogeneous = false;
  }
  f.homogeneous = f.homogeneous && f.pre_koszul;
  return f;
}

inline SubclassFlags classify_subclasses(const Presentation& p, const ShapeReport& shape) {
  if (!shape.valid) throw Error(Errc::InvalidShape, p.name + " does not have skew PBW shape");
  SubclassFlags f;
  f.constant = true;
  f.bijective = true;
  f.pre_commutative = true;
  f.quasi_commutative = true;
  for (const auto& [key, d] : shape.pair_table) {
    if (d.constant != 0) f.pre_commutative = false;
    bool linear_zero = true;
    for (const auto& r : d.linear) linear_zero = linear_zero && r == 0;
    if (d.constant != 0 || !linear_zero) f.quasi_commutative = false;
  }
  f.semi_commutative = f.quasi_commutative && f.constant;
  auto pk = check_pre_koszul_free(p);
  f.pre_koszul = pk.pre_koszul;
  f.homogeneous_pre_koszul = pk.homogeneous;
  return f;
}

inline SubclassFlags classify_subclasses(const Presentation& p) { return classify_subclasses(p, check_shape(p)); }

/// The quasi-commutative presentation on the same c_ij: relators
/// x_j x_i - c_ij x_i x_j, in the order of the source relators.
inline Presentation homogeneous_version(const Presentation& p, const ShapeReport& shape) {
  if (!shape.valid) throw Error(Errc::InvalidShape, p.name + " does not have skew PBW shape");
  Presentation out;
  out.name = p.name;
  out.gens = p.gens;
  out.params = p.params;
  out.relators.resize(shape.pair_table.size());
  for (const auto& [key, d] : shape.pair_table) {
    auto [i, j] = key;
    out.relators[d.relator_index] = Poly::monomial(Word{j, i}) - Poly::monomial(Word{i, j}, d.c);
  }
  return out;
}

inline Presentation homogeneous_version(const Presentation& p) { return homogeneous_version(p, check_shape(p)); }

/// True when p and q define the same relator set up to monic normalization.
inline bool same_monic_relators(const Presentation& p, const Presentation& q) {
  if (p.gens != q.gens || p.relators.size() != q.relators.size()) return false;
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (monic(p.relators[k]) != monic(q.relators[k])) return false;
  return true;
}

}  // namespace skewpbw
