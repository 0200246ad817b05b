#pragma once

/**
 * @file rewrite.hpp
 * @brief Deglex rewriting systems in the free algebra and the diamond lemma.
 *
 * A relator r is oriented as lead(r) -> lead(r) - monic(r). Every tail word is
 * deglex-smaller than its lead and deglex is compatible with concatenation,
 * so reduction terminates. When every overlap ambiguity resolves, normal forms
 * are unique and the irreducible words form a basis of the quotient.
 */

#include "skewpbw/classify.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/linalg.hpp"
#include "skewpbw/presentation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skewpbw {

struct RewriteRule {
  Word lead;
  Poly tail;

  Poly as_poly() const { return Poly::monomial(lead) - tail; }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

enum class Confluence { Unchecked, Certified, Refuted };

enum class Strategy { Leftmost, Rightmost };

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(GeneratorSet gens, std::vector<RewriteRule> rules) : gens_(std::move(gens)), rules_(std::move(rules)) {
    by_first_.resize(gens_.size());
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      if (rules_[k].lead.empty()) throw Error(Errc::UnitIdeal, "constant rule");
      by_first_[rules_[k].lead[0]].push_back(k);
    }
  }

  const GeneratorSet& gens() const noexcept { return gens_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  Confluence certificate() const noexcept { return certificate_; }
  const std::optional<Poly>& witness() const noexcept { return witness_; }
  std::size_t completion_degree() const noexcept { return completion_degree_; }

  RewriteSystem with_certificate(Confluence c, std::optional<Poly> witness = std::nullopt) const {
    RewriteSystem out = *this;
    out.certificate_ = c;
    out.witness_ = std::move(witness);
    return out;
  }

  RewriteSystem with_completion_degree(std::size_t d) const {
    RewriteSystem out = *this;
    out.completion_degree_ = d;
    return out;
  }

  struct Match {
    std::size_t rule;
    std::size_t pos;
  };

  std::optional<Match> find_match(const Word& w, Strategy s = Strategy::Leftmost) const {
    const std::size_t len = w.size();
    for (std::size_t step = 0; step < len; ++step) {
      std::size_t pos = s == Strategy::Leftmost ? step : len - 1 - step;
      for (std::size_t k : by_first_[w[pos]])
        if (w.matches_at(rules_[k].lead, pos)) return Match{k, pos};
    }
    return std::nullopt;
  }

  bool is_irreducible(const Word& w) const { return !find_match(w).has_value(); }

 private:
  GeneratorSet gens_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  Confluence certificate_ = Confluence::Unchecked;
  std::optional<Poly> witness_;
  std::size_t completion_degree_ = 0;
};

struct NormalFormStats {
  std::size_t steps = 0;
};

/// Reduces the largest reducible term first until no rule lead occurs.
inline Poly normal_form(const RewriteSystem& sys, const Poly& p, Strategy strategy = Strategy::Leftmost,
                        NormalFormStats* stats = nullptr) {
  std::map<Word, Rational> work(p.terms().begin(), p.terms().end());
  Poly result;
  auto add = [&work](Word w, const Rational& c) {
    auto [it, inserted] = work.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) work.erase(it);
    }
  };
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const Word& w = node.key();
    const Rational& c = node.mapped();
    auto m = sys.find_match(w, strategy);
    if (!m) {
      result.add_term(w, c);
      continue;
    }
    if (stats) ++stats->steps;
    const auto& rule = sys.rules()[m->rule];
    Word prefix = w.subword(0, m->pos);
    Word suffix = w.subword(m->pos + rule.lead.size(), w.size() - m->pos - rule.lead.size());
    for (const auto& [tw, tc] : rule.tail.terms()) add(prefix * tw * suffix, c * tc);
  }
  result.check_invariants();
  return result;
}

namespace detail {

inline RewriteRule to_rule(const Poly& monic_poly) {
  auto [lead, lc] = leading_term(monic_poly);
  return RewriteRule{lead, Poly::monomial(lead) - monic_poly};
}

inline bool lead_less(const Poly& a, const Poly& b) { return leading_term(a).first < leading_term(b).first; }

/// Fully reduces every polynomial against the others until nothing changes.
/// Output is monic and sorted by leading word.
inline std::vector<Poly> interreduce(const GeneratorSet& gens, std::vector<Poly> polys) {
  for (auto& q : polys) {
    if (q.is_zero()) continue;
    if (*q.degree() == 0) throw Error(Errc::UnitIdeal, "a nonzero constant lies in the ideal");
    q = monic(q);
  }
  std::erase_if(polys, [](const Poly& q) { return q.is_zero(); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < polys.size();) {
      std::vector<RewriteRule> others;
      for (std::size_t j = 0; j < polys.size(); ++j)
        if (j != k) others.push_back(to_rule(polys[j]));
      Poly r = normal_form(RewriteSystem(gens, std::move(others)), polys[k]);
      if (r.is_zero()) {
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        continue;
      }
      if (*r.degree() == 0) throw Error(Errc::UnitIdeal, "a nonzero constant lies in the ideal");
      r = monic(r);
      if (r != polys[k]) {
        polys[k] = std::move(r);
        changed = true;
      }
      ++k;
    }
  }
  std::stable_sort(polys.begin(), polys.end(), lead_less);
  return polys;
}

inline RewriteSystem system_from(const GeneratorSet& gens, const std::vector<Poly>& polys) {
  std::vector<RewriteRule> rules;
  rules.reserve(polys.size());
  for (const auto& q : polys) rules.push_back(to_rule(q));
  return RewriteSystem(gens, std::move(rules));
}

}  // namespace detail

/// Orients and inter-reduces the relators of p.
inline RewriteSystem orient(const Presentation& p) {
  for (const auto& r : p.relators)
    if (r.is_zero()) throw Error(Errc::ZeroRelator, "relator is zero");
  return detail::system_from(p.gens, detail::interreduce(p.gens, p.relators));
}

/// An ambiguity where the suffix of one lead equals the prefix of another:
/// word = lead(left) * lead(right)[overlap_len..].
struct Overlap {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t overlap_len = 0;
  Word word;
};

/// All overlap ambiguities, optionally limited to words of length <= max_len,
/// sorted by word (deglex) then by discovery order.
inline std::vector<Overlap> overlaps(const RewriteSystem& sys, std::optional<std::size_t> max_len = std::nullopt) {
  std::vector<Overlap> out;
  const auto& rules = sys.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& u = rules[a].lead;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& v = rules[b].lead;
      const std::size_t kmax = std::min(u.size(), v.size());
      for (std::size_t k = 1; k < kmax; ++k) {
        if (max_len && u.size() + v.size() - k > *max_len) continue;
        if (u.subword(u.size() - k, k) != v.subword(0, k)) continue;
        out.push_back(Overlap{a, b, k, u * v.subword(k, v.size() - k)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Overlap& x, const Overlap& y) { return x.word < y.word; });
  return out;
}

/// Reduces the overlap word once by each of its two rules and returns the
/// difference of the two normal forms (zero iff the ambiguity resolves).
inline Poly resolve(const RewriteSystem& sys, const Overlap& o) {
  const auto& u = sys.rules()[o.left];
  const auto& v = sys.rules()[o.right];
  Word right_rest = v.lead.subword(o.overlap_len, v.lead.size() - o.overlap_len);
  Word left_rest = u.lead.subword(0, u.lead.size() - o.overlap_len);
  Poly via_left = u.tail.sandwich(Word{}, right_rest);
  Poly via_right = v.tail.sandwich(left_rest, Word{});
  return normal_form(sys, via_left) - normal_form(sys, via_right);
}

struct ConfluenceCheck {
  bool confluent = true;
  std::size_t overlap_count = 0;
  std::optional<Poly> witness;
  std::optional<Word> witness_word;
};

inline ConfluenceCheck check_confluence(const RewriteSystem& sys, std::optional<std::size_t> max_len = std::nullopt) {
  ConfluenceCheck out;
  auto all = overlaps(sys, max_len);
  out.overlap_count = all.size();
  for (const auto& o : all) {
    Poly diff = resolve(sys, o);
    if (!diff.is_zero()) {
      out.confluent = false;
      out.witness = std::move(diff);
      out.witness_word = o.word;
      break;
    }
  }
  return out;
}

/// Runs every overlap and records the outcome on the system.
inline RewriteSystem certify(const RewriteSystem& sys) {
  auto chk = check_confluence(sys);
  return sys.with_certificate(chk.confluent ? Confluence::Certified : Confluence::Refuted, chk.witness);
}

struct PbwCertificate {
  bool certified = false;
  std::optional<Poly> witness;
  std::optional<Word> witness_word;
  std::size_t obstruction_count = 0;
};

/// For shape-valid input the leads are the words x_j x_i (j > i), whose only
/// ambiguities are x_k x_j x_i with k > j > i. All resolving is equivalent to
/// the standard monomials being a basis.
inline PbwCertificate certify_pbw_basis(const Presentation& p, const ShapeReport& shape) {
  if (!shape.valid) throw Error(Errc::InvalidShape, p.name + " does not have skew PBW shape");
  auto sys = orient(p);
  auto chk = check_confluence(sys);
  return PbwCertificate{chk.confluent, std::move(chk.witness), std::move(chk.witness_word), chk.overlap_count};
}

inline PbwCertificate certify_pbw_basis(const Presentation& p) { return certify_pbw_basis(p, check_shape(p)); }

struct CompletionResult {
  RewriteSystem system;
  std::vector<RewriteRule> added;
};

inline constexpr std::size_t kDefaultRuleBudget = 10000;

/// Buchberger-style completion restricted to overlap words of length <=
/// max_deg. Each round adds the failing overlap difference with the smallest
/// leading word, then inter-reduces. The returned system is marked Certified
/// if, in addition, every overlap of any length resolves.
inline CompletionResult complete_bounded(const RewriteSystem& input, std::size_t max_deg,
                                         std::size_t budget = kDefaultRuleBudget) {
  if (max_deg < 2) throw std::invalid_argument("complete_bounded: max_deg must be at least 2");
  const auto& gens = input.gens();
  std::vector<Poly> polys;
  for (const auto& r : input.rules()) polys.push_back(r.as_poly());
  CompletionResult out;
  RewriteSystem sys = input;
  while (true) {
    std::optional<Poly> best;
    for (const auto& o : overlaps(sys, max_deg)) {
      Poly diff = resolve(sys, o);
      if (diff.is_zero()) continue;
      diff = monic(diff);
      if (!best || detail::lead_less(diff, *best)) best = std::move(diff);
    }
    if (!best) break;
    if (*best->degree() == 0) throw Error(Errc::UnitIdeal, "completion reached a nonzero constant");
    out.added.push_back(detail::to_rule(*best));
    polys.push_back(std::move(*best));
    polys = detail::interreduce(gens, std::move(polys));
    if (polys.size() > budget)
      throw Error(Errc::BudgetExceeded, "rule count " + std::to_string(polys.size()) + " exceeds budget");
    sys = detail::system_from(gens, polys);
  }
  out.system = certify(sys).with_completion_degree(max_deg);
  return out;
}

struct HilbertPrefix {
  std::vector<std::size_t> dims;  // dims[d] for d = 0..valid_to
  std::size_t valid_to = 0;
};

/// Counts irreducible words by length. Needs a certified system or one
/// completed at least one degree past max_deg.
inline HilbertPrefix hilbert_prefix(const RewriteSystem& sys, std::size_t max_deg) {
  if (sys.certificate() != Confluence::Certified && sys.completion_degree() < max_deg + 1)
    throw Error(Errc::InsufficientCompletion, "system is neither certified nor completed to degree " +
                                                  std::to_string(max_deg + 1));
  HilbertPrefix h;
  h.dims.assign(max_deg + 1, 0);
  h.valid_to = max_deg;
  const auto n = static_cast<Letter>(sys.gens().size());
  std::vector<Letter> word;
  auto suffix_reducible = [&]() {
    for (const auto& r : sys.rules()) {
      const auto& lead = r.lead;
      if (lead.size() > word.size()) continue;
      if (std::equal(lead.begin(), lead.end(), word.end() - static_cast<std::ptrdiff_t>(lead.size()))) return true;
    }
    return false;
  };
  auto dfs = [&](auto&& self) -> void {
    ++h.dims[word.size()];
    if (word.size() == max_deg) return;
    for (Letter g = 0; g < n; ++g) {
      word.push_back(g);
      if (!suffix_reducible()) self(self);
      word.pop_back();
    }
  };
  dfs(dfs);
  return h;
}

/// Irreducible words of length exactly d, in deglex order.
inline std::vector<Word> irreducible_words(const RewriteSystem& sys, std::size_t d) {
  std::vector<Word> level{Word{}};
  const auto n = static_cast<Letter>(sys.gens().size());
  for (std::size_t len = 1; len <= d; ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (Letter g = 0; g < n; ++g) {
        Word cand = w * Word{g};
        if (sys.is_irreducible(cand)) next.push_back(std::move(cand));
      }
    level = std::move(next);
  }
  return level;
}

struct SSets {
  std::set<IndexPair> S;
  std::map<std::size_t, std::vector<std::vector<Letter>>> Sm;
  std::vector<std::size_t> counts;  // counts[m] = |S^(m)|
};

inline bool is_homogeneous_quadratic(const Presentation& p) {
  for (const auto& r : p.relators)
    for (const auto& [w, c] : r.terms())
      if (w.degree() != 2) return false;
  return true;
}

/// Coordinates of a homogeneous quadratic polynomial in the n^2 word basis,
/// ordered lexicographically by index pair.
inline linalg::Row<Rational> quadratic_coordinates(const Poly& r, std::size_t n) {
  linalg::Row<Rational> v(n * n, Rational{0});
  for (const auto& [w, c] : r.terms()) {
    if (w.degree() != 2) throw Error(Errc::NotHomogeneousQuadratic, "term of degree " + std::to_string(w.degree()));
    v[w[0] * n + w[1]] = c;
  }
  return v;
}

/// S is the set of pairs whose class in L_2/R is not spanned by the classes
/// of lexicographically smaller pairs: the complement of the pivot columns
/// when R is reduced pivoting on its largest pair.
inline SSets compute_S(const Presentation& p, std::size_t max_m) {
  const std::size_t n = p.n();
  linalg::Matrix<Rational> rows;
  if (!is_homogeneous_quadratic(p)) throw Error(Errc::NotHomogeneousQuadratic, p.name + " is not homogeneous quadratic");
  for (const auto& r : p.relators) rows.push_back(quadratic_coordinates(r, n));
  auto ech = linalg::row_reduce(std::move(rows), n * n, linalg::Pivot::Last);
  std::vector<bool> pivot(n * n, false);
  for (auto c : ech.pivots) pivot[c] = true;

  SSets out;
  for (std::size_t c = 0; c < n * n; ++c)
    if (!pivot[c]) out.S.insert({static_cast<Letter>(c / n), static_cast<Letter>(c % n)});

  out.Sm[0] = {{}};
  if (max_m >= 1) {
    for (Letter g = 0; g < n; ++g) out.Sm[1].push_back({g});
  }
  for (std::size_t m = 2; m <= max_m; ++m) {
    auto& level = out.Sm[m];
    for (const auto& t : out.Sm[m - 1])
      for (Letter g = 0; g < n; ++g)
        if (out.S.count({t.back(), g})) {
          auto ext = t;
          ext.push_back(g);
          level.push_back(std::move(ext));
        }
  }
  for (std::size_t m = 0; m <= max_m; ++m) out.counts.push_back(out.Sm[m].size());
  return out;
}

}  // namespace skewpbw
