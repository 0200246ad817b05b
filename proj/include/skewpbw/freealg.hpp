#pragma once

/**
 * @file freealg.hpp
 * @brief Words and noncommutative polynomials over an exact field.
 *
 * Words live in the free monoid on n generators and are ordered degree-first,
 * then left-to-right by generator index (deglex). NcPoly<K> is a finitely
 * supported map Word -> K with no stored zero coefficients; iteration order
 * is ascending deglex, so the leading term is always the last entry.
 */

#include "skewpbw/error.hpp"
#include "skewpbw/rational.hpp"

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace skewpbw {

/// Zero-based generator index.
using Letter = std::uint16_t;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t degree() const noexcept { return letters_.size(); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }

  /// True when `pattern` occurs in this word starting at `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.size() > size()) return false;
    return std::equal(pattern.begin(), pattern.end(), letters_.begin() + pos);
  }

  bool contains(const Word& pattern) const {
    if (pattern.size() > size()) return false;
    for (std::size_t p = 0; p + pattern.size() <= size(); ++p)
      if (matches_at(pattern, p)) return true;
    return false;
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Deglex: shorter words first, equal lengths compared by letter index.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::vector<Letter> letters_;
};

inline std::strong_ordering deglex_compare(const Word& u, const Word& v) { return u <=> v; }

/// Ordered, named generators x_1..x_n; index = declaration order.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error(Errc::InvalidGenerators, "at least one generator is required");
    std::set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw Error(Errc::InvalidGenerators, "duplicate generator '" + n + "'");
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Letter i) const { return names_.at(i); }

  std::optional<Letter> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
  }

  /// Renders a word as "x*y*z"; the empty word renders as "1".
  std::string format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += '*';
      out += names_.at(w[i]);
    }
    return out;
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
};

template <typename K>
concept ExactField = std::regular<K> && requires(K a, K b) {
  K(0);
  K(1);
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
};

template <ExactField K>
class NcPoly {
 public:
  using Terms = std::map<Word, K>;

  NcPoly() = default;
  explicit NcPoly(const K& constant) { add_term(Word{}, constant); }

  static NcPoly monomial(Word w, const K& coeff = K(1)) {
    NcPoly p;
    p.add_term(w, coeff);
    return p;
  }

  static NcPoly generator(Letter i) { return monomial(Word{i}); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// nullopt is the degree of the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  K coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Word& w, const K& c) {
    if (c == K(0)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    check_invariants();
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    check_invariants();
    return *this;
  }
  NcPoly& operator*=(const K& s) {
    if (s == K(0)) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= s;
    }
    check_invariants();
    return *this;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= K(-1); }
  friend NcPoly operator*(NcPoly a, const K& s) { return a *= s; }
  friend NcPoly operator*(const K& s, NcPoly a) { return a *= s; }

  friend NcPoly operator*(const NcPoly& p, const NcPoly& q) {
    NcPoly out;
    for (const auto& [u, a] : p.terms_)
      for (const auto& [v, b] : q.terms_) out.add_term(u * v, a * b);
    out.check_invariants();
    return out;
  }

  /// a * p * b for words a, b.
  NcPoly sandwich(const Word& left, const Word& right) const {
    NcPoly out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(left * w * right, c);
    return out;
  }

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  void check_invariants() const {
#ifdef SKEWPBW_CHECK_INVARIANTS
    for (const auto& [w, c] : terms_)
      if (c == K(0)) throw std::logic_error("NcPoly stores a zero coefficient");
#endif
  }

 private:
  Terms terms_;
};

using Poly = NcPoly<Rational>;

template <ExactField K>
NcPoly<K> multiply(const NcPoly<K>& p, const NcPoly<K>& q) {
  return p * q;
}

template <ExactField K>
std::pair<Word, K> leading_term(const NcPoly<K>& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  const auto& [w, c] = *p.terms().rbegin();
  return {w, c};
}

/// Restriction of p to words of length exactly d.
template <ExactField K>
NcPoly<K> graded_component(const NcPoly<K>& p, std::size_t d) {
  NcPoly<K> out;
  for (const auto& [w, c] : p.terms())
    if (w.degree() == d) out.add_term(w, c);
  return out;
}

/// p scaled so the leading coefficient is one.
template <ExactField K>
NcPoly<K> monic(const NcPoly<K>& p) {
  auto [w, c] = leading_term(p);
  return p * (K(1) / c);
}

inline std::string format_scalar(const Rational& q) { return to_string(q); }

/// Renders with leading term first, e.g. "y*x - x*y + 1".
template <ExactField K>
std::string format(const NcPoly<K>& p, const GeneratorSet& gens) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    bool negative = c < K(0);
    K mag = negative ? K(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (w.empty()) {
      os << format_scalar(mag);
    } else {
      if (mag != K(1)) os << format_scalar(mag) << '*';
      os << gens.format(w);
    }
    first = false;
  }
  return os.str();
}

}  // namespace skewpbw
