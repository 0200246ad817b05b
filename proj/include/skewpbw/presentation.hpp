#pragma once

/**
 * @file presentation.hpp
 * @brief Algebra presentations K<x_1..x_n>/(relators) and the ".alg" text format.
 *
 * Grammar ('#' starts a comment running to end of line):
 *
 *     file     := "algebra" IDENT param* gens relation*
 *     param    := "param" IDENT ["nonzero"] ["=" RATIONAL]
 *     gens     := "generators" IDENT ("," IDENT)*
 *     relation := "relation" poly "=" poly
 *     poly     := ["-"] term (("+"|"-") term)*
 *     term     := RATIONAL ["*" wordpart] | wordpart
 *     wordpart := IDENT ("*" IDENT)*
 *     RATIONAL := INT ["/" POSINT] | IDENT (a bound parameter)
 *
 * A relation `lhs = rhs` is stored as the relator lhs - rhs. Parameter values
 * are substituted while parsing; a value passed in the external binding
 * overrides the default written in the file.
 */

#include "skewpbw/error.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/rational.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace skewpbw {

using ParamBinding = std::map<std::string, Rational>;

struct Presentation {
  std::string name;
  GeneratorSet gens;
  std::vector<Poly> relators;
  /// Parameters declared by the source, with the values that were substituted.
  ParamBinding params;

  std::size_t n() const noexcept { return gens.size(); }

  /// Throws if a relator is zero, has degree above two or uses a letter
  /// outside the generator set.
  void validate() const {
    for (const auto& r : relators) {
      if (r.is_zero()) throw Error(Errc::ZeroRelator, "relator is zero");
      if (*r.degree() > 2) throw Error(Errc::DegreeTooHigh, format(r, gens) + " has degree above 2");
      for (const auto& [w, c] : r.terms())
        for (Letter l : w)
          if (l >= gens.size()) throw Error(Errc::UnknownGenerator, "letter index out of range");
    }
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

namespace detail {

class Lexer {
 public:
  enum class Kind { Ident, Int, Punct, End };
  struct Token {
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
  };

  explicit Lexer(std::string_view src) {
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t k) {
      for (std::size_t j = 0; j < k; ++j, ++i) {
        if (src[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
    };
    while (i < src.size()) {
      char c = src[i];
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') advance(1);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      Token t;
      t.line = line;
      t.column = col;
      std::size_t start = i;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
        t.kind = Kind::Ident;
        t.text = std::string(src.substr(start, j - start));
        advance(j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        t.kind = Kind::Int;
        t.text = std::string(src.substr(start, j - start));
        advance(j - i);
      } else if (std::string_view("=,*+-/").find(c) != std::string_view::npos) {
        t.kind = Kind::Punct;
        t.text = std::string(1, c);
        advance(1);
      } else {
        throw Error(Errc::SyntaxError, position(line, col) + "unexpected character '" + std::string(1, c) + "'");
      }
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    tokens_.push_back(end);
  }

  static std::string position(std::size_t line, std::size_t col) {
    return std::to_string(line) + ":" + std::to_string(col) + ": ";
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_punct(char c) const { return peek().kind == Kind::Punct && peek().text[0] == c; }
  bool at_keyword(std::string_view kw) const { return peek().kind == Kind::Ident && peek().text == kw; }

  [[noreturn]] void fail(const Token& t, const std::string& msg, Errc code = Errc::SyntaxError) const {
    std::string found = t.kind == Kind::End ? "end of input" : "'" + t.text + "'";
    throw Error(code, position(t.line, t.column) + msg + " (found " + found + ")");
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
    next();
  }

  std::string expect_ident(std::string_view what) {
    if (peek().kind != Kind::Ident) fail(peek(), "expected " + std::string(what));
    return next().text;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline bool is_keyword(std::string_view s) {
  return s == "algebra" || s == "param" || s == "nonzero" || s == "generators" || s == "relation";
}

class Parser {
 public:
  Parser(std::string_view text, const ParamBinding& overrides) : lex_(text), overrides_(overrides) {}

  Presentation parse() {
    Presentation p;
    if (!lex_.at_keyword("algebra")) lex_.fail(lex_.peek(), "expected 'algebra'");
    lex_.next();
    p.name = lex_.expect_ident("algebra name");

    while (lex_.at_keyword("param")) parse_param();

    if (!lex_.at_keyword("generators")) lex_.fail(lex_.peek(), "expected 'generators'");
    lex_.next();
    std::vector<std::string> names;
    do {
      const auto& tok = lex_.peek();
      std::string g = lex_.expect_ident("generator name");
      if (is_keyword(g)) lex_.fail(tok, "keyword used as generator name");
      if (declared_.count(g)) lex_.fail(tok, "generator name clashes with a parameter", Errc::InvalidGenerators);
      for (const auto& existing : names)
        if (existing == g) lex_.fail(tok, "duplicate generator name", Errc::InvalidGenerators);
      names.push_back(std::move(g));
      if (!lex_.at_punct(',')) break;
      lex_.next();
    } while (true);
    p.gens = GeneratorSet(std::move(names));
    gens_ = &p.gens;

    while (lex_.at_keyword("relation")) {
      const auto start = lex_.next();
      Poly lhs = parse_poly();
      lex_.expect_punct('=');
      Poly rhs = parse_poly();
      Poly rel = lhs - rhs;
      if (rel.is_zero()) lex_.fail(start, "relation reduces to 0 = 0", Errc::ZeroRelator);
      if (*rel.degree() > 2)
        lex_.fail(start, "relator " + format(rel, p.gens) + " has degree above 2", Errc::DegreeTooHigh);
      p.relators.push_back(std::move(rel));
    }
    if (lex_.peek().kind != Lexer::Kind::End) lex_.fail(lex_.peek(), "expected 'relation' or end of input");

    for (const auto& [name, value] : values_) p.params.emplace(name, value);
    return p;
  }

 private:
  void parse_param() {
    lex_.next();
    const auto& tok = lex_.peek();
    std::string name = lex_.expect_ident("parameter name");
    if (is_keyword(name)) lex_.fail(tok, "keyword used as parameter name");
    if (declared_.count(name)) lex_.fail(tok, "parameter declared twice");
    bool nonzero = false;
    if (lex_.at_keyword("nonzero")) {
      lex_.next();
      nonzero = true;
    }
    std::optional<Rational> value;
    if (lex_.at_punct('=')) {
      lex_.next();
      value = parse_literal();
    }
    if (auto it = overrides_.find(name); it != overrides_.end()) value = it->second;
    declared_.insert(name);
    if (!value) return;
    if (nonzero && *value == 0) lex_.fail(tok, "parameter '" + name + "' must be nonzero", Errc::ZeroParameter);
    values_[name] = *value;
  }

  Rational parse_literal() {
    bool neg = false;
    if (lex_.at_punct('-')) {
      lex_.next();
      neg = true;
    }
    if (lex_.peek().kind != Lexer::Kind::Int) lex_.fail(lex_.peek(), "expected integer");
    Integer num{lex_.next().text};
    Integer den{1};
    if (lex_.at_punct('/')) {
      lex_.next();
      const auto& tok = lex_.peek();
      if (tok.kind != Lexer::Kind::Int) lex_.fail(tok, "expected positive integer denominator");
      den = Integer{lex_.next().text};
      if (den == 0) lex_.fail(tok, "zero denominator");
    }
    Rational q{num, den};
    return neg ? Rational{-q} : q;
  }

  Poly parse_poly() {
    Poly out;
    bool negate = false;
    if (lex_.at_punct('-')) {
      lex_.next();
      negate = true;
    }
    while (true) {
      Poly t = parse_term();
      out += negate ? -t : t;
      if (lex_.at_punct('+')) {
        negate = false;
      } else if (lex_.at_punct('-')) {
        negate = true;
      } else {
        break;
      }
      lex_.next();
    }
    return out;
  }

  // Scalar factors (literals, parameters) come first, generators after.
  Poly parse_term() {
    Rational coeff{1};
    std::vector<Letter> letters;
    while (true) {
      const auto& tok = lex_.peek();
      if (tok.kind == Lexer::Kind::Int) {
        if (!letters.empty()) lex_.fail(tok, "scalar factor after a generator");
        coeff *= parse_literal();
      } else if (tok.kind == Lexer::Kind::Ident) {
        if (auto g = gens_->index_of(tok.text)) {
          letters.push_back(*g);
          lex_.next();
        } else if (auto v = values_.find(tok.text); v != values_.end()) {
          if (!letters.empty()) lex_.fail(tok, "scalar factor after a generator");
          coeff *= v->second;
          lex_.next();
        } else if (declared_.count(tok.text)) {
          lex_.fail(tok, "parameter '" + tok.text + "' has no value", Errc::UnboundParameter);
        } else {
          lex_.fail(tok, "unknown generator '" + tok.text + "'", Errc::UnknownGenerator);
        }
      } else {
        lex_.fail(tok, "expected a number, parameter or generator");
      }
      if (!lex_.at_punct('*')) break;
      lex_.next();
    }
    return Poly::monomial(Word(std::move(letters)), coeff);
  }

  Lexer lex_;
  const ParamBinding& overrides_;
  std::set<std::string> declared_;
  std::map<std::string, Rational> values_;
  const GeneratorSet* gens_ = nullptr;
};

}  // namespace detail

inline Presentation parse_presentation(std::string_view text, const ParamBinding& params = {}) {
  return detail::Parser(text, params).parse();
}

/// Writes `p` in the ".alg" format; every relator becomes "relation <r> = 0".
inline std::string serialize(const Presentation& p) {
  std::ostringstream os;
  os << "algebra " << p.name << '\n';
  for (const auto& [name, value] : p.params) os << "param " << name << " = " << to_string(value) << '\n';
  os << "generators ";
  for (std::size_t i = 0; i < p.gens.size(); ++i) os << (i ? ", " : "") << p.gens.name(static_cast<Letter>(i));
  os << '\n';
  for (const auto& r : p.relators) os << "relation " << format(r, p.gens) << " = 0\n";
  return os.str();
}

}  // namespace skewpbw
