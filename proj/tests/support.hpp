#pragma once

#include <skewpbw.hpp>

#include <random>
#include <string>

namespace testing_support {

using namespace skewpbw;

inline Poly random_poly(std::mt19937& rng, std::size_t n, std::size_t max_deg, std::size_t terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, static_cast<int>(max_deg));
  std::uniform_int_distribution<int> letter(0, static_cast<int>(n) - 1);
  Poly p;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Letter> w(static_cast<std::size_t>(deg(rng)));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    p.add_term(Word(std::move(w)), Rational{coeff(rng)});
  }
  return p;
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> mag(1, 5), sign(0, 1);
  Rational num = mag(rng), den = mag(rng);
  return (sign(rng) ? num : -num) / den;
}

/// Quasi-commutative presentation x_j x_i = c_ij x_i x_j on generators x1..xn.
inline Presentation quasi_commutative(std::size_t n, const std::vector<std::vector<Rational>>& c) {
  std::string text = "algebra qc\ngenerators ";
  for (std::size_t i = 1; i <= n; ++i) text += (i > 1 ? ", x" : "x") + std::to_string(i);
  text += '\n';
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      text += "relation x" + std::to_string(j + 1) + "*x" + std::to_string(i + 1) + " = " + to_string(c[i][j]) +
              "*x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) + "\n";
  return parse_presentation(text);
}

}  // namespace testing_support
