#include "support.hpp"

#include <gtest/gtest.h>

using namespace skewpbw;

namespace {

Errc parse_error(std::string_view text, const ParamBinding& params = {}) {
  try {
    parse_presentation(text, params);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Errc::SyntaxError;
}

std::string parse_message(std::string_view text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parser, ReadsRelationsAsLhsMinusRhs) {
  auto p = parse_presentation(R"(algebra demo   # comment
generators x, y
relation y*x = 2*x*y + x - 1/2
)");
  EXPECT_EQ(p.name, "demo");
  ASSERT_EQ(p.n(), 2u);
  ASSERT_EQ(p.relators.size(), 1u);
  Poly expected = Poly::monomial(Word{1, 0}) - Poly::monomial(Word{0, 1}, Rational{2}) - Poly::generator(0) +
                  Poly(Rational{1, 2});
  EXPECT_EQ(p.relators[0], expected);
}

TEST(Parser, ParametersSubstituteAndCanBeOverridden) {
  const char* text = R"(algebra qp
param q nonzero = 2
generators x, y
relation y*x = q*x*y
)";
  EXPECT_EQ(parse_presentation(text).relators[0].coefficient(Word{0, 1}), Rational{-2});
  auto p = parse_presentation(text, {{"q", Rational{3, 2}}});
  EXPECT_EQ(p.relators[0].coefficient(Word{0, 1}), Rational(-3, 2));
  EXPECT_EQ(p.params.at("q"), Rational(3, 2));
  EXPECT_EQ(parse_error(text, {{"q", Rational{0}}}), Errc::ZeroParameter);
}

TEST(Parser, UnboundParameterIsAnError) {
  const char* text = "algebra a\nparam t\ngenerators x, y\nrelation y*x = t*x*y\n";
  EXPECT_EQ(parse_error(text), Errc::UnboundParameter);
  EXPECT_NO_THROW(parse_presentation(text, {{"t", Rational{5}}}));
}

TEST(Parser, ErrorsCarryCodesAndPositions) {
  EXPECT_EQ(parse_error("algebra a\ngenerators x, y\nrelation y*z = 0\n"), Errc::UnknownGenerator);
  EXPECT_EQ(parse_error("algebra a\ngenerators x, x\n"), Errc::InvalidGenerators);
  EXPECT_EQ(parse_error("algebra a\ngenerators x\nrelation x*x*x = 0\n"), Errc::DegreeTooHigh);
  EXPECT_EQ(parse_error("algebra a\ngenerators x, y\nrelation x*y = x*y\n"), Errc::ZeroRelator);
  EXPECT_EQ(parse_error("algebra a\ngenerators x, y\nrelation x* = 0\n"), Errc::SyntaxError);
  EXPECT_EQ(parse_error("generators x\n"), Errc::SyntaxError);
  EXPECT_EQ(parse_message("algebra a\ngenerators x, y\nrelation y*z = 0\n").rfind("UnknownGenerator: 3:12:", 0), 0u);
}

TEST(Parser, SerializeRoundTripsEveryFixture) {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    auto text = serialize(p);
    auto q = parse_presentation(text);
    EXPECT_EQ(p, q) << name << "\n" << text;
  }
}

TEST(Parser, SerializeRoundTripsRandomQuasiCommutative) {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<Rational>> c(3, std::vector<Rational>(3, Rational{1}));
    for (auto& row : c)
      for (auto& v : row) v = testing_support::random_nonzero_rational(rng);
    auto p = testing_support::quasi_commutative(3, c);
    EXPECT_EQ(parse_presentation(serialize(p)), p);
  }
}

TEST(Fixtures, UnknownNamesAndCorpora) {
  try {
    fixture("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownFixture);
  }
  EXPECT_EQ(corpus("sridharan").size(), 10u);
  EXPECT_EQ(corpus("core"), (std::vector<std::string>{"poly3", "sklyanin", "qaffine3"}));
  EXPECT_EQ(corpus("all").size(), fixture_names().size());
  EXPECT_THROW(corpus("bogus"), Error);
}

TEST(Fixtures, AllValidateAndAreQuadratic) {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    EXPECT_NO_THROW(p.validate()) << name;
    for (const auto& r : p.relators) EXPECT_LE(*r.degree(), 2u) << name;
  }
}
