#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace skewpbw;

namespace {

const std::vector<std::string> kPbwFixtures = {"sridharan1", "sridharan2", "sridharan3", "sridharan4", "sridharan5",
                                               "sridharan6", "sridharan7", "sridharan8", "sridharan9", "sridharan10",
                                               "weyl",       "poly1",      "poly2",      "poly3",      "qplane",
                                               "qaffine3",   "sklyanin"};

Poly parse_poly(const Presentation& p, const std::string& text) {
  std::string src = "algebra t\ngenerators ";
  for (std::size_t k = 0; k < p.n(); ++k) src += (k ? ", " : "") + p.gens.name(static_cast<Letter>(k));
  src += "\nrelation " + text + " = 0\n";
  return parse_presentation(src).relators.at(0);
}

}  // namespace

TEST(Rewrite, OrientMakesMonicRulesWithLargestLead) {
  auto sys = orient(fixture("sridharan6"));
  ASSERT_EQ(sys.rules().size(), 3u);
  for (const auto& r : sys.rules()) {
    EXPECT_EQ(r.lead.degree(), 2u);
    EXPECT_GT(r.lead[0], r.lead[1]);
    for (const auto& [w, c] : r.tail.terms()) EXPECT_LT(w, r.lead);
  }
}

TEST(Rewrite, PbwCertificateOnCorpus) {
  for (const auto& name : kPbwFixtures) {
    auto cert = certify_pbw_basis(fixture(name));
    EXPECT_TRUE(cert.certified) << name;
    EXPECT_FALSE(cert.witness) << name;
    EXPECT_EQ(cert.obstruction_count, fixture(name).n() == 3 ? 1u : 0u) << name;
  }
}

TEST(Rewrite, NonJacobiWitness) {
  auto p = fixture("nonjacobi");
  auto cert = certify_pbw_basis(p);
  ASSERT_FALSE(cert.certified);
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(*cert.witness_word, (Word{2, 1, 0}));
  EXPECT_EQ(*cert.witness, parse_poly(p, "x + y + z"));
  EXPECT_EQ(format(*cert.witness, p.gens), "z + y + x");
  EXPECT_EQ(certify(orient(p)).certificate(), Confluence::Refuted);
}

TEST(Rewrite, NormalFormIndependentOfStrategyWhenCertified) {
  std::mt19937 rng(5);
  for (const char* name : {"sridharan6", "sklyanin", "weyl", "qaffine3"}) {
    auto sys = certify(orient(fixture(name)));
    ASSERT_EQ(sys.certificate(), Confluence::Certified);
    for (int t = 0; t < 30; ++t) {
      Poly f = testing_support::random_poly(rng, 3 > sys.gens().size() ? sys.gens().size() : 3, 4, 3);
      Poly a = normal_form(sys, f, Strategy::Leftmost);
      Poly b = normal_form(sys, f, Strategy::Rightmost);
      EXPECT_EQ(a, b) << name;
      for (const auto& [w, c] : a.terms()) EXPECT_TRUE(sys.is_irreducible(w));
    }
  }
}

TEST(Rewrite, NormalFormDependsOnStrategyWhenRefuted) {
  auto sys = orient(fixture("nonjacobi"));
  Poly zyx = Poly::monomial(Word{2, 1, 0});
  Poly a = normal_form(sys, zyx, Strategy::Leftmost);
  Poly b = normal_form(sys, zyx, Strategy::Rightmost);
  EXPECT_NE(a, b);
  EXPECT_EQ(a - b, parse_poly(fixture("nonjacobi"), "x + y + z"));
}

TEST(Rewrite, NormalFormIsIdempotentAndLinear) {
  auto sys = orient(fixture("sridharan10"));
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    Poly f = testing_support::random_poly(rng, 3, 4, 4), g = testing_support::random_poly(rng, 3, 4, 4);
    Poly nf = normal_form(sys, f);
    EXPECT_EQ(normal_form(sys, nf), nf);
    EXPECT_EQ(normal_form(sys, f + g), nf + normal_form(sys, g));
    EXPECT_TRUE(normal_form(sys, f - nf).is_zero());
  }
}

TEST(Rewrite, WeylNormalFormsMatchTheCommutator) {
  auto p = fixture("weyl");
  auto sys = orient(p);
  // (y*x)^2 reduced to the ordered basis x^a y^b
  Poly yx = Poly::monomial(Word{1, 0});
  Poly nf = normal_form(sys, yx * yx);
  for (const auto& [w, c] : nf.terms()) EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
  EXPECT_EQ(nf.degree(), 4u);
}

TEST(Rewrite, OverlapsAreOrderedAndBounded) {
  auto sys = orient(fixture("poly3"));
  auto all = overlaps(sys);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].word, (Word{2, 1, 0}));
  EXPECT_TRUE(overlaps(sys, 2).empty());
  EXPECT_TRUE(resolve(sys, all[0]).is_zero());
}

TEST(Rewrite, HilbertPrefixOfPolynomialRings) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto sys = certify(orient(fixture("poly" + std::to_string(n))));
    auto h = hilbert_prefix(sys, 6);
    ASSERT_EQ(h.dims.size(), 7u);
    EXPECT_EQ(h.valid_to, 6u);
    for (std::size_t d = 0; d <= 6; ++d) EXPECT_EQ(h.dims[d], oracle::binomial(d + n - 1, n - 1));
    for (std::size_t d = 0; d <= 4; ++d) EXPECT_EQ(irreducible_words(sys, d).size(), h.dims[d]);
  }
}

TEST(Rewrite, HilbertPrefixNeedsCertificateOrCompletion) {
  auto sys = orient(fixture("poly3"));
  try {
    hilbert_prefix(sys, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientCompletion);
  }
  auto free_sys = orient(parse_presentation("algebra f\ngenerators x, y\n"));
  auto done = complete_bounded(free_sys, 6);
  auto h = hilbert_prefix(done.system, 5);
  for (std::size_t d = 0; d <= 5; ++d) EXPECT_EQ(h.dims[d], std::size_t{1} << d);
}

TEST(Rewrite, CompletionOfNonJacobiAddsTheWitness) {
  auto sys = orient(fixture("nonjacobi"));
  auto done = complete_bounded(sys, 4);
  ASSERT_FALSE(done.added.empty());
  EXPECT_EQ(done.added.front().as_poly(), monic(parse_poly(fixture("nonjacobi"), "x + y + z")));
  auto h = hilbert_prefix(done.system, 3);
  EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_THROW(complete_bounded(sys, 1), std::invalid_argument);
}

TEST(Rewrite, CompletionCertifiesMonomialAndPbwInputs) {
  auto poly = complete_bounded(orient(fixture("poly3")), 5);
  EXPECT_TRUE(poly.added.empty());
  EXPECT_EQ(poly.system.certificate(), Confluence::Certified);
  EXPECT_EQ(poly.system.completion_degree(), 5u);
}

TEST(Rewrite, CompletionDetectsTheUnitIdeal) {
  // the overlap y*x*x yields 2x - 1, and then x*x = x forces a constant
  auto p = parse_presentation("algebra u\ngenerators x, y\nrelation y*x = x*y + 1\nrelation x*x = x\nrelation y*y = 0\n");
  try {
    complete_bounded(orient(p), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnitIdeal);
  }
}

TEST(Rewrite, CompletionBudget) {
  try {
    complete_bounded(orient(fixture("nonjacobi")), 4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(SSets, QuasiCommutativeSets) {
  auto s = compute_S(fixture("qaffine3"), 5);
  // S: pairs (k, l) with k <= l; the (l, k) word is a leading word
  EXPECT_EQ(s.S.size(), 6u);
  for (auto [a, b] : s.S) EXPECT_LE(a, b);
  EXPECT_EQ(s.counts, (std::vector<std::size_t>{1, 3, 6, 10, 15, 21}));
  EXPECT_THROW(compute_S(fixture("sridharan2"), 3), Error);
}

TEST(SSets, FreeAlgebraHasEveryPair) {
  auto s = compute_S(parse_presentation("algebra f\ngenerators x, y\n"), 4);
  EXPECT_EQ(s.S.size(), 4u);
  EXPECT_EQ(s.counts, (std::vector<std::size_t>{1, 2, 4, 8, 16}));
}

TEST(SSets, CountsMatchHilbertPrefixForPbwAlgebras) {
  for (const char* name : {"poly2", "qplane", "sklyanin", "poly3"}) {
    auto p = fixture(name);
    auto s = compute_S(p, 5);
    EXPECT_EQ(s.counts, hilbert_prefix(certify(orient(p)), 5).dims) << name;
  }
}
