#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace skewpbw;

namespace {

std::vector<std::vector<std::size_t>> library_dims(const ExtTable& t) {
  std::vector<std::vector<std::size_t>> out(t.max_i + 1, std::vector<std::size_t>(t.max_j + 1));
  for (std::size_t i = 0; i <= t.max_i; ++i)
    for (std::size_t j = 0; j <= t.max_j; ++j) {
      EXPECT_TRUE(t.at(i, j).has_value()) << i << "," << j;
      out[i][j] = t.at(i, j).value_or(0);
    }
  return out;
}

std::vector<std::vector<Rational>> q_matrix(std::size_t n, std::initializer_list<Rational> upper) {
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n, Rational{1}));
  auto it = upper.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) q[i][j] = *it++;
  return q;
}

}  // namespace

TEST(QuadraticDual, PolynomialRingDualIsExterior) {
  auto p = fixture("poly2");
  auto q = quadratic_data(p);
  EXPECT_EQ(q.n, 2u);
  EXPECT_EQ(q.R_basis.size(), 1u);
  auto dual = quadratic_dual(q);
  EXPECT_EQ(dual.R_basis.size(), 3u);
  // R and its annihilator pair to zero
  for (const auto& r : q.R_basis)
    for (const auto& s : dual.R_basis) {
      Rational dot = 0;
      for (std::size_t k = 0; k < r.size(); ++k) dot += r[k] * s[k];
      EXPECT_EQ(dot, 0);
    }
  auto d = to_presentation(dual, p.gens, "poly2_dual");
  EXPECT_EQ(graded_dims(d, 4), (std::vector<std::size_t>{1, 2, 1, 0, 0}));
}

TEST(QuadraticDual, DoubleDualRecoversTheRelations) {
  for (const char* name : {"qplane", "sklyanin", "qaffine3"}) {
    auto q = quadratic_data(fixture(name));
    auto back = quadratic_dual(quadratic_dual(q));
    EXPECT_EQ(linalg::rank(back.R_basis, q.n * q.n), q.R_basis.size()) << name;
    auto both = q.R_basis;
    both.insert(both.end(), back.R_basis.begin(), back.R_basis.end());
    EXPECT_EQ(linalg::rank(both, q.n * q.n), q.R_basis.size()) << name;
  }
}

TEST(ExtTable, PolynomialPlaneAgainstBruteForce) {
  auto t = ext_table(fixture("poly2"), 4, 4);
  EXPECT_TRUE(t.trusted);
  auto expected = oracle::ext_dims(oracle::quasi_commutative(2, q_matrix(2, {1}), 4), 4, 4);
  EXPECT_EQ(library_dims(t), expected);
  for (std::size_t i = 0; i <= 4; ++i)
    for (std::size_t j = 0; j <= 4; ++j) EXPECT_EQ(*t.at(i, j), i == j ? (std::vector<std::size_t>{1, 2, 1, 0, 0}[i]) : 0u);
  EXPECT_FALSE(t.first_off_diagonal());
}

TEST(ExtTable, QuantumPlaneAgainstBruteForce) {
  auto t = ext_table(fixture("qplane"), 4, 4);
  auto expected = oracle::ext_dims(oracle::quasi_commutative(2, q_matrix(2, {2}), 4), 4, 4);
  EXPECT_EQ(library_dims(t), expected);
  EXPECT_EQ(library_dims(t), library_dims(ext_table(fixture("poly2"), 4, 4)));
}

TEST(ExtTable, QuantumAffineSpaceAgainstBruteForce) {
  auto t = ext_table(fixture("qaffine3"), 3, 3);
  auto expected = oracle::ext_dims(oracle::quasi_commutative(3, q_matrix(3, {2, 3, 5}), 3), 3, 3);
  EXPECT_EQ(library_dims(t), expected);
  EXPECT_EQ(*t.at(3, 3), 1u);
}

TEST(ExtTable, MonomialAlgebraAgainstBruteForce) {
  // K<x,y>/(x*y): the dual kills x*x, y*x, y*y, leaving 1, x, y, x*y
  auto p = parse_presentation("algebra m\ngenerators x, y\nrelation x*y = 0\n");
  auto t = ext_table(p, 4, 4);
  auto expected = oracle::ext_dims(oracle::monomial(2, {{0, 1}}, 4), 4, 4);
  EXPECT_EQ(library_dims(t), expected);
  EXPECT_EQ(*t.at(2, 2), 1u);
  EXPECT_EQ(*t.at(3, 3), 0u);
  EXPECT_FALSE(t.first_off_diagonal());
}

TEST(ExtTable, RowOneIsTheGeneratorCount) {
  for (const char* name : {"poly3", "sklyanin", "qaffine3", "poly2"}) {
    auto p = fixture(name);
    auto t = ext_table(p, 2, 3);
    EXPECT_EQ(*t.at(1, 1), p.n()) << name;
    EXPECT_EQ(*t.at(1, 2), 0u) << name;
    EXPECT_EQ(*t.at(1, 3), 0u) << name;
    EXPECT_EQ(*t.at(2, 2), p.relators.size()) << name;
  }
}

TEST(ExtTable, SizeCapMarksCellsUntrusted) {
  auto t = ext_table(fixture("poly3"), 3, 3, 5);
  EXPECT_FALSE(t.trusted);
  bool any_missing = false;
  for (const auto& row : t.dims)
    for (const auto& c : row) any_missing = any_missing || !c;
  EXPECT_TRUE(any_missing);
}

TEST(ExtTable, RequiresHomogeneousInput) {
  try {
    ext_table(fixture("sridharan2"), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotHomogeneousQuadratic);
  }
  auto uncertified = orient(fixture("poly2"));
  try {
    ext_table(uncertified, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientCompletion);
  }
}

TEST(HilbertPairing, HoldsForKoszulExamples) {
  for (const char* name : {"poly2", "qplane", "qaffine3", "free2", "sklyanin"}) {
    auto r = hilbert_pairing(fixture(name), 6);
    EXPECT_TRUE(r.holds) << name;
    EXPECT_EQ(r.dims.size(), 7u);
  }
  auto f = hilbert_pairing(fixture("free2"), 6);
  EXPECT_EQ(f.dims, (std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64}));
  EXPECT_EQ(f.dual_dims, (std::vector<std::size_t>{1, 2, 0, 0, 0, 0, 0}));
}

TEST(HilbertPairing, ConvolutionOracle) {
  // independent check: A(t) A^!(-t) = 1 coefficientwise for the quantum 3-space
  auto r = hilbert_pairing(fixture("qaffine3"), 6);
  for (std::size_t j = 0; j <= 6; ++j) {
    long long s = 0;
    for (std::size_t k = 0; k <= j; ++k)
      s += (k % 2 ? -1 : 1) * static_cast<long long>(oracle::binomial(3, k) * oracle::binomial(j - k + 2, 2));
    EXPECT_EQ(s, j == 0 ? 1 : 0);
    EXPECT_EQ(r.dual_dims[j], j <= 3 ? oracle::binomial(3, j) : 0u);
  }
}

TEST(HilbertPairing, FailsForANonKoszulAlgebra) {
  // K<x,y>/(x*y, y*x + y*y): dims 1,2,2,1,1,1 against dual dims 1,2,2,1,0,0
  auto p = parse_presentation("algebra nk\ngenerators x, y\nrelation x*y = 0\nrelation y*x + y*y = 0\n");
  auto r = hilbert_pairing(p, 5);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{1, 2, 2, 1, 1, 1}));
  EXPECT_EQ(r.dual_dims, (std::vector<std::size_t>{1, 2, 2, 1, 0, 0}));
  // the pairing first breaks in degree 4, so Ext must leave the diagonal there
  auto t = ext_table(p, 3, 4);
  EXPECT_TRUE(t.trusted);
  auto off = t.first_off_diagonal();
  ASSERT_TRUE(off);
  EXPECT_EQ(*off, (std::pair<std::size_t, std::size_t>{3, 4}));
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(*t.at(i, i), r.dual_dims[i]);
}

TEST(KoszulVerdict, SridharanTypes) {
  for (int k = 1; k <= 6; ++k) {
    auto v = koszul_verdict(fixture("sridharan" + std::to_string(k)));
    ASSERT_TRUE(std::holds_alternative<CertifiedKoszul>(v)) << k;
    EXPECT_EQ(std::get<CertifiedKoszul>(v).homogeneous, k == 1) << k;
    EXPECT_TRUE(std::get<CertifiedKoszul>(v).via.certified);
  }
  for (int k = 7; k <= 10; ++k)
    EXPECT_TRUE(std::holds_alternative<NotPreKoszul>(koszul_verdict(fixture("sridharan" + std::to_string(k))))) << k;
  EXPECT_TRUE(std::holds_alternative<NotPreKoszul>(koszul_verdict(fixture("weyl"))));
}

TEST(KoszulVerdict, HomogeneousExamples) {
  for (const char* name : {"qaffine3", "sklyanin", "qplane", "poly2", "poly3"}) {
    auto v = koszul_verdict(fixture(name));
    ASSERT_TRUE(std::holds_alternative<CertifiedKoszul>(v)) << name;
    EXPECT_TRUE(std::get<CertifiedKoszul>(v).homogeneous) << name;
  }
  EXPECT_THROW(koszul_verdict(fixture("x2defect")), Error);
}

TEST(KoszulVerdict, PbwCertificateImpliesDiagonalExt) {
  for (const auto& name : fixture_names()) {
    auto p = fixture(name);
    auto shape = check_shape(p);
    if (!shape.valid) continue;
    auto b0 = homogeneous_version(p, shape);
    if (!certify_pbw_basis(b0).certified) continue;
    auto t = ext_table(b0, 3, 3);
    EXPECT_TRUE(t.trusted) << name;
    EXPECT_FALSE(t.first_off_diagonal()) << name;
  }
}

TEST(RandomQuasiCommutative, PbwAndBinomialHilbertSeries) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational{1}));
    for (auto& row : c)
      for (auto& v : row) v = testing_support::random_nonzero_rational(rng);
    auto p = testing_support::quasi_commutative(n, c);
    ASSERT_TRUE(certify_pbw_basis(p).certified);
    auto h = hilbert_prefix(certify(orient(p)), 5);
    for (std::size_t d = 0; d <= 5; ++d) EXPECT_EQ(h.dims[d], oracle::binomial(d + n - 1, n - 1));
    if (n == 2 && t < 10) {
      auto ext = ext_table(p, 3, 3);
      EXPECT_EQ(library_dims(ext), oracle::ext_dims(oracle::quasi_commutative(2, c, 3), 3, 3));
    }
  }
}
