#pragma once

/**
 * @file deform.hpp
 * @brief PBW-deformation analysis of nonhomogeneous quadratic algebras T(V)/<P>.
 *
 * P sits in F_2 = K + V + V(x)V. Its quadratic projection R = pi(P) defines the
 * homogeneous version B = T(V)/<R>. The checks are
 *
 *     (I)  P meets F_1 only in zero,
 *     (J)  (F_1 P F_1) meets F_2 exactly in P,
 *
 * both necessary for A to be a PBW deformation of B and, with B Koszul,
 * sufficient. F_1 P F_1 = P + VP + PV + VPV lives in F_4, so (J) is decided
 * there by exact ranks.
 */

#include "skewpbw/error.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/koszul.hpp"
#include "skewpbw/linalg.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/rewrite.hpp"

#include <string_view>
#include <vector>

namespace skewpbw {

/// Coordinates of words of length <= top: block d starts at 1 + n + ... + n^{d-1}
/// and words inside a block are numbered in base n.
class FilteredCoordinates {
 public:
  FilteredCoordinates(std::size_t n, std::size_t top) : n_(n) {
    std::size_t power = 1;
    for (std::size_t d = 0; d <= top; ++d) {
      offset_.push_back(dim_);
      dim_ += power;
      power *= n;
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t block_start(std::size_t d) const { return offset_.at(d); }

  std::size_t index(const Word& w) const {
    std::size_t k = 0;
    for (Letter l : w) k = k * n_ + l;
    return offset_.at(w.degree()) + k;
  }

  linalg::Row<Rational> coords(const Poly& p) const {
    linalg::Row<Rational> v(dim_, Rational{0});
    for (const auto& [w, c] : p.terms()) v[index(w)] = c;
    return v;
  }

 private:
  std::size_t n_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offset_;
};

struct DeformationData {
  std::size_t n = 0;
  std::vector<Poly> P;                 // basis of span(P), as polynomials
  linalg::Matrix<Rational> P_basis;    // F_2 coordinates of P
  std::vector<Poly> R;                 // pi(P[k]) for each k
  linalg::Matrix<Rational> R_basis;    // V(x)V coordinates of R
  linalg::Matrix<Rational> alpha;      // alpha[k] = alpha(R[k]) in V
  linalg::Row<Rational> beta;          // beta[k] = beta(R[k])
  bool quadratic_parts_independent = false;
};

/// Builds P, R = pi(P) and, when the quadratic parts are independent, the maps
/// alpha, beta with P[k] = R[k] - alpha(R[k]) - beta(R[k]). The relators are
/// kept verbatim when linearly independent, otherwise replaced by an echelon basis.
inline DeformationData deformation_data(const Presentation& p) {
  p.validate();
  const std::size_t n = p.n();
  FilteredCoordinates f2(n, 2);
  DeformationData d;
  d.n = n;
  linalg::Matrix<Rational> rows;
  for (const auto& r : p.relators) rows.push_back(f2.coords(r));
  const std::size_t rk = linalg::rank(rows, f2.dim());
  if (rk == rows.size()) {
    d.P = p.relators;
    d.P_basis = std::move(rows);
  } else {
    d.P_basis = linalg::row_reduce(std::move(rows), f2.dim(), linalg::Pivot::Last).rows;
    for (const auto& row : d.P_basis) {
      Poly q;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0) continue;
        Word w;
        if (c >= f2.block_start(2)) {
          auto k = c - f2.block_start(2);
          w = Word{static_cast<Letter>(k / n), static_cast<Letter>(k % n)};
        } else if (c >= f2.block_start(1)) {
          w = Word{static_cast<Letter>(c - f2.block_start(1))};
        }
        q.add_term(w, row[c]);
      }
      d.P.push_back(std::move(q));
    }
  }
  for (const auto& q : d.P) {
    Poly r = graded_component(q, 2);
    linalg::Row<Rational> v(n * n, Rational{0});
    for (const auto& [w, c] : r.terms()) v[w[0] * n + w[1]] = c;
    d.R.push_back(std::move(r));
    d.R_basis.push_back(std::move(v));
  }
  d.quadratic_parts_independent = linalg::rank(d.R_basis, n * n) == d.P.size();
  if (d.quadratic_parts_independent) {
    for (const auto& q : d.P) {
      linalg::Row<Rational> a(n, Rational{0});
      for (Letter g = 0; g < n; ++g) a[g] = -q.coefficient(Word{g});
      d.alpha.push_back(std::move(a));
      d.beta.push_back(-q.coefficient(Word{}));
    }
  }
  return d;
}

inline DeformationData split_alpha_beta(const Presentation& p) {
  auto d = deformation_data(p);
  if (!d.quadratic_parts_independent)
    throw Error(Errc::DependentQuadraticParts, p.name + ": quadratic parts of the relators are linearly dependent");
  return d;
}

inline bool check_condition_I(const DeformationData& d) {
  return linalg::rank(d.R_basis, d.n * d.n) == d.P.size();
}

inline bool check_condition_J(const DeformationData& d) {
  const std::size_t n = d.n;
  FilteredCoordinates f4(n, 4);
  linalg::Matrix<Rational> rows;
  for (const auto& q : d.P) {
    rows.push_back(f4.coords(q));
    for (Letter a = 0; a < n; ++a) {
      rows.push_back(f4.coords(q.sandwich(Word{a}, Word{})));
      rows.push_back(f4.coords(q.sandwich(Word{}, Word{a})));
      for (Letter b = 0; b < n; ++b) rows.push_back(f4.coords(q.sandwich(Word{a}, Word{b})));
    }
  }
  const std::size_t high = f4.block_start(3);
  linalg::Matrix<Rational> projected;
  projected.reserve(rows.size());
  for (const auto& r : rows) projected.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(high), r.end());
  const std::size_t rank_w = linalg::rank(std::move(rows), f4.dim());
  const std::size_t rank_high = linalg::rank(std::move(projected), f4.dim() - high);
  // dim(W meets F_2) = rank W - rank of its degree-3,4 projection; P is inside it.
  return rank_w - rank_high == d.P.size();
}

enum class DeformationVerdict { CertifiedPBWDeformation, RefutedByI, RefutedByJ, InconclusiveBNotCertified };

constexpr std::string_view to_string(DeformationVerdict v) {
  switch (v) {
    case DeformationVerdict::CertifiedPBWDeformation: return "CertifiedPBWDeformation";
    case DeformationVerdict::RefutedByI: return "RefutedByI";
    case DeformationVerdict::RefutedByJ: return "RefutedByJ";
    case DeformationVerdict::InconclusiveBNotCertified: return "InconclusiveBNotCertified";
  }
  return "Unknown";
}

struct DeformationReport {
  bool cond_I = false;
  bool cond_J = false;
  bool B_koszul_certified = false;
  DeformationVerdict verdict = DeformationVerdict::InconclusiveBNotCertified;
  bool gr_hilbert_match = false;
  std::size_t checked_to = 0;
  std::vector<std::size_t> gr_dims;  // filtration quotients of A
  std::vector<std::size_t> b_dims;   // graded dims of B
  bool trivial = false;              // P = R
  Presentation B;
};

/// Homogeneous version determined by P: relators pi(P).
inline Presentation homogeneous_version_of(const Presentation& p, const DeformationData& d) {
  Presentation b;
  b.name = p.name;
  b.gens = p.gens;
  b.params = p.params;
  for (const auto& r : d.R)
    if (!r.is_zero()) b.relators.push_back(r);
  return b;
}

inline DeformationReport deformation_verdict(const Presentation& p, std::size_t N = 5,
                                             std::size_t budget = kDefaultRuleBudget) {
  auto d = deformation_data(p);
  DeformationReport rep;
  rep.B = homogeneous_version_of(p, d);
  rep.cond_I = check_condition_I(d);
  rep.cond_J = check_condition_J(d);
  auto b_sys = certify(orient(rep.B));
  rep.B_koszul_certified = b_sys.certificate() == Confluence::Certified;
  rep.trivial = true;
  for (std::size_t k = 0; k < d.P.size(); ++k) rep.trivial = rep.trivial && d.P[k] == d.R[k];

  if (!rep.cond_I)
    rep.verdict = DeformationVerdict::RefutedByI;
  else if (!rep.cond_J)
    rep.verdict = DeformationVerdict::RefutedByJ;
  else if (!rep.B_koszul_certified)
    rep.verdict = DeformationVerdict::InconclusiveBNotCertified;
  else
    rep.verdict = DeformationVerdict::CertifiedPBWDeformation;

  auto a_sys = certify(orient(p));
  if (a_sys.certificate() != Confluence::Certified) a_sys = complete_bounded(a_sys, N + 1, budget).system;
  rep.gr_dims = hilbert_prefix(a_sys, N).dims;
  rep.b_dims = graded_dims(rep.B, N, budget);
  rep.gr_hilbert_match = rep.gr_dims == rep.b_dims;
  rep.checked_to = N;
  return rep;
}

}  // namespace skewpbw
