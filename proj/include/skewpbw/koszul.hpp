#pragma once

/**
 * @file koszul.hpp
 * @brief Quadratic duals, bar-complex Ext tables and the Koszulity pipeline.
 *
 * Ext^{i,j}_A(K,K) is dual to Tor^A_{i,j}(K,K), which is computed as the
 * homology of the reduced bar complex (A_+)^{(x)i} in internal degree j with
 *
 *     d(a_1|...|a_i) = sum_{k=1}^{i-1} (-1)^{k+1} a_1|...|a_k a_{k+1}|...|a_i.
 *
 * Multiplication in A goes through normal forms of a confluent (or
 * sufficiently completed) rewriting system, so only homogeneous input is
 * accepted here.
 */

#include "skewpbw/classify.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/linalg.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/rewrite.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace skewpbw {

struct QuadraticData {
  std::size_t n = 0;
  linalg::Matrix<Rational> R_basis;  // coordinates in the n^2 word basis
};

inline QuadraticData quadratic_data(const Presentation& p) {
  if (!is_homogeneous_quadratic(p)) throw Error(Errc::NotHomogeneousQuadratic, p.name + " is not homogeneous quadratic");
  const std::size_t n = p.n();
  linalg::Matrix<Rational> rows;
  for (const auto& r : p.relators) rows.push_back(quadratic_coordinates(r, n));
  return QuadraticData{n, linalg::row_reduce(std::move(rows), n * n).rows};
}

/// R^perp under the pairing <x_r x_s, x*_k x*_l> = delta_rk delta_sl.
inline QuadraticData quadratic_dual(const QuadraticData& q) {
  return QuadraticData{q.n, linalg::nullspace(q.R_basis, q.n * q.n)};
}

inline Presentation to_presentation(const QuadraticData& q, const GeneratorSet& gens, std::string name) {
  Presentation out;
  out.name = std::move(name);
  out.gens = gens;
  for (const auto& row : q.R_basis) {
    Poly r;
    for (std::size_t c = 0; c < row.size(); ++c)
      r.add_term(Word{static_cast<Letter>(c / q.n), static_cast<Letter>(c % q.n)}, row[c]);
    out.relators.push_back(std::move(r));
  }
  return out;
}

/// Orients p and, unless the overlaps already all resolve, completes it up to
/// `degree`. For homogeneous input the result computes normal forms exactly in
/// every degree below `degree`.
inline RewriteSystem graded_system(const Presentation& p, std::size_t degree, std::size_t budget = kDefaultRuleBudget) {
  auto sys = certify(orient(p));
  if (sys.certificate() == Confluence::Certified) return sys;
  return complete_bounded(sys, std::max<std::size_t>(degree, 2), budget).system;
}

inline constexpr std::size_t kDefaultSizeCap = 20000;

struct ExtTable {
  std::size_t max_i = 0;
  std::size_t max_j = 0;
  /// dims[i][j]; nullopt where a bar-complex component exceeded the size cap.
  std::vector<std::vector<std::optional<std::size_t>>> dims;
  bool trusted = true;

  std::optional<std::size_t> at(std::size_t i, std::size_t j) const { return dims.at(i).at(j); }

  /// First (i, j) with i != j and a nonzero entry, scanning rows then columns.
  std::optional<std::pair<std::size_t, std::size_t>> first_off_diagonal() const {
    for (std::size_t i = 0; i <= max_i; ++i)
      for (std::size_t j = 0; j <= max_j; ++j)
        if (i != j && dims[i][j] && *dims[i][j] > 0) return std::pair{i, j};
    return std::nullopt;
  }
};

namespace detail {

// Graded multiplication on the irreducible-word basis of A_1..A_top.
class GradedAlgebra {
 public:
  GradedAlgebra(const RewriteSystem& sys, std::size_t top) : sys_(sys) {
    basis_.resize(top + 1);
    index_.resize(top + 1);
    for (std::size_t d = 0; d <= top; ++d) {
      basis_[d] = irreducible_words(sys, d);
      for (std::size_t k = 0; k < basis_[d].size(); ++k) index_[d].emplace(basis_[d][k], k);
    }
  }

  std::size_t dim(std::size_t d) const { return basis_.at(d).size(); }

  /// Coordinates of basis(du, u) * basis(dv, v) in A_{du+dv}.
  const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t du, std::size_t u, std::size_t dv,
                                                               std::size_t v) {
    auto key = std::array<std::size_t, 4>{du, u, dv, v};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Poly nf = normal_form(sys_, Poly::monomial(basis_[du][u] * basis_[dv][v]));
    std::vector<std::pair<std::size_t, Rational>> coords;
    for (const auto& [w, c] : nf.terms()) coords.emplace_back(index_[du + dv].at(w), c);
    return cache_.emplace(key, std::move(coords)).first->second;
  }

 private:
  const RewriteSystem& sys_;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::map<Word, std::size_t>> index_;
  std::map<std::array<std::size_t, 4>, std::vector<std::pair<std::size_t, Rational>>> cache_;
};

inline void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Basis of (A_+)^{(x)i} in degree j: a tensor is (degree, index) per slot.
using Tensor = std::vector<std::pair<std::size_t, std::size_t>>;

class BarComponent {
 public:
  BarComponent(GradedAlgebra& alg, std::size_t i, std::size_t j) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> cur;
    compositions(j, i, cur, comps);
    for (const auto& comp : comps) {
      std::size_t count = 1;
      for (auto d : comp) count *= alg.dim(d);
      dim_ += count;
      shapes_.push_back(comp);
    }
  }

  std::size_t dim() const { return dim_; }

  void enumerate(GradedAlgebra& alg) {
    for (const auto& comp : shapes_) {
      Tensor t(comp.size());
      auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == comp.size()) {
          index_.emplace(t, basis_.size());
          basis_.push_back(t);
          return;
        }
        for (std::size_t k = 0; k < alg.dim(comp[slot]); ++k) {
          t[slot] = {comp[slot], k};
          self(self, slot + 1);
        }
      };
      rec(rec, 0);
    }
  }

  const std::vector<Tensor>& basis() const { return basis_; }
  std::size_t index_of(const Tensor& t) const { return index_.at(t); }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<std::size_t>> shapes_;
  std::vector<Tensor> basis_;
  std::map<Tensor, std::size_t> index_;
};

// Rank of d: B_{i,j} -> B_{i-1,j} for i >= 2.
inline std::size_t bar_differential_rank(GradedAlgebra& alg, BarComponent& src, BarComponent& dst) {
  const std::size_t cols = dst.dim();
  linalg::Matrix<Rational> rows;
  rows.reserve(src.dim());
  for (const auto& t : src.basis()) {
    linalg::Row<Rational> img(cols, Rational{0});
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
      const Rational sign = (k % 2 == 0) ? Rational{1} : Rational{-1};
      const auto& prod = alg.product(t[k].first, t[k].second, t[k + 1].first, t[k + 1].second);
      Tensor merged;
      merged.reserve(t.size() - 1);
      merged.insert(merged.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
      merged.push_back({t[k].first + t[k + 1].first, 0});
      merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(k + 2), t.end());
      for (const auto& [idx, c] : prod) {
        merged[k].second = idx;
        img[dst.index_of(merged)] += sign * c;
      }
    }
    rows.push_back(std::move(img));
  }
  return linalg::rank(std::move(rows), cols);
}

}  // namespace detail

/// Tor/Ext dimensions for 0 <= i <= max_i, 0 <= j <= max_j. The system must be
/// homogeneous and either certified or completed through degree max_j.
inline ExtTable ext_table(const RewriteSystem& sys, std::size_t max_i, std::size_t max_j,
                          std::size_t size_cap = kDefaultSizeCap) {
  for (const auto& r : sys.rules())
    for (const auto& [w, c] : r.tail.terms())
      if (w.degree() != r.lead.degree())
        throw Error(Errc::NotHomogeneousQuadratic, "bar complex needs a homogeneous system");
  if (sys.certificate() != Confluence::Certified && sys.completion_degree() < max_j)
    throw Error(Errc::InsufficientCompletion, "system is not completed through degree " + std::to_string(max_j));

  ExtTable t;
  t.max_i = max_i;
  t.max_j = max_j;
  t.dims.assign(max_i + 1, std::vector<std::optional<std::size_t>>(max_j + 1, std::size_t{0}));
  t.dims[0][0] = 1;

  detail::GradedAlgebra alg(sys, max_j);
  // comps[i][j] for 1 <= i <= max_i + 1, i <= j <= max_j.
  std::map<std::pair<std::size_t, std::size_t>, detail::BarComponent> comps;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> ranks;
  for (std::size_t j = 1; j <= max_j; ++j)
    for (std::size_t i = 1; i <= std::min(max_i + 1, j); ++i) comps.emplace(std::pair{i, j}, detail::BarComponent(alg, i, j));

  auto component = [&](std::size_t i, std::size_t j) -> detail::BarComponent* {
    auto it = comps.find({i, j});
    return it == comps.end() ? nullptr : &it->second;
  };
  for (auto& [key, c] : comps)
    if (c.dim() <= size_cap) c.enumerate(alg);

  // rank of d_{i,j}; d_1 = 0 and components with i > j vanish.
  auto rank_of = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    if (i <= 1 || i > j) return std::size_t{0};
    if (auto it = ranks.find({i, j}); it != ranks.end()) return it->second;
    auto* src = component(i, j);
    auto* dst = component(i - 1, j);
    std::optional<std::size_t> r;
    if (src->dim() <= size_cap && dst->dim() <= size_cap) r = detail::bar_differential_rank(alg, *src, *dst);
    ranks.emplace(std::pair{i, j}, r);
    return r;
  };

  for (std::size_t i = 1; i <= max_i; ++i)
    for (std::size_t j = i; j <= max_j; ++j) {
      auto* c = component(i, j);
      auto in = rank_of(i, j);
      auto out = rank_of(i + 1, j);
      if (c->dim() > size_cap || !in || !out) {
        t.dims[i][j] = std::nullopt;
        t.trusted = false;
        continue;
      }
      t.dims[i][j] = c->dim() - *in - *out;
    }
  return t;
}

inline ExtTable ext_table(const Presentation& p, std::size_t max_i, std::size_t max_j,
                          std::size_t size_cap = kDefaultSizeCap, std::size_t budget = kDefaultRuleBudget) {
  if (!is_homogeneous_quadratic(p)) throw Error(Errc::NotHomogeneousQuadratic, p.name + " is not homogeneous quadratic");
  return ext_table(graded_system(p, max_j + 1, budget), max_i, max_j, size_cap);
}

/// Graded dimensions dim A_0..dim A_N of a homogeneous presentation.
inline std::vector<std::size_t> graded_dims(const Presentation& p, std::size_t N,
                                            std::size_t budget = kDefaultRuleBudget) {
  return hilbert_prefix(graded_system(p, N + 1, budget), N).dims;
}

struct PairingResult {
  bool holds = false;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> dual_dims;
};

/// Checks sum_k (-1)^k dim A^!_k dim A_{j-k} = 0 for 1 <= j <= N, a necessary
/// condition for Koszulity.
inline PairingResult hilbert_pairing(const Presentation& p, std::size_t N, std::size_t budget = kDefaultRuleBudget) {
  auto dual = to_presentation(quadratic_dual(quadratic_data(p)), p.gens, p.name + "_dual");
  PairingResult r;
  r.dims = graded_dims(p, N, budget);
  r.dual_dims = graded_dims(dual, N, budget);
  r.holds = true;
  for (std::size_t j = 1; j <= N; ++j) {
    long long sum = 0;
    for (std::size_t k = 0; k <= j; ++k) {
      long long term = static_cast<long long>(r.dual_dims[k]) * static_cast<long long>(r.dims[j - k]);
      sum += (k % 2 == 0) ? term : -term;
    }
    if (sum != 0) r.holds = false;
  }
  return r;
}

inline bool hilbert_pairing_test(const Presentation& p, std::size_t N, std::size_t budget = kDefaultRuleBudget) {
  return hilbert_pairing(p, N, budget).holds;
}

struct NotPreKoszul {};

struct CertifiedKoszul {
  PbwCertificate via;
  bool homogeneous = false;
};

struct RefutedAtDegree {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t dim = 0;
};

struct InconclusiveBounded {
  std::size_t max_i = 0;
  std::size_t max_j = 0;
};

using KoszulVerdict = std::variant<NotPreKoszul, CertifiedKoszul, RefutedAtDegree, InconclusiveBounded>;

/// 1. without pre-Koszul relators Koszulity is undefined;
/// 2. B0 = homogeneous version (the quadratic truncation);
/// 3. a PBW basis of B0 certifies Koszulity;
/// 4. otherwise a nonzero off-diagonal Ext entry of B0 refutes it.
inline KoszulVerdict koszul_verdict(const Presentation& p, std::size_t max_i = 4, std::size_t max_j = 4,
                                    std::size_t size_cap = kDefaultSizeCap) {
  auto shape = check_shape(p);
  if (!shape.valid) throw Error(Errc::InvalidShape, p.name + " does not have skew PBW shape");
  if (!check_pre_koszul_free(p).pre_koszul) return NotPreKoszul{};
  Presentation b0 = homogeneous_version(p, shape);
  auto cert = certify_pbw_basis(b0);
  if (cert.certified) return CertifiedKoszul{std::move(cert), same_monic_relators(p, b0)};
  auto table = ext_table(b0, max_i, max_j, size_cap);
  if (auto cell = table.first_off_diagonal()) return RefutedAtDegree{cell->first, cell->second, *table.at(cell->first, cell->second)};
  return InconclusiveBounded{max_i, max_j};
}

}  // namespace skewpbw
