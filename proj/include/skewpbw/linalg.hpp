#pragma once

// Dense exact linear algebra over a field: reduced row echelon form, rank,
// nullspace. Matrices are small (hundreds of rows) so rows are plain vectors.

#include "skewpbw/freealg.hpp"

#include <cstddef>
#include <vector>

namespace skewpbw::linalg {

template <ExactField K>
using Row = std::vector<K>;

template <ExactField K>
using Matrix = std::vector<Row<K>>;

/// Which nonzero entry of a row becomes its pivot.
enum class Pivot { First, Last };

template <ExactField K>
struct Echelon {
  Matrix<K> rows;                    // nonzero, reduced, pivot entry 1
  std::vector<std::size_t> pivots;   // pivots[r] is the pivot column of rows[r]
};

/// Reduced row echelon form. With Pivot::Last each row is pivoted on its
/// right-most surviving column, scanning columns from the right.
template <ExactField K>
Echelon<K> row_reduce(Matrix<K> m, std::size_t ncols, Pivot order = Pivot::First) {
  Echelon<K> out;
  std::size_t next = 0;
  for (std::size_t step = 0; step < ncols && next < m.size(); ++step) {
    std::size_t col = order == Pivot::First ? step : ncols - 1 - step;
    std::size_t sel = next;
    while (sel < m.size() && m[sel][col] == K(0)) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[next]);
    K inv = K(1) / m[next][col];
    for (auto& v : m[next])
      if (v != K(0)) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || m[r][col] == K(0)) continue;
      K f = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c)
        if (m[next][c] != K(0)) m[r][c] -= f * m[next][c];
    }
    out.pivots.push_back(col);
    ++next;
  }
  m.resize(next);
  out.rows = std::move(m);
  return out;
}

template <ExactField K>
std::size_t rank(Matrix<K> m, std::size_t ncols) {
  return row_reduce(std::move(m), ncols).rows.size();
}

/// Basis of {v : m v = 0}.
template <ExactField K>
Matrix<K> nullspace(Matrix<K> m, std::size_t ncols) {
  auto ech = row_reduce(std::move(m), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Matrix<K> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row<K> v(ncols, K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace skewpbw::linalg
