#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rings.hpp"
#include "snf.hpp"

namespace fwf {

/// Integer matrix stored by columns; entries are small (boundary
/// coefficients), so int64 is enough at this layer.
struct SparseIntMatrix {
  using Column = std::vector<std::pair<int, std::int64_t>>;  ///< sorted by row
  int rows = 0;
  int cols = 0;
  std::vector<Column> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }

  Matrix<BigInt> to_dense() const {
    Matrix<BigInt> M(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), BigInt(0));
    for (int j = 0; j < cols; ++j)
      for (auto [i, v] : columns[static_cast<std::size_t>(j)])
        M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    return M;
  }
};

/// Sparse vector over a ring model, sorted by index, no explicit zeros.
template <class R>
using SparseVector = std::vector<std::pair<int, typename R::value_type>>;

/// y ← y − c·x
template <class R>
void sparse_axpy(const R& ring, SparseVector<R>& y, const typename R::value_type& c,
                 const SparseVector<R>& x) {
  SparseVector<R> out;
  out.reserve(y.size() + x.size());
  std::size_t a = 0, b = 0;
  while (a < y.size() || b < x.size()) {
    if (b == x.size() || (a < y.size() && y[a].first < x[b].first)) {
      out.push_back(std::move(y[a++]));
    } else if (a == y.size() || x[b].first < y[a].first) {
      out.emplace_back(x[b].first, ring.neg(ring.mul(c, x[b].second)));
      ++b;
    } else {
      auto v = ring.sub(y[a].second, ring.mul(c, x[b].second));
      if (!ring.is_zero(v)) out.emplace_back(y[a].first, std::move(v));
      ++a, ++b;
    }
  }
  y = std::move(out);
}

template <class R>
SparseVector<R> to_ring(const R& ring, const SparseIntMatrix::Column& c) {
  SparseVector<R> out;
  out.reserve(c.size());
  for (auto [i, v] : c) {
    auto x = ring.from_int(v);
    if (!ring.is_zero(x)) out.emplace_back(i, std::move(x));
  }
  return out;
}

/// Unit-pivot elimination on a sparse matrix.
///
/// Repeatedly picks an entry that is a unit, clears its row from every other
/// column by column operations and discards its row and column. What is left
/// (the residual) contains no units; over a field it is zero. Passive columns
/// ride along (they receive the same column operations but never supply a
/// pivot), which turns image-membership questions into residual checks.
/// With tracking on, every active column remembers which combination of the
/// original columns it has become.
template <class R>
class UnitEliminator {
 public:
  using V = typename R::value_type;

  UnitEliminator(const R& ring, int rows, std::vector<SparseVector<R>> active,
                 std::vector<SparseVector<R>> passive = {}, bool track = false)
      : ring_(ring), rows_(rows), n_active_(static_cast<int>(active.size())), track_(track) {
    cols_ = std::move(active);
    for (auto& p : passive) cols_.push_back(std::move(p));
    row_dead_.assign(static_cast<std::size_t>(rows), false);
    pivot_col_.assign(cols_.size(), false);
    row_cols_.assign(static_cast<std::size_t>(rows), {});
    for (std::size_t j = 0; j < cols_.size(); ++j)
      for (const auto& e : cols_[j]) row_cols_[static_cast<std::size_t>(e.first)].push_back(static_cast<int>(j));
    if (track) {
      combos_.resize(static_cast<std::size_t>(n_active_));
      for (int j = 0; j < n_active_; ++j) combos_[static_cast<std::size_t>(j)].emplace_back(j, ring.one());
    }
    eliminate();
  }

  int pivots() const { return pivots_; }

  /// Active non-pivot columns, in original order.
  std::vector<int> residual_columns() const {
    std::vector<int> out;
    for (int j = 0; j < n_active_; ++j)
      if (!pivot_col_[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
  }

  std::vector<int> residual_rows() const {
    std::vector<int> out;
    for (int i = 0; i < rows_; ++i)
      if (!row_dead_[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
  }

  /// Current content of column j (active or passive; passive j is offset by
  /// the active count).
  const SparseVector<R>& column(int j) const { return cols_[static_cast<std::size_t>(j)]; }
  const SparseVector<R>& passive(int k) const { return cols_[static_cast<std::size_t>(n_active_ + k)]; }
  const SparseVector<R>& combination(int j) const { return combos_[static_cast<std::size_t>(j)]; }

  /// Dense residual restricted to the given residual rows and columns.
  Matrix<V> residual_matrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<int> row_pos(static_cast<std::size_t>(rows_), -1);
    for (std::size_t k = 0; k < rows.size(); ++k) row_pos[static_cast<std::size_t>(rows[k])] = static_cast<int>(k);
    Matrix<V> M(rows.size(), cols.size(), ring_.zero());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [i, v] : cols_[static_cast<std::size_t>(cols[c])]) {
        const int r = row_pos[static_cast<std::size_t>(i)];
        if (r >= 0) M(static_cast<std::size_t>(r), c) = v;
      }
    return M;
  }

 private:
  void eliminate() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int j = 0; j < n_active_; ++j) {
        if (pivot_col_[static_cast<std::size_t>(j)]) continue;
        const auto& col = cols_[static_cast<std::size_t>(j)];
        int best_row = -1;
        std::size_t best_load = 0;
        for (const auto& [i, v] : col) {
          if (!ring_.is_unit(v)) continue;
          const std::size_t load = row_cols_[static_cast<std::size_t>(i)].size();
          if (best_row < 0 || load < best_load) best_row = i, best_load = load;
        }
        if (best_row < 0) continue;
        pivot_on(best_row, j);
        progress = true;
      }
    }
  }

  static const V* entry(const SparseVector<R>& col, int row) {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    return (it != col.end() && it->first == row) ? &it->second : nullptr;
  }

  void pivot_on(int i, int j) {
    const auto& pcol = cols_[static_cast<std::size_t>(j)];
    const V inv = ring_.unit_inverse(*entry(pcol, i));
    auto& users = row_cols_[static_cast<std::size_t>(i)];
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    for (int k : users) {
      if (k == j || (k < n_active_ && pivot_col_[static_cast<std::size_t>(k)])) continue;
      auto& col = cols_[static_cast<std::size_t>(k)];
      const V* a = entry(col, i);
      if (!a) continue;
      const V factor = ring_.mul(*a, inv);
      sparse_axpy(ring_, col, factor, pcol);
      if (track_ && k < n_active_)
        sparse_axpy(ring_, combos_[static_cast<std::size_t>(k)], factor, combos_[static_cast<std::size_t>(j)]);
      for (const auto& e : pcol)
        if (e.first != i) row_cols_[static_cast<std::size_t>(e.first)].push_back(k);
    }
    users.clear();
    users.shrink_to_fit();
    row_dead_[static_cast<std::size_t>(i)] = true;
    pivot_col_[static_cast<std::size_t>(j)] = true;
    ++pivots_;
  }

  const R& ring_;
  int rows_;
  int n_active_;
  bool track_;
  int pivots_ = 0;
  std::vector<SparseVector<R>> cols_;
  std::vector<SparseVector<R>> combos_;
  std::vector<bool> row_dead_;
  std::vector<bool> pivot_col_;
  std::vector<std::vector<int>> row_cols_;
};

/// Rank and (over Z) the non-unit invariant factors of an integer matrix.
struct RankResult {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  ///< invariant factors > 1 (empty over fields)
};

template <class R>
RankResult sparse_rank(const R& ring, const SparseIntMatrix& A) {
  std::vector<SparseVector<R>> cols;
  cols.reserve(A.columns.size());
  for (const auto& c : A.columns) cols.push_back(to_ring(ring, c));
  UnitEliminator<R> elim(ring, A.rows, std::move(cols));
  RankResult out;
  out.rank = static_cast<std::size_t>(elim.pivots());
  if constexpr (!R::is_field) {
    const auto rr = elim.residual_rows();
    std::vector<int> rc;
    for (int j : elim.residual_columns())
      if (!elim.column(j).empty()) rc.push_back(j);
    if (!rc.empty()) {
      auto snf = smith_normal_form(ring, elim.residual_matrix(rr, rc));
      out.rank += snf.rank;
      for (const auto& d : snf.divisors)
        if (!ring.is_unit(d)) out.torsion.push_back(ring.to_bigint(d));
    }
  }
  return out;
}

/// Integer rank and invariant factors with overflow fallback.
inline RankResult integer_rank(const SparseIntMatrix& A) {
  return with_integers([&](auto ring) { return sparse_rank(ring, A); });
}

/// Basis of the kernel of A (over a field) or of the kernel lattice (over Z).
template <class R>
std::vector<SparseVector<R>> kernel_basis(const R& ring, const SparseIntMatrix& A) {
  std::vector<SparseVector<R>> cols;
  cols.reserve(A.columns.size());
  for (const auto& c : A.columns) cols.push_back(to_ring(ring, c));
  UnitEliminator<R> elim(ring, A.rows, std::move(cols), {}, true);
  std::vector<SparseVector<R>> out;
  const auto rc = elim.residual_columns();
  std::vector<int> nonzero_cols;
  for (int j : rc) {
    if (elim.column(j).empty()) out.push_back(elim.combination(j));
    else nonzero_cols.push_back(j);
  }
  if (nonzero_cols.empty()) return out;
  // Remaining columns have no unit entries: finish with a dense normal form.
  auto snf = smith_normal_form(ring, elim.residual_matrix(elim.residual_rows(), nonzero_cols), true);
  for (std::size_t t = snf.rank; t < nonzero_cols.size(); ++t) {
    SparseVector<R> v;
    for (std::size_t k = 0; k < nonzero_cols.size(); ++k) {
      const auto& c = snf.Vt(k, t);
      if (ring.is_zero(c)) continue;
      sparse_axpy(ring, v, ring.neg(c), elim.combination(nonzero_cols[k]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// For each target b, whether b lies in the column span of A (over Z: in the
/// lattice spanned by the columns).
template <class R>
std::vector<bool> image_membership(const R& ring, const SparseIntMatrix& A,
                                   std::vector<SparseVector<R>> targets) {
  std::vector<SparseVector<R>> cols;
  cols.reserve(A.columns.size());
  for (const auto& c : A.columns) cols.push_back(to_ring(ring, c));
  const std::size_t n_targets = targets.size();
  UnitEliminator<R> elim(ring, A.rows, std::move(cols), std::move(targets));
  std::vector<bool> out(n_targets, true);
  const auto rr = elim.residual_rows();
  std::vector<int> rc;
  for (int j : elim.residual_columns())
    if (!elim.column(j).empty()) rc.push_back(j);
  if (rc.empty()) {
    for (std::size_t k = 0; k < n_targets; ++k) out[k] = elim.passive(static_cast<int>(k)).empty();
    return out;
  }
  // Solve the residual system through its Smith form: b ∈ im A' iff U·b has
  // entries divisible by the divisors and zero past the rank.
  auto snf = smith_normal_form(ring, elim.residual_matrix(rr, rc), true);
  std::vector<int> row_pos(static_cast<std::size_t>(A.rows), -1);
  for (std::size_t k = 0; k < rr.size(); ++k) row_pos[static_cast<std::size_t>(rr[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < n_targets; ++k) {
    const auto& b = elim.passive(static_cast<int>(k));
    if (b.empty()) continue;
    std::vector<typename R::value_type> dense(rr.size(), ring.zero());
    for (const auto& [i, v] : b) dense[static_cast<std::size_t>(row_pos[static_cast<std::size_t>(i)])] = v;
    for (std::size_t r = 0; r < rr.size() && out[k]; ++r) {
      auto y = ring.zero();
      for (std::size_t c = 0; c < rr.size(); ++c)
        if (!ring.is_zero(dense[c])) y = ring.add(y, ring.mul(snf.U(r, c), dense[c]));
      if (r < snf.rank) {
        const auto& d = snf.divisors[r];
        const auto q = ring.quotient(y, d);
        if (!ring.is_zero(ring.sub(y, ring.mul(q, d)))) out[k] = false;
      } else if (!ring.is_zero(y)) {
        out[k] = false;
      }
    }
  }
  return out;
}

}  // namespace fwf
