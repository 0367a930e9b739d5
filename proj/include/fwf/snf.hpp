#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rings.hpp"

namespace fwf {

/// U·A·V = D with D diagonal, d_1 | d_2 | ..., U and V invertible over the
/// ring. U_inv and V_inv are kept because homology bases need both sides.
template <class R>
struct SmithForm {
  using V = typename R::value_type;
  Matrix<V> D;
  std::vector<V> divisors;  ///< nonzero diagonal entries, in order
  std::size_t rank = 0;
  bool has_transforms = false;
  Matrix<V> U, U_inv, Vt, Vt_inv;
};

namespace detail {

template <class R>
class SmithReducer {
 public:
  using V = typename R::value_type;

  SmithReducer(const R& ring, Matrix<V> A, bool transforms)
      : ring_(ring), track_(transforms) {
    out_.D = std::move(A);
    out_.has_transforms = transforms;
    if (transforms) {
      const std::size_t r = out_.D.rows(), c = out_.D.cols();
      out_.U = Matrix<V>::identity(r, ring.zero(), ring.one());
      out_.U_inv = out_.U;
      out_.Vt = Matrix<V>::identity(c, ring.zero(), ring.one());
      out_.Vt_inv = out_.Vt;
    }
  }

  SmithForm<R> run() {
    auto& D = out_.D;
    const std::size_t rows = D.rows(), cols = D.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
      auto pivot = smallest_entry(t, t, rows, cols);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (ring_.is_zero(D(i, t))) continue;
          row_axpy(i, t, ring_.quotient(D(i, t), D(t, t)));
          if (!ring_.is_zero(D(i, t))) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (ring_.is_zero(D(t, j))) continue;
          col_axpy(j, t, ring_.quotient(D(t, j), D(t, t)));
          if (!ring_.is_zero(D(t, j))) clean = false;
        }
        if (!clean) {
          // A remainder smaller than the pivot survived; promote it.
          std::size_t bi = t, bj = t;
          for (std::size_t i = t + 1; i < rows; ++i)
            if (!ring_.is_zero(D(i, t)) && ring_.norm(D(i, t)) < ring_.norm(D(bi, bj))) bi = i, bj = t;
          for (std::size_t j = t + 1; j < cols; ++j)
            if (!ring_.is_zero(D(t, j)) && ring_.norm(D(t, j)) < ring_.norm(D(bi, bj))) bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        if constexpr (!R::is_field) {
          auto bad = non_multiple(t);
          if (bad) {
            row_axpy(t, *bad, ring_.neg(ring_.one()));  // row_t += row_bad
            continue;
          }
        }
        break;
      }
      const V u = ring_.canonical_unit(D(t, t));
      if (!(u == ring_.one())) scale_row(t, u);
      out_.divisors.push_back(D(t, t));
    }
    out_.rank = out_.divisors.size();
    return std::move(out_);
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t r0, std::size_t c0,
                                                                    std::size_t rows,
                                                                    std::size_t cols) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const auto& D = out_.D;
    for (std::size_t i = r0; i < rows; ++i)
      for (std::size_t j = c0; j < cols; ++j) {
        if (ring_.is_zero(D(i, j))) continue;
        if (!best || ring_.norm(D(i, j)) < ring_.norm(D(best->first, best->second))) {
          best = {i, j};
          if constexpr (R::is_field) return best;
          if (ring_.is_unit(D(i, j))) return best;
        }
      }
    return best;
  }

  /// Some row below t holding an entry the pivot does not divide.
  std::optional<std::size_t> non_multiple(std::size_t t) const {
    const auto& D = out_.D;
    for (std::size_t i = t + 1; i < D.rows(); ++i)
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (ring_.is_zero(D(i, j))) continue;
        const V q = ring_.quotient(D(i, j), D(t, t));
        if (!ring_.is_zero(ring_.sub(D(i, j), ring_.mul(q, D(t, t))))) return i;
      }
    return std::nullopt;
  }

  // row_i -= q row_t
  void row_axpy(std::size_t i, std::size_t t, const V& q) {
    auto& D = out_.D;
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (!ring_.is_zero(D(t, j))) D(i, j) = ring_.sub(D(i, j), ring_.mul(q, D(t, j)));
    if (!track_) return;
    auto& U = out_.U;
    for (std::size_t j = 0; j < U.cols(); ++j)
      if (!ring_.is_zero(U(t, j))) U(i, j) = ring_.sub(U(i, j), ring_.mul(q, U(t, j)));
    auto& Ui = out_.U_inv;
    for (std::size_t r = 0; r < Ui.rows(); ++r)
      if (!ring_.is_zero(Ui(r, i))) Ui(r, t) = ring_.add(Ui(r, t), ring_.mul(q, Ui(r, i)));
  }

  // col_j -= q col_t
  void col_axpy(std::size_t j, std::size_t t, const V& q) {
    auto& D = out_.D;
    for (std::size_t i = 0; i < D.rows(); ++i)
      if (!ring_.is_zero(D(i, t))) D(i, j) = ring_.sub(D(i, j), ring_.mul(q, D(i, t)));
    if (!track_) return;
    auto& Vt = out_.Vt;
    for (std::size_t r = 0; r < Vt.rows(); ++r)
      if (!ring_.is_zero(Vt(r, t))) Vt(r, j) = ring_.sub(Vt(r, j), ring_.mul(q, Vt(r, t)));
    auto& Vi = out_.Vt_inv;
    for (std::size_t c = 0; c < Vi.cols(); ++c)
      if (!ring_.is_zero(Vi(j, c))) Vi(t, c) = ring_.add(Vi(t, c), ring_.mul(q, Vi(j, c)));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    out_.D.swap_rows(a, b);
    if (track_) {
      out_.U.swap_rows(a, b);
      out_.U_inv.swap_cols(a, b);
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    out_.D.swap_cols(a, b);
    if (track_) {
      out_.Vt.swap_cols(a, b);
      out_.Vt_inv.swap_rows(a, b);
    }
  }

  void scale_row(std::size_t t, const V& u) {
    auto& D = out_.D;
    for (std::size_t j = 0; j < D.cols(); ++j) D(t, j) = ring_.mul(u, D(t, j));
    if (!track_) return;
    const V ui = ring_.unit_inverse(u);
    for (std::size_t j = 0; j < out_.U.cols(); ++j) out_.U(t, j) = ring_.mul(u, out_.U(t, j));
    for (std::size_t r = 0; r < out_.U_inv.rows(); ++r)
      out_.U_inv(r, t) = ring_.mul(out_.U_inv(r, t), ui);
  }

  const R& ring_;
  bool track_;
  SmithForm<R> out_;
};

}  // namespace detail

/// Smith normal form over any ring model (Euclidean domain or field).
template <class R>
SmithForm<R> smith_normal_form(const R& ring, Matrix<typename R::value_type> A,
                               bool transforms = false) {
  return detail::SmithReducer<R>(ring, std::move(A), transforms).run();
}

/// Integer Smith normal form result with arbitrary-precision entries.
struct SNFResult {
  std::vector<BigInt> divisors;
  std::size_t rank = 0;
  Matrix<BigInt> D, U, V;  ///< U·A·V = D (U, V empty unless requested)
};

/// Integer SNF. Runs on checked int64 and falls back to arbitrary precision
/// when an intermediate value overflows.
inline SNFResult smith_normal_form(const Matrix<BigInt>& A, bool transforms = true) {
  const bool fits = [&] {
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j)
        if (abs(A(i, j)) > BigInt(std::numeric_limits<std::int64_t>::max() / 4)) return false;
    return true;
  }();
  auto finish = [&](auto ring, const auto& M) {
    auto s = smith_normal_form(ring, M, transforms);
    SNFResult r;
    r.rank = s.rank;
    for (const auto& d : s.divisors) r.divisors.push_back(ring.to_bigint(d));
    auto to_big = [&](const auto& x) { return ring.to_bigint(x); };
    r.D = s.D.template convert<BigInt>(to_big);
    if (transforms) {
      r.U = s.U.template convert<BigInt>(to_big);
      r.V = s.Vt.template convert<BigInt>(to_big);
    }
    return r;
  };
  if (fits) {
    try {
      return finish(CheckedIntegers{},
                    A.convert<std::int64_t>([](const BigInt& x) { return x.convert_to<std::int64_t>(); }));
    } catch (const ArithmeticOverflow&) {
    }
  }
  return finish(BigIntegers{}, A);
}

}  // namespace fwf
