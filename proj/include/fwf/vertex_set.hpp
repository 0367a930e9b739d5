#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwf {

/// Largest ground set a complex may live on.
inline constexpr int kMaxVertices = 64;

/// A subset of the ground set [m] = {1, ..., m}, vertex v stored in bit v-1.
///
/// Doubles as the simplex type: a simplex is its (ascending) vertex list and
/// the empty set is the (-1)-dimensional simplex. Ordering is lexicographic on
/// the ascending vertex lists, so {1,2} < {1,2,3} < {1,3} < {2}.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  static VertexSet of(std::span<const int> vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  /// The full ground set [m].
  static constexpr VertexSet range(int m) {
    return VertexSet(m >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << m) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Simplex dimension, -1 for the empty simplex.
  constexpr int dimension() const { return size() - 1; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= 64 && ((bits_ >> (v - 1)) & 1U) != 0;
  }

  VertexSet with(int v) const {
    if (v < 1 || v > kMaxVertices)
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside [1, 64]");
    return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
  }

  constexpr VertexSet without(int v) const {
    if (v < 1 || v > 64) return *this;
    return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Smallest vertex, 0 when empty.
  constexpr int min_vertex() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  /// Largest vertex, 0 when empty.
  constexpr int max_vertex() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Number of elements of this set strictly smaller than v.
  constexpr int count_below(int v) const {
    if (v <= 1) return 0;
    if (v > 64) return size();
    return std::popcount(bits_ & ((std::uint64_t{1} << (v - 1)) - 1));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int low = std::countr_zero(diff);
    const std::uint64_t above =
        low == 63 ? 0 : ~((std::uint64_t{1} << (low + 1)) - 1);
    // The lists agree below `low`; the one holding `low` is smaller unless
    // the other list has already ended there.
    if ((a.bits_ >> low) & 1U)
      return (b.bits_ & above) != 0 ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
    return (a.bits_ & above) != 0 ? std::strong_ordering::greater
                                  : std::strong_ordering::less;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

using Simplex = VertexSet;

/// Iterate over all subsets of `set` (including the empty set and `set`).
template <class Fn>
void for_each_subset(VertexSet set, Fn&& fn) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = full;
  while (true) {
    fn(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// Compress `sigma` onto the positions of `within`: the k-th smallest vertex
/// of `within` becomes vertex k.
inline VertexSet compress(VertexSet sigma, VertexSet within) {
  std::uint64_t out = 0;
  int position = 0;
  for (std::uint64_t b = within.bits(); b != 0; b &= b - 1, ++position) {
    const int bit = std::countr_zero(b);
    if ((sigma.bits() >> bit) & 1U) out |= std::uint64_t{1} << position;
  }
  return VertexSet(out);
}

/// Inverse of compress: vertex k goes to the k-th smallest vertex of `onto`.
inline VertexSet expand(VertexSet sigma, VertexSet onto) {
  std::uint64_t out = 0;
  int position = 0;
  for (std::uint64_t b = onto.bits(); b != 0; b &= b - 1, ++position) {
    if ((sigma.bits() >> position) & 1U)
      out |= std::uint64_t{1} << std::countr_zero(b);
  }
  return VertexSet(out);
}

}  // namespace fwf
