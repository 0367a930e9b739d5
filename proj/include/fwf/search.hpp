#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace fwf {

/// Outcome of a bounded combinatorial search. `none` is only reported after
/// the whole space was exhausted; `refuted` is a proof by a necessary
/// condition (fill searches); `exhausted` means the node budget ran out.
enum class SearchStatus { found, none, refuted, exhausted };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::refuted: return "refuted";
    case SearchStatus::exhausted: return "exhausted";
  }
  return "?";
}

inline constexpr long kDefaultSearchBudget = 1'000'000;

namespace detail {

/// Dynamic bitset over item indices, used as a memo key for "set of items
/// already placed".
struct ItemSet {
  std::vector<std::uint64_t> words;

  explicit ItemSet(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  friend bool operator==(const ItemSet&, const ItemSet&) = default;
};

struct ItemSetHash {
  std::size_t operator()(const ItemSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : s.words) h = (h ^ w) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

using DeadStates = std::unordered_set<ItemSet, ItemSetHash>;

}  // namespace detail
}  // namespace fwf
