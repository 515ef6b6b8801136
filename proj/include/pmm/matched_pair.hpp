#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "pmm/ordered_partition.hpp"
#include "pmm/permutation.hpp"

namespace pmm {

// The matched pair behind R_n: the acting monoid is P_n and the acted-on
// monoid is S_n, via phi((p_1, ..., p_m), w) = (w, (w^-1(p_1), ..., w^-1(p_m))).

/// s -> b component of phi: the permutation is passed through unchanged.
inline Permutation act_left(const OrderedSetPartition& /*s*/, const Permutation& b) { return b; }
/// s <- b component of phi: blockwise preimage b^-1(s).
inline OrderedSetPartition act_right(const OrderedSetPartition& s, const Permutation& b) {
  return s.preimage(b);
}

struct MatchedPairReport {
  int n = 0;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  std::array<std::uint64_t, 8> failures{};
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// Checks axioms (1)-(8) on every (s, t, b, c) in P_n^2 x S_n^2.
MatchedPairReport check_matched_pair(int n);
/// Same axioms on `samples` uniformly random quadruples.
MatchedPairReport check_matched_pair_sampled(int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace pmm

namespace pmm {

/// Product of the bicrossed monoid S_n x| P_n:
/// (b, s)(c, t) = (b (s -> c), (s <- c) t).
inline std::pair<Permutation, OrderedSetPartition> bicrossed_product(
    const std::pair<Permutation, OrderedSetPartition>& x,
    const std::pair<Permutation, OrderedSetPartition>& y) {
  const auto& [b, s] = x;
  const auto& [c, t] = y;
  return {b * act_left(s, c), act_right(s, c) * t};
}

}  // namespace pmm
