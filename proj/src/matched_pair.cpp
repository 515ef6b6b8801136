#include "pmm/matched_pair.hpp"

#include <random>
#include <vector>

namespace pmm {

namespace {

using S = OrderedSetPartition;
using B = Permutation;

void check_quadruple(const S& s, const S& t, const B& b, const B& c, MatchedPairReport& r) {
  const int n = b.size();
  const S one_s = S::full(n);
  const B one_b = B::identity(n);

  const bool holds[8] = {
      act_left(s, act_left(t, b)) == act_left(s * t, b),
      act_right(s * t, b) == act_right(s, act_left(t, b)) * act_right(t, b),
      act_right(act_right(s, b), c) == act_right(s, b * c),
      act_left(s, b * c) == act_left(s, b) * act_left(act_right(s, b), c),
      act_left(one_s, b) == b,
      act_left(s, one_b) == one_b,
      act_right(s, one_b) == s,
      act_right(one_s, b) == one_s,
  };
  ++r.cases;
  for (int axiom = 0; axiom < 8; ++axiom) {
    if (holds[axiom]) continue;
    ++r.failures[axiom];
    if (!r.counterexample)
      r.counterexample = "axiom (" + std::to_string(axiom + 1) + ") fails at s=" + to_string(s) +
                         " t=" + to_string(t) + " b=" + to_string(b) + " c=" + to_string(c);
  }
}

}  // namespace

MatchedPairReport check_matched_pair(int n) {
  MatchedPairReport r;
  r.n = n;
  r.exhaustive = true;
  const auto parts = all_ordered_partitions(n);
  const auto perms = all_permutations(n);
  for (const auto& s : parts)
    for (const auto& t : parts)
      for (const auto& b : perms)
        for (const auto& c : perms) check_quadruple(s, t, b, c, r);
  return r;
}

MatchedPairReport check_matched_pair_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  MatchedPairReport r;
  r.n = n;
  const auto parts = all_ordered_partitions(n);
  const auto perms = all_permutations(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_s(0, parts.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_b(0, perms.size() - 1);
  for (std::uint64_t i = 0; i < samples; ++i)
    check_quadruple(parts[pick_s(rng)], parts[pick_s(rng)], perms[pick_b(rng)],
                    perms[pick_b(rng)], r);
  return r;
}

}  // namespace pmm
