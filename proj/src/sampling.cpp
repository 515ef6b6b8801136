#include "pmm/sampling.hpp"

#include <algorithm>

namespace pmm {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord pure_factor(Rng& rng, int i, int j) {
  auto w = pure_braid_generator(i, j);
  return uniform(rng, 0, 1) ? w : inverse_word(w);
}

}  // namespace

StandardComposition random_composition(Rng& rng, int n) {
  std::vector<int> cuts;
  for (int k = 1; k < n; ++k)
    if (uniform(rng, 0, 1)) cuts.push_back(k);
  return StandardComposition(n, std::move(cuts));
}

BraidWord random_braid_word(Rng& rng, int n, int length, bool with_e, bool signed_letters) {
  BraidWord w;
  if (n < 2 && !with_e) return w;
  for (int k = 0; k < length; ++k) {
    const bool pick_e = with_e && (n < 2 || uniform(rng, 0, 3) == 0);
    if (pick_e) {
      w.push_back(BraidGenerator::e(random_composition(rng, n)));
    } else {
      const int sign = signed_letters && uniform(rng, 0, 1) ? -1 : 1;
      w.push_back(BraidGenerator::s(uniform(rng, 1, n - 1), sign));
    }
  }
  return w;
}

RnWord random_rn_word(Rng& rng, int n, int length) {
  return project(random_braid_word(rng, n, length, true, false));
}

BRe4 random_re4_params(Rng& rng, int n, int max_length) {
  const auto cuts = random_composition(rng, n);
  const auto blocks = OrderedSetPartition::standard(cuts);
  std::vector<int> local;  // s_i with {i, i+1} inside one block
  for (int i = 1; i < n; ++i)
    if (blocks.block_of(i) == blocks.block_of(i + 1)) local.push_back(i);
  std::vector<std::pair<int, int>> cross;  // strands in different blocks
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (blocks.block_of(i) != blocks.block_of(j)) cross.emplace_back(i, j);

  auto piece = [&](BraidWord& w) {
    const bool use_cross = !cross.empty() && (local.empty() || uniform(rng, 0, 2) == 0);
    if (use_cross) {
      const auto [i, j] = cross[uniform(rng, 0, static_cast<int>(cross.size()) - 1)];
      const auto f = pure_factor(rng, i, j);
      w.insert(w.end(), f.begin(), f.end());
    } else if (!local.empty()) {
      w.push_back(BraidGenerator::s(local[uniform(rng, 0, static_cast<int>(local.size()) - 1)],
                                    uniform(rng, 0, 1) ? 1 : -1));
    }
  };

  BraidWord right;
  const int pieces = uniform(rng, 0, std::max(0, max_length));
  for (int k = 0; k < pieces; ++k) piece(right);
  // Cross-block pure factors restrict to the identity on every block.
  auto cross_factor = [&]() -> BraidWord {
    if (cross.empty() || uniform(rng, 0, 1)) return {};
    const auto [i, j] = cross[uniform(rng, 0, static_cast<int>(cross.size()) - 1)];
    return pure_factor(rng, i, j);
  };
  BraidWord left = cross_factor();
  const auto inv = inverse_word(right);
  left.insert(left.end(), inv.begin(), inv.end());
  const auto tail = cross_factor();
  left.insert(left.end(), tail.begin(), tail.end());
  return {std::move(left), cuts, std::move(right)};
}

BRe5 random_re5_params(Rng& rng, int n, int max_middle) {
  while (true) {
    const auto k = random_composition(rng, n);
    const auto l = random_composition(rng, n);
    auto middle = random_braid_word(rng, n, uniform(rng, 0, max_middle), false);
    if (!middle.empty() && i_star(middle.front().index, k)) continue;
    return {k, std::move(middle), l, std::nullopt};
  }
}

BraidWord random_lift(Rng& rng, const std::vector<int>& word, int n) {
  BraidWord out;
  auto maybe_pure = [&] {
    if (n < 2 || uniform(rng, 0, 2) != 0) return;
    const int i = uniform(rng, 1, n - 1);
    const int j = uniform(rng, i + 1, n);
    const auto f = pure_factor(rng, i, j);
    out.insert(out.end(), f.begin(), f.end());
  };
  maybe_pure();
  for (int i : word) {
    out.push_back(BraidGenerator::s(i, uniform(rng, 0, 1) ? 1 : -1));
    maybe_pure();
  }
  return out;
}

}  // namespace pmm
