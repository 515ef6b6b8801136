#pragma once

#include <random>

#include "pmm/braid_pm.hpp"
#include "pmm/presentation.hpp"

namespace pmm {

// Random instance generators shared by the self-test suites and the tests.

using Rng = std::mt19937_64;

StandardComposition random_composition(Rng& rng, int n);
/// Letters drawn uniformly from s_i^{+-1} (signs only when `signed_letters`)
/// and, when `with_e`, the non-unit e's.
BraidWord random_braid_word(Rng& rng, int n, int length, bool with_e, bool signed_letters = true);
RnWord random_rn_word(Rng& rng, int n, int length);

/// (re4-) parameters built from block-local braids and cross-block pure
/// braid generators, which restrict to the identity on every block.
BRe4 random_re4_params(Rng& rng, int n, int max_length);
/// (re5-) parameters with a random signed middle word satisfying the side condition.
BRe5 random_re5_params(Rng& rng, int n, int max_middle);
/// A different braid word with the same permutation as `word`: random signs
/// and inserted pure braid generators.
BraidWord random_lift(Rng& rng, const std::vector<int>& word, int n);

}  // namespace pmm
