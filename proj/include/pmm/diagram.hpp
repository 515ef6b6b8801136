#pragma once

#include <string>

#include "pmm/braid_pm.hpp"

namespace pmm {

/// Schematic SVG of a braid word: one horizontal band per layer of phi(w),
/// time running left to right starting from the first-acting letter. s_i draws
/// the strand at position i over the one at i+1, s_i^-1 the reverse. Strands
/// that leave a band at an e letter are drawn dashed up to that letter.
/// Output is byte-stable for a given input.
std::string word_diagram_svg(const BraidWord& w, int n);

/// Schematic SVG of a layered automorphism: one band per layer, each strand
/// joining its source to its target position and labelled by its conjugator.
std::string layered_diagram_svg(const LayeredAut& f);

}  // namespace pmm
