#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmm/free_group.hpp"
#include "pmm/ordered_partition.hpp"
#include "pmm/pm_monoid.hpp"
#include "pmm/presentation.hpp"

namespace pmm {

/// Generator s_i^{+-1} or e_{k_1, ..., k_{m-1}} of the braid PM-monoid.
struct BraidGenerator {
  enum class Kind { S, E };
  Kind kind = Kind::S;
  int index = 0;
  int sign = 1;
  StandardComposition cuts;

  static BraidGenerator s(int i, int sign = 1) { return {Kind::S, i, sign < 0 ? -1 : 1, {}}; }
  static BraidGenerator e(StandardComposition c) { return {Kind::E, 0, 1, std::move(c)}; }

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
  friend auto operator<=>(const BraidGenerator&, const BraidGenerator&) = default;
};

using BraidWord = std::vector<BraidGenerator>;

void validate_generator(const BraidGenerator& g, int n);
/// s_i^{+-1} -> s_i; e's unchanged.
RnWord project(const BraidWord& w);
/// Letters reversed with signs flipped; e's kept in place of themselves.
BraidWord inverse_word(const BraidWord& w);
std::string to_string(const BraidGenerator& g);
std::string to_string(const BraidWord& w);

/// Partial isomorphism F(x_l : l in domain) -> F(x_t : t in image) given by
/// x_l -> w_l^-1 x_{target(l)} w_l. Conjugators are kept reduced and carry no
/// leading x_{target(l)}^{+-1}, which makes the representation canonical.
struct AutLayer {
  std::vector<int> domain;  ///< ascending
  std::vector<int> target;  ///< target[k] is the image of domain[k]
  std::vector<FreeWord> conjugator;

  std::vector<int> image() const;
  /// Image of x_l as a reduced word; l must be in the domain.
  FreeWord apply(int l) const;

  friend bool operator==(const AutLayer&, const AutLayer&) = default;
};

/// Element of EF_n: an ordered sequence of layers whose domains and images
/// each partition {1..n}. The constructor enforces the invariants.
class LayeredAut {
public:
  LayeredAut(int n, std::vector<AutLayer> layers);
  static LayeredAut unit(int n);

  int size() const { return n_; }
  const std::vector<AutLayer>& layers() const { return layers_; }

  friend bool operator==(const LayeredAut&, const LayeredAut&) = default;

private:
  int n_ = 0;
  std::vector<AutLayer> layers_;
};

/// Strips leading x_t^{+-1} letters; w and x_t^k w conjugate x_t identically.
FreeWord canonical_conjugator(const FreeWord& w, int target);

LayeredAut phi_gen(const BraidGenerator& g, int n);

/// F * G with G acting first. Candidate layer (i, j) pairs G's layer j (outer)
/// with F's layer i (inner); its strands are those of G_j landing in dom(F_i).
/// Generators outside dom(F_i) and outside the new image are sent to 1.
LayeredAut layered_product(const LayeredAut& f, const LayeredAut& g);
inline LayeredAut operator*(const LayeredAut& f, const LayeredAut& g) {
  return layered_product(f, g);
}

LayeredAut phi_word(const BraidWord& w, int n);
bool words_equal(const BraidWord& w1, const BraidWord& w2, int n);

/// Underlying R_n element: targets give the permutation, domains the partition.
PMElement shadow(const LayeredAut& f);

/// Composition of the Artin automorphisms of a word without e letters.
/// Throws std::invalid_argument on an e letter.
FreeEndo artin_action(const BraidWord& w, int n);
/// True when the action fixes x_n ... x_2 x_1.
bool artin_total_word_check(const BraidWord& w, int n);

/// Pure braid generator A_{ij} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1, i < j.
BraidWord pure_braid_generator(int i, int j);

/// Side condition of (re4-): for the word left e_cuts right, the right part
/// maps every block onto itself and the braid left*right, restricted to each
/// block, is trivial. Decided on the full Artin action of left*right.
bool block_restricted_identity(const BraidWord& left, const StandardComposition& cuts,
                               const BraidWord& right);

enum class BraidSchema { re1, re2, re3, re4, re5 };

struct BRe1 { int i; bool inverse_first = false; };
struct BRe2 { int i, j; };
struct BRe3 { int i; };
struct BRe4 { BraidWord left; StandardComposition cuts; BraidWord right; };
/// `lift` is the braid word used inside Ad; by default the positive
/// bubble-sort lift of the standardizing permutation.
struct BRe5 {
  StandardComposition k;
  BraidWord middle;
  StandardComposition l;
  std::optional<BraidWord> lift;
};
using BraidRelationParams = std::variant<BRe1, BRe2, BRe3, BRe4, BRe5>;

struct BraidRelationInstance {
  BraidSchema schema;
  BraidWord lhs;
  BraidWord rhs;
};

/// Throws std::invalid_argument on a violated side condition.
BraidRelationInstance instantiate_braid_relation(const BraidRelationParams& params, int n);
bool relation_soundness(const BraidRelationParams& params, int n);

/// Every (re1-)-(re3-) instance for n.
std::vector<BraidRelationParams> all_braid_relations_re1_re3(int n);

}  // namespace pmm
