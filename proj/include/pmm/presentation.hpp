#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pmm/ordered_partition.hpp"
#include "pmm/pm_monoid.hpp"

namespace pmm {

/// Generator s_i or e_{k_1, ..., k_{m-1}} of R_n. e with no cuts is the unit.
struct RnGenerator {
  enum class Kind { S, E };
  Kind kind = Kind::S;
  int index = 0;             ///< i for s_i
  StandardComposition cuts;  ///< cuts for e

  static RnGenerator s(int i) { return {Kind::S, i, {}}; }
  static RnGenerator e(StandardComposition c) { return {Kind::E, 0, std::move(c)}; }

  friend bool operator==(const RnGenerator&, const RnGenerator&) = default;
  friend auto operator<=>(const RnGenerator&, const RnGenerator&) = default;
};

using RnWord = std::vector<RnGenerator>;

/// Throws std::out_of_range when the letter does not exist for n.
void validate_generator(const RnGenerator& g, int n);
PMElement generator_element(const RnGenerator& g, int n);
PMElement eval_word(const RnWord& w, int n);

/// j when {i, i+1} lies in block j (1-based) of the standard partition.
std::optional<int> i_star(int i, const StandardComposition& cuts);

/// Word s_{j_1} ... s_{j_t} for a permutation (bubble-sort order).
RnWord word_of_permutation(const Permutation& sigma);

struct QResult {
  StandardComposition q;
  Permutation standardizer;     ///< w with w(k * beta(l)) standard
  std::vector<int> standardizer_word;
};

/// q = u^w(k * phi_{beta^-1}(l)) where beta is the permutation of `perm_word`.
/// Throws std::invalid_argument when {i_1, i_1 + 1} lies inside a block of k.
QResult compute_q(const StandardComposition& k, const std::vector<int>& perm_word,
                  const StandardComposition& l);

enum class Schema { re1, re2, re3, re4, re5 };

struct Re1 { int i; };
struct Re2 { int i, j; };
struct Re3 { int i; };
struct Re4 { int i; StandardComposition cuts; };
struct Re5 { StandardComposition k; std::vector<int> word; StandardComposition l; };
using RelationParams = std::variant<Re1, Re2, Re3, Re4, Re5>;

struct RelationInstance {
  Schema schema;
  RnWord lhs;
  RnWord rhs;
  RelationParams params;
};

/// Builds the two sides. Ad(sigma)(e) expands to the word sigma^-1 e sigma.
/// Throws std::invalid_argument on a violated side condition.
RelationInstance instantiate_relation(const RelationParams& params, int n);
bool check_relation(const RelationInstance& inst, int n);

/// Every instance of re1-re4 for n, in a fixed order.
std::vector<RelationInstance> all_relation_instances_re1_re4(int n);
/// Every instance of re5 whose middle word has length <= max_word.
/// `with_unit` also admits k or l with no cuts.
std::vector<RelationInstance> all_relation_instances_re5(int n, int max_word, bool with_unit);

/// w_1 e_q w_2 with eval_word equal to a; e with no cuts is omitted.
RnWord normal_form(const PMElement& a);

std::string to_string(const RnGenerator& g);
std::string to_string(const RnWord& w);

/// Congruence on the words of length <= max_length over {s_i} and the
/// non-unit e's, generated by every relation instance whose two sides fit.
struct CongruenceReport {
  int n = 0;
  int max_length = 0;
  std::size_t words = 0;
  std::size_t relation_instances = 0;
  std::size_t classes = 0;         ///< connected components of the rewrite graph
  std::size_t fibers = 0;          ///< distinct eval_word values among the words
  std::size_t classes_with_normal_form = 0;
  bool mixed_class = false;        ///< some class holds two different values
};
CongruenceReport bounded_congruence(int n, int max_length);

}  // namespace pmm
