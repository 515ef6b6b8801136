#include <stdexcept>
#include <doctest.h>

#include "pmm/presentation.hpp"
#include "pmm/sampling.hpp"

using namespace pmm;

namespace {

RnGenerator s(int i) { return RnGenerator::s(i); }
RnGenerator e(int n, std::vector<int> cuts) { return RnGenerator::e(StandardComposition(n, std::move(cuts))); }
StandardComposition comp(int n, std::vector<int> cuts) { return StandardComposition(n, std::move(cuts)); }

// e_2 (s_2 s_1 s_2) e_1 and the right-hand side printed next to it.
const RnWord kRemarkLhs = {e(3, {2}), s(2), s(1), s(2), e(3, {1})};
const RnWord kRemarkPrinted = {s(1), s(2), e(3, {1}), s(2), s(1), s(2), s(1), s(2)};
const RnWord kRemarkCorrected = {s(2), s(1), e(3, {1}), s(1), s(2), s(2), s(1), s(2)};

}  // namespace

TEST_CASE("eval_word basics") {
  CHECK(eval_word({}, 3) == PMElement::unit(3));
  CHECK(eval_word({s(1), s(1)}, 3) == PMElement::unit(3));
  CHECK(eval_word({e(3, {})}, 3) == PMElement::unit(3));
  CHECK_THROWS_AS(eval_word({s(3)}, 3), std::out_of_range);
  CHECK_THROWS_AS(eval_word({e(4, {1})}, 3), std::out_of_range);
}

TEST_CASE("the unit idempotent is neutral") {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    auto w = random_rn_word(rng, 3, 6);
    const auto base = eval_word(w, 3);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(rng() % (w.size() + 1)), e(3, {}));
    CHECK(eval_word(w, 3) == base);
  }
}

TEST_CASE("i_star") {
  CHECK(i_star(1, comp(3, {2})) == 1);
  CHECK_FALSE(i_star(2, comp(3, {2})).has_value());
  for (int i = 1; i < 5; ++i) CHECK(i_star(i, comp(5, {})) == 1);
  CHECK(i_star(3, comp(5, {1, 2})) == 3);
}

TEST_CASE("compute_q") {
  CHECK(compute_q(comp(3, {}), {}, comp(3, {1})).q == comp(3, {1}));
  CHECK_THROWS_AS(compute_q(comp(3, {2}), {1}, comp(3, {})), std::invalid_argument);
}

TEST_CASE("relation instances") {
  const auto r1 = instantiate_relation(Re1{1}, 2);
  CHECK(r1.lhs == RnWord{s(1), s(1)});
  CHECK(r1.rhs.empty());
  const auto r3 = instantiate_relation(Re3{1}, 3);
  CHECK(r3.lhs == RnWord{s(1), s(2), s(1)});
  CHECK(r3.rhs == RnWord{s(2), s(1), s(2)});
  const auto r4 = instantiate_relation(Re4{1, comp(3, {2})}, 3);
  CHECK(r4.lhs == RnWord{e(3, {2}), s(1)});
  CHECK(r4.rhs == RnWord{s(1), e(3, {2})});
  CHECK_THROWS_AS(instantiate_relation(Re4{2, comp(3, {2})}, 3), std::invalid_argument);
  CHECK_THROWS_AS(instantiate_relation(Re2{1, 2}, 3), std::invalid_argument);
}

TEST_CASE("re1-re4 hold exhaustively") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& inst : all_relation_instances_re1_re4(n)) CHECK(check_relation(inst, n));
  CHECK(all_relation_instances_re1_re4(4).size() == 19);
}

TEST_CASE("re5 holds on every small instance and on samples") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& inst : all_relation_instances_re5(n, 3, true)) CHECK(check_relation(inst, n));
  Rng rng(4);
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto p = random_re5_params(rng, n, 6);
    std::vector<int> word;
    for (const auto& g : p.middle) word.push_back(g.index);
    const auto inst = instantiate_relation(Re5{p.k, word, p.l}, n);
    CHECK(check_relation(inst, n));
  }
}

TEST_CASE("the printed remark identity does not hold; the corrected conjugator does") {
  const auto lhs = eval_word(kRemarkLhs, 3);
  CHECK(lhs == PMElement{Permutation({3, 2, 1}), OrderedSetPartition(3, {{1}, {2, 3}})});
  CHECK(eval_word(kRemarkPrinted, 3) == PMElement{Permutation({3, 2, 1}), OrderedSetPartition(3, {{2}, {1, 3}})});
  CHECK_FALSE(eval_word(kRemarkPrinted, 3) == lhs);
  CHECK(eval_word(kRemarkCorrected, 3) == lhs);
  const auto inst = instantiate_relation(Re5{comp(3, {2}), {2, 1, 2}, comp(3, {1})}, 3);
  CHECK(inst.lhs == kRemarkLhs);
  CHECK(inst.rhs == kRemarkCorrected);
  CHECK(check_relation(inst, 3));
}

TEST_CASE("normal forms") {
  CHECK(normal_form(PMElement::unit(3)).empty());
  const PMElement a{Permutation::identity(3), OrderedSetPartition(3, {{2}, {1, 3}})};
  CHECK(normal_form(a) == RnWord{s(1), e(3, {1}), s(1)});
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_rn(n)) CHECK(eval_word(normal_form(x), n) == x);
}

TEST_CASE("bounded congruence reaches exactly |R_n| classes through normal forms") {
  const auto r2 = bounded_congruence(2, 10);
  CHECK_FALSE(r2.mixed_class);
  CHECK(r2.fibers == 6);
  CHECK(r2.classes_with_normal_form == 6);
  const auto r3 = bounded_congruence(3, 6);
  CHECK_FALSE(r3.mixed_class);
  CHECK(r3.classes_with_normal_form == 77);  // one element needs a longer word
  CHECK(r3.fibers == 77);
}

TEST_CASE("word printing") {
  CHECK(to_string(RnWord{s(1), e(3, {1, 2}), e(3, {})}) == "s1 e[1,2] e[]");
}
