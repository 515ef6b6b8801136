#include <stdexcept>
#include <doctest.h>

#include "pmm/diagram.hpp"
#include "pmm/io.hpp"
#include "pmm/sampling.hpp"

using namespace pmm;

TEST_CASE("word parsing") {
  const auto a = parse_word("s1 e[2] s2", 3, WordMode::rn);
  CHECK(a.rn.size() == 3);
  CHECK(a.braid.empty());
  CHECK(to_string(a) == "s1 e[2] s2");
  const auto b = parse_word("  s1^-1\te[1,2]  s2 ", 3, WordMode::braid);
  REQUIRE(b.braid.size() == 3);
  CHECK(b.braid[0] == BraidGenerator::s(1, -1));
  CHECK(b.spans[1].offset == 8);
  CHECK(b.spans[1].length == 6);
  CHECK(parse_word("e[]", 3, WordMode::rn).rn[0].cuts.cuts().empty());
  CHECK(parse_word("", 3, WordMode::rn).rn.empty());
}

TEST_CASE("word parse errors carry the token position") {
  auto position_of = [](const char* text, WordMode mode) -> long {
    try {
      parse_word(text, 3, mode);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("e[2,2]", WordMode::rn) == 0);
  CHECK(position_of("s1 s3", WordMode::rn) == 3);
  CHECK(position_of("s1 s0", WordMode::rn) == 3);
  CHECK(position_of("s1 s1^-1", WordMode::rn) == 3);
  CHECK(position_of("s1 s1^-2", WordMode::braid) == 3);
  CHECK(position_of("s1 x1", WordMode::braid) == 3);
  CHECK(position_of("e[3]", WordMode::rn) == 0);
  CHECK(position_of("e[2,1]", WordMode::rn) == 0);
  CHECK(position_of("e[1,]", WordMode::rn) == 0);
  CHECK(position_of("e[1", WordMode::rn) == 0);
  CHECK(position_of("s", WordMode::rn) == 0);
  CHECK(position_of("s1^-1", WordMode::braid) == -1);
}

TEST_CASE("word length guard") {
  std::string text;
  for (std::size_t i = 0; i <= kWordLengthGuard; ++i) text += "s1 ";
  CHECK_THROWS_AS(parse_word(text, 2, WordMode::rn), std::length_error);
}

TEST_CASE("parse, print and parse again is the identity") {
  Rng rng(1);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto w = random_braid_word(rng, n, static_cast<int>(rng() % 10), true);
    const auto once = parse_word(to_string(w), n, WordMode::braid);
    CHECK(once.braid == w);
    CHECK(parse_word(to_string(once), n, WordMode::braid).braid == w);
    const auto r = project(w);
    CHECK(parse_word(to_string(r), n, WordMode::rn).rn == r);
  }
}

TEST_CASE("element JSON") {
  const PMElement a{Permutation({2, 1, 3}), OrderedSetPartition(3, {{1, 2}, {3}})};
  CHECK(to_json(a).dump() == R"({"n":3,"partition":[[1,2],[3]],"perm":[2,1,3]})");
  for (const auto& x : enumerate_rn(3)) CHECK(pm_element_from_json(to_json(x)) == x);
  CHECK_THROWS_AS(pm_element_from_json(json::parse(R"({"n":3,"perm":[1,2],"partition":[[1,2,3]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(pm_element_from_json(json::parse(R"({"n":3})")), std::invalid_argument);
}

TEST_CASE("layered automorphism JSON") {
  const auto f = phi_gen(BraidGenerator::s(1), 2);
  CHECK(to_json(f).dump() == R"([{"conjugator":{"1":"x1","2":""},"domain":[1,2],"target":{"1":2,"2":1}}])");
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto g = phi_word(random_braid_word(rng, n, 8, true), n);
    CHECK(layered_aut_from_json(to_json(g)) == g);
  }
  // x2 x1 and x1 conjugate x2 identically
  const auto j = json::parse(R"([{"conjugator":{"1":"x2 x1","2":""},"domain":[1,2],"target":{"1":2,"2":1}}])");
  CHECK(layered_aut_from_json(j) == f);
}

TEST_CASE("matrix JSON") {
  const auto m = matrix_from_json(json::parse(R"({"n":2,"entries":[["1","-1/2"],[0,"3"]]})"));
  CHECK(m(0, 1) == Rational(-1, 2));
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS(matrix_from_json(json::parse(R"({"n":3,"entries":[["1"]]})")));
  CHECK_THROWS(matrix_from_json(json::parse(R"({"n":2,"entries":[["1","2"],["3"]]})")));
  CHECK_THROWS(matrix_from_json(json::parse(R"({"n":1,"entries":[["a"]]})")));

  const auto p = poly_matrix_from_json(
      json::parse(R"({"n":2,"entries":[[{"coeffs":["1","0","2"]},"0"],["0",{"coeffs":["0","1"]}]]})"));
  CHECK(p(0, 0) == Polynomial({1, 0, 2}));
  CHECK(p(1, 1) == Polynomial::monomial(1, 1));
  CHECK(poly_matrix_from_json(to_json(p)) == p);

  const auto t = matrix_tuple_from_json(json::parse(R"({"terms":[{"n":2,"entries":[["1","0"],["0","0"]]},
                                                                  {"n":2,"entries":[["0","0"],["0","1"]]}]})"));
  CHECK(t.terms().size() == 2);
  CHECK(matrix_tuple_from_json(to_json(t)) == t);
}

TEST_CASE("diagrams") {
  const auto unit = word_diagram_svg({}, 3);
  CHECK(unit.find("data-strands=\"1 2 3\"") != std::string::npos);
  CHECK(unit.find("class=\"band\"", unit.find("class=\"band\"") + 1) == std::string::npos);
  CHECK(unit.find("stroke-dasharray=\"4 3\"") == std::string::npos);

  const auto split = word_diagram_svg({BraidGenerator::e(StandardComposition(3, {2}))}, 3);
  const auto first = split.find("data-layer=\"1\" data-strands=\"1 2\"");
  const auto second = split.find("data-layer=\"2\" data-strands=\"3\"");
  CHECK(first != std::string::npos);
  CHECK(second != std::string::npos);
  CHECK(first < second);

  const auto cross = word_diagram_svg({BraidGenerator::s(1)}, 2);
  CHECK(cross.find("class=\"crossing\" data-column=\"1\" data-over=\"1\" data-under=\"2\"") != std::string::npos);
  const auto inverse = word_diagram_svg({BraidGenerator::s(1, -1)}, 2);
  CHECK(inverse.find("data-over=\"2\" data-under=\"1\"") != std::string::npos);

  const BraidWord w = {BraidGenerator::s(2), BraidGenerator::e(StandardComposition(3, {1})), BraidGenerator::s(1, -1)};
  CHECK(word_diagram_svg(w, 3) == word_diagram_svg(w, 3));
  CHECK(layered_diagram_svg(phi_word(w, 3)).find("data-layer=\"2\"") != std::string::npos);
  CHECK_THROWS(word_diagram_svg({BraidGenerator::s(3)}, 3));
}
