#include "pmm/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pmm {

void validate_generator(const RnGenerator& g, int n) {
  if (g.kind == RnGenerator::Kind::S) {
    if (g.index < 1 || g.index >= n)
      throw std::out_of_range("s" + std::to_string(g.index) + " is not a generator for n=" +
                              std::to_string(n));
  } else if (g.cuts.size() != n) {
    throw std::out_of_range("e" + to_string(g.cuts) + " is not a generator for n=" +
                            std::to_string(n));
  }
}

PMElement generator_element(const RnGenerator& g, int n) {
  validate_generator(g, n);
  if (g.kind == RnGenerator::Kind::S) return PMElement::transposition(n, g.index);
  return PMElement::idempotent(g.cuts);
}

PMElement eval_word(const RnWord& w, int n) {
  auto acc = PMElement::unit(n);
  for (const auto& g : w) acc = acc * generator_element(g, n);
  return acc;
}

std::optional<int> i_star(int i, const StandardComposition& cuts) {
  if (i < 1 || i >= cuts.size()) throw std::out_of_range("i_star index out of range");
  for (int j = 1; j <= cuts.block_count(); ++j) {
    const auto b = cuts.block(j);
    if (b.front() <= i && i + 1 <= b.back()) return j;
  }
  return std::nullopt;
}

RnWord word_of_permutation(const Permutation& sigma) {
  RnWord w;
  for (int i : transposition_word(sigma)) w.push_back(RnGenerator::s(i));
  return w;
}

QResult compute_q(const StandardComposition& k, const std::vector<int>& perm_word,
                  const StandardComposition& l) {
  const int n = k.size();
  if (l.size() != n) throw std::invalid_argument("compute_q: size mismatch");
  if (!perm_word.empty() && i_star(perm_word.front(), k))
    throw std::invalid_argument("side condition violated: {" + std::to_string(perm_word.front()) +
                                "," + std::to_string(perm_word.front() + 1) +
                                "} lies inside a block of e" + to_string(k));
  const auto beta = permutation_of_word(n, perm_word);
  // phi_{beta^-1}(l) = (beta(l_1), ..., beta(l_m'))
  const auto mixed = OrderedSetPartition::standard(k) * OrderedSetPartition::standard(l).image(beta);
  auto st = standardize_partition(mixed);
  return {st.q, st.w, transposition_word(st.w)};
}

namespace {

RnWord s_word(const std::vector<int>& idx) {
  RnWord w;
  for (int i : idx) w.push_back(RnGenerator::s(i));
  return w;
}

RnWord concat(std::initializer_list<RnWord> parts) {
  RnWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("side condition violated: " + what);
}

void require_s(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("s" + std::to_string(i) + " outside n");
}

}  // namespace

RelationInstance instantiate_relation(const RelationParams& params, int n) {
  return std::visit(
      [n, &params](const auto& p) -> RelationInstance {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Re1>) {
          require_s(p.i, n);
          return {Schema::re1, s_word({p.i, p.i}), {}, params};
        } else if constexpr (std::is_same_v<T, Re2>) {
          require_s(p.i, n);
          require_s(p.j, n);
          require(std::abs(p.i - p.j) >= 2, "|i-j| >= 2");
          return {Schema::re2, s_word({p.i, p.j}), s_word({p.j, p.i}), params};
        } else if constexpr (std::is_same_v<T, Re3>) {
          require_s(p.i, n);
          require_s(p.i + 1, n);
          return {Schema::re3, s_word({p.i, p.i + 1, p.i}), s_word({p.i + 1, p.i, p.i + 1}),
                  params};
        } else if constexpr (std::is_same_v<T, Re4>) {
          require_s(p.i, n);
          require(p.cuts.size() == n, "cuts sized for n");
          require(i_star(p.i, p.cuts).has_value(), "i_* defined");
          const auto e = RnGenerator::e(p.cuts);
          return {Schema::re4, {e, RnGenerator::s(p.i)}, {RnGenerator::s(p.i), e}, params};
        } else {
          require(p.k.size() == n && p.l.size() == n, "cuts sized for n");
          for (int i : p.word) require_s(i, n);
          const auto qr = compute_q(p.k, p.word, p.l);
          auto w = s_word(qr.standardizer_word);
          RnWord w_inv(w.rbegin(), w.rend());
          const auto mid = s_word(p.word);
          return {Schema::re5,
                  concat({{RnGenerator::e(p.k)}, mid, {RnGenerator::e(p.l)}}),
                  concat({w_inv, {RnGenerator::e(qr.q)}, w, mid}), params};
        }
      },
      params);
}

bool check_relation(const RelationInstance& inst, int n) {
  return eval_word(inst.lhs, n) == eval_word(inst.rhs, n);
}

std::vector<RelationInstance> all_relation_instances_re1_re4(int n) {
  std::vector<RelationInstance> out;
  for (int i = 1; i < n; ++i) out.push_back(instantiate_relation(Re1{i}, n));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2) out.push_back(instantiate_relation(Re2{i, j}, n));
  for (int i = 1; i + 1 < n; ++i) out.push_back(instantiate_relation(Re3{i}, n));
  for (const auto& c : all_standard_compositions(n))
    for (int i = 1; i < n; ++i)
      if (i_star(i, c)) out.push_back(instantiate_relation(Re4{i, c}, n));
  return out;
}

std::vector<RelationInstance> all_relation_instances_re5(int n, int max_word, bool with_unit) {
  std::vector<RelationInstance> out;
  auto comps = all_standard_compositions(n);
  if (!with_unit) std::erase_if(comps, [](const auto& c) { return c.cuts().empty(); });
  // middle words over s_1..s_{n-1} of length 0..max_word, shortlex
  std::vector<std::vector<int>> words{{}};
  for (std::size_t start = 0; n > 1;) {
    const std::size_t end = words.size();
    if (end > start && static_cast<int>(words[end - 1].size()) >= max_word) break;
    for (std::size_t w = start; w < end; ++w)
      for (int i = 1; i < n; ++i) {
        auto next = words[w];
        next.push_back(i);
        words.push_back(std::move(next));
      }
    start = end;
  }
  for (const auto& k : comps)
    for (const auto& word : words) {
      if (!word.empty() && i_star(word.front(), k)) continue;
      for (const auto& l : comps) out.push_back(instantiate_relation(Re5{k, word, l}, n));
    }
  return out;
}

RnWord normal_form(const PMElement& a) {
  const auto st = standardize_partition(a.partition);
  RnWord out = word_of_permutation(a.perm * st.w.inverse());
  if (!st.q.cuts().empty()) out.push_back(RnGenerator::e(st.q));
  const auto tail = word_of_permutation(st.w);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::string to_string(const RnGenerator& g) {
  if (g.kind == RnGenerator::Kind::S) return "s" + std::to_string(g.index);
  std::string out = "e[";
  for (std::size_t i = 0; i < g.cuts.cuts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(g.cuts.cuts()[i]);
  }
  return out + "]";
}

std::string to_string(const RnWord& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CongruenceReport bounded_congruence(int n, int max_length) {
  CongruenceReport r;
  r.n = n;
  r.max_length = max_length;

  RnWord alphabet;
  for (int i = 1; i < n; ++i) alphabet.push_back(RnGenerator::s(i));
  for (const auto& c : all_standard_compositions(n))
    if (!c.cuts().empty()) alphabet.push_back(RnGenerator::e(c));
  const auto letter_of = [&](const RnGenerator& g) {
    return static_cast<std::uint8_t>(std::find(alphabet.begin(), alphabet.end(), g) -
                                     alphabet.begin());
  };

  // Element table: value(word + letter) = table[value(word)][letter].
  const auto elements = enumerate_rn(n);
  std::map<PMElement, std::uint32_t> element_id;
  for (std::uint32_t i = 0; i < elements.size(); ++i) element_id.emplace(elements[i], i);
  std::vector<std::vector<std::uint32_t>> table(elements.size());
  for (std::uint32_t i = 0; i < elements.size(); ++i)
    for (const auto& g : alphabet)
      table[i].push_back(element_id.at(elements[i] * generator_element(g, n)));

  using Code = std::uint64_t;
  const Code base = alphabet.size() + 1;
  const auto encode = [base](const std::vector<std::uint8_t>& w) {
    Code c = 0;
    for (auto l : w) c = c * base + (l + 1);
    return c;
  };

  std::vector<std::vector<std::uint8_t>> words{{}};
  std::vector<std::uint32_t> value{element_id.at(PMElement::unit(n))};
  for (std::size_t start = 0, len = 0; len < static_cast<std::size_t>(max_length); ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = start; w < end; ++w)
      for (std::uint8_t l = 0; l < alphabet.size(); ++l) {
        auto next = words[w];
        next.push_back(l);
        words.push_back(std::move(next));
        value.push_back(table[value[w]][l]);
      }
    start = end;
  }
  std::unordered_map<Code, std::uint32_t> id_of;
  id_of.reserve(words.size() * 2);
  for (std::uint32_t i = 0; i < words.size(); ++i) id_of.emplace(encode(words[i]), i);
  r.words = words.size();

  // Rewrite rules lhs -> rhs restricted to the alphabet and the length bound.
  struct Rule {
    std::vector<std::uint8_t> lhs, rhs;
  };
  std::vector<std::vector<Rule>> rules_by_first(alphabet.size());
  std::vector<Rule> empty_lhs_rules;
  auto add = [&](const RelationInstance& inst) {
    if (static_cast<int>(std::max(inst.lhs.size(), inst.rhs.size())) > max_length) return;
    Rule rule;
    for (const auto& side : {&inst.lhs, &inst.rhs})
      for (const auto& g : *side)
        if (std::find(alphabet.begin(), alphabet.end(), g) == alphabet.end()) return;
    for (const auto& g : inst.lhs) rule.lhs.push_back(letter_of(g));
    for (const auto& g : inst.rhs) rule.rhs.push_back(letter_of(g));
    ++r.relation_instances;
    // Orient so the lhs is nonempty; the graph is undirected.
    if (rule.lhs.empty()) std::swap(rule.lhs, rule.rhs);
    rules_by_first[rule.lhs.front()].push_back(std::move(rule));
  };
  for (const auto& inst : all_relation_instances_re1_re4(n)) add(inst);
  for (const auto& inst : all_relation_instances_re5(n, std::max(0, max_length - 2), false))
    add(inst);

  UnionFind uf(words.size());
  std::vector<std::uint8_t> buf;
  for (std::uint32_t u = 0; u < words.size(); ++u) {
    const auto& w = words[u];
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (const auto& rule : rules_by_first[w[pos]]) {
        if (pos + rule.lhs.size() > w.size()) continue;
        if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + pos)) continue;
        const std::size_t new_len = w.size() - rule.lhs.size() + rule.rhs.size();
        if (new_len > static_cast<std::size_t>(max_length)) continue;
        buf.assign(w.begin(), w.begin() + pos);
        buf.insert(buf.end(), rule.rhs.begin(), rule.rhs.end());
        buf.insert(buf.end(), w.begin() + pos + rule.lhs.size(), w.end());
        uf.unite(u, id_of.at(encode(buf)));
      }
  }

  std::unordered_map<std::uint32_t, std::uint32_t> class_value;
  std::vector<bool> seen_value(elements.size(), false);
  for (std::uint32_t u = 0; u < words.size(); ++u) {
    const auto root = uf.find(u);
    auto [it, fresh] = class_value.emplace(root, value[u]);
    if (!fresh && it->second != value[u]) r.mixed_class = true;
    if (!seen_value[value[u]]) {
      seen_value[value[u]] = true;
      ++r.fibers;
    }
  }
  r.classes = class_value.size();

  std::unordered_map<std::uint32_t, bool> has_nf;
  for (const auto& a : elements) {
    std::vector<std::uint8_t> nf;
    for (const auto& g : normal_form(a)) nf.push_back(letter_of(g));
    if (static_cast<int>(nf.size()) > max_length) continue;
    has_nf[uf.find(id_of.at(encode(nf)))] = true;
  }
  r.classes_with_normal_form = has_nf.size();
  return r;
}

}  // namespace pmm
