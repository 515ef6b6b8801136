#include "pmm/braid_pm.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pmm {

void validate_generator(const BraidGenerator& g, int n) {
  if (g.kind == BraidGenerator::Kind::S) {
    if (g.index < 1 || g.index >= n)
      throw std::out_of_range("s" + std::to_string(g.index) + " is not a generator for n=" +
                              std::to_string(n));
    if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("generator sign must be +-1");
  } else if (g.cuts.size() != n) {
    throw std::out_of_range("e" + to_string(g.cuts) + " is not a generator for n=" +
                            std::to_string(n));
  }
}

RnWord project(const BraidWord& w) {
  RnWord out;
  out.reserve(w.size());
  for (const auto& g : w)
    out.push_back(g.kind == BraidGenerator::Kind::S ? RnGenerator::s(g.index)
                                                    : RnGenerator::e(g.cuts));
  return out;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (auto& g : out)
    if (g.kind == BraidGenerator::Kind::S) g.sign = -g.sign;
  return out;
}

std::string to_string(const BraidGenerator& g) {
  if (g.kind == BraidGenerator::Kind::E) return to_string(RnGenerator::e(g.cuts));
  return "s" + std::to_string(g.index) + (g.sign < 0 ? "^-1" : "");
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::vector<int> AutLayer::image() const {
  std::vector<int> im = target;
  std::sort(im.begin(), im.end());
  return im;
}

FreeWord AutLayer::apply(int l) const {
  const auto it = std::lower_bound(domain.begin(), domain.end(), l);
  if (it == domain.end() || *it != l) throw std::out_of_range("x" + std::to_string(l) + " outside layer domain");
  const auto k = static_cast<std::size_t>(it - domain.begin());
  const auto& w = conjugator[k];
  return w.inverse() * FreeWord::generator(target[k]) * w;
}

FreeWord canonical_conjugator(const FreeWord& w, int target) {
  std::size_t skip = 0;
  while (skip < w.size() && std::abs(w.letters()[skip]) == target) ++skip;
  return w.drop_front(skip);
}

LayeredAut::LayeredAut(int n, std::vector<AutLayer> layers) : n_(n), layers_(std::move(layers)) {
  if (n < 1) throw std::invalid_argument("LayeredAut size must be positive");
  std::vector<bool> in_domain(n + 1, false), in_image(n + 1, false);
  for (const auto& layer : layers_) {
    if (layer.domain.empty()) throw std::invalid_argument("LayeredAut layer with empty domain");
    if (layer.target.size() != layer.domain.size() ||
        layer.conjugator.size() != layer.domain.size())
      throw std::invalid_argument("LayeredAut layer fields differ in length");
    if (!std::is_sorted(layer.domain.begin(), layer.domain.end()))
      throw std::invalid_argument("LayeredAut layer domain not ascending");
    for (std::size_t k = 0; k < layer.domain.size(); ++k) {
      const int l = layer.domain[k], t = layer.target[k];
      if (l < 1 || l > n || t < 1 || t > n) throw std::out_of_range("LayeredAut index outside 1..n");
      if (in_domain[l]) throw std::invalid_argument("LayeredAut domains overlap");
      if (in_image[t]) throw std::invalid_argument("LayeredAut targets not injective");
      in_domain[l] = in_image[t] = true;
    }
    const auto im = layer.image();
    for (std::size_t k = 0; k < layer.domain.size(); ++k) {
      const auto& w = layer.conjugator[k];
      if (!w.uses_only([&im](int j) { return std::binary_search(im.begin(), im.end(), j); }))
        throw std::invalid_argument("conjugator uses a letter outside its layer image");
      if (!w.empty() && std::abs(w.letters().front()) == layer.target[k])
        throw std::invalid_argument("conjugator not canonical");
    }
  }
  for (int k = 1; k <= n; ++k)
    if (!in_domain[k] || !in_image[k])
      throw std::invalid_argument("LayeredAut domains or images do not cover 1..n");
}

LayeredAut LayeredAut::unit(int n) {
  AutLayer layer;
  for (int k = 1; k <= n; ++k) {
    layer.domain.push_back(k);
    layer.target.push_back(k);
    layer.conjugator.emplace_back();
  }
  return LayeredAut(n, {std::move(layer)});
}

LayeredAut phi_gen(const BraidGenerator& g, int n) {
  validate_generator(g, n);
  if (g.kind == BraidGenerator::Kind::E) {
    std::vector<AutLayer> layers;
    for (int j = 1; j <= g.cuts.block_count(); ++j) {
      AutLayer layer;
      layer.domain = g.cuts.block(j);
      layer.target = layer.domain;
      layer.conjugator.resize(layer.domain.size());
      layers.push_back(std::move(layer));
    }
    return LayeredAut(n, std::move(layers));
  }
  auto u = LayeredAut::unit(n);
  AutLayer layer = u.layers().front();
  const int i = g.index;
  std::swap(layer.target[i - 1], layer.target[i]);
  if (g.sign > 0)
    layer.conjugator[i - 1] = FreeWord::generator(i);  // x_i -> x_i^-1 x_{i+1} x_i
  else
    layer.conjugator[i] = FreeWord::generator(i + 1, -1);  // x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
  return LayeredAut(n, {std::move(layer)});
}

LayeredAut layered_product(const LayeredAut& f, const LayeredAut& g) {
  const int n = f.size();
  if (g.size() != n) throw std::invalid_argument("LayeredAut size mismatch");

  std::vector<AutLayer> out;
  std::vector<int> f_target(n + 1);
  std::vector<const FreeWord*> f_conj(n + 1);
  std::vector<bool> keep(n + 1);
  for (const auto& gl : g.layers()) {
    for (const auto& fl : f.layers()) {
      std::fill(f_target.begin(), f_target.end(), 0);
      for (std::size_t k = 0; k < fl.domain.size(); ++k) {
        f_target[fl.domain[k]] = fl.target[k];
        f_conj[fl.domain[k]] = &fl.conjugator[k];
      }
      AutLayer layer;
      std::fill(keep.begin(), keep.end(), false);
      std::vector<std::size_t> source;
      for (std::size_t k = 0; k < gl.domain.size(); ++k) {
        const int mid = gl.target[k];
        if (f_target[mid] == 0) continue;
        layer.domain.push_back(gl.domain[k]);
        layer.target.push_back(f_target[mid]);
        keep[f_target[mid]] = true;
        source.push_back(k);
      }
      if (layer.domain.empty()) continue;

      // x_l -> w_l^-1 x_mid w_l under G, then F^ sends x_mid to v_mid^-1 x_t v_mid,
      // so the new conjugator is v_mid F^(w_l), restricted to the surviving strands.
      const auto keep_fn = [&keep](int j) { return keep[j]; };
      for (std::size_t idx = 0; idx < source.size(); ++idx) {
        const std::size_t k = source[idx];
        const int mid = gl.target[k];
        FreeWord conj = kill_generators(*f_conj[mid], keep_fn);
        for (Letter letter : gl.conjugator[k].letters()) {
          const int a = std::abs(letter);
          if (f_target[a] == 0) continue;
          const FreeWord v = kill_generators(*f_conj[a], keep_fn);
          FreeWord img = v.inverse();
          if (keep[f_target[a]]) img *= FreeWord::generator(f_target[a]);
          img *= v;
          if (letter > 0)
            conj *= img;
          else
            conj *= img.inverse();
        }
        layer.conjugator.push_back(canonical_conjugator(conj, layer.target[idx]));
      }
      out.push_back(std::move(layer));
    }
  }
  return LayeredAut(n, std::move(out));
}

LayeredAut phi_word(const BraidWord& w, int n) {
  auto acc = LayeredAut::unit(n);
  for (const auto& g : w) acc = acc * phi_gen(g, n);
  return acc;
}

bool words_equal(const BraidWord& w1, const BraidWord& w2, int n) {
  return phi_word(w1, n) == phi_word(w2, n);
}

PMElement shadow(const LayeredAut& f) {
  std::vector<int> images(f.size());
  std::vector<Block> blocks;
  for (const auto& layer : f.layers()) {
    for (std::size_t k = 0; k < layer.domain.size(); ++k)
      images[layer.domain[k] - 1] = layer.target[k];
    blocks.push_back(layer.domain);
  }
  return {Permutation(std::move(images)), OrderedSetPartition(f.size(), std::move(blocks))};
}

FreeEndo artin_action(const BraidWord& w, int n) {
  auto acc = FreeEndo::identity(n);
  for (const auto& g : w) {
    validate_generator(g, n);
    if (g.kind != BraidGenerator::Kind::S)
      throw std::invalid_argument("Artin action is defined only for braid generators");
    acc = endo_compose(acc, g.sign > 0 ? FreeEndo::artin(g.index, n)
                                       : FreeEndo::artin_inverse(g.index, n));
  }
  return acc;
}

bool artin_total_word_check(const BraidWord& w, int n) {
  std::vector<Letter> total;
  for (int k = n; k >= 1; --k) total.push_back(k);
  const auto x = FreeWord::reduce(total, n);
  return endo_apply(artin_action(w, n), x) == x;
}

BraidWord pure_braid_generator(int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("pure braid generator needs 1 <= i < j");
  BraidWord w;
  for (int k = j - 1; k > i; --k) w.push_back(BraidGenerator::s(k));
  w.push_back(BraidGenerator::s(i));
  w.push_back(BraidGenerator::s(i));
  for (int k = i + 1; k < j; ++k) w.push_back(BraidGenerator::s(k, -1));
  return w;
}

bool block_restricted_identity(const BraidWord& left, const StandardComposition& cuts,
                               const BraidWord& right) {
  const int n = cuts.size();
  const auto right_perm = permutation_of_word(n, [&] {
    std::vector<int> idx;
    for (const auto& g : right) {
      if (g.kind != BraidGenerator::Kind::S) throw std::invalid_argument("e letter in braid part");
      idx.push_back(g.index);
    }
    return idx;
  }());
  const auto blocks = OrderedSetPartition::standard(cuts);
  if (blocks.preimage(right_perm) != blocks) return false;

  BraidWord both = left;
  both.insert(both.end(), right.begin(), right.end());
  const auto action = artin_action(both, n);
  for (const auto& block : blocks.blocks()) {
    const auto in_block = [&block](int j) { return std::binary_search(block.begin(), block.end(), j); };
    for (int l : block)
      if (kill_generators(action.image(l), in_block) != FreeWord::generator(l)) return false;
  }
  return true;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("side condition violated: " + what);
}

BraidWord s_letters(std::initializer_list<std::pair<int, int>> letters) {
  BraidWord w;
  for (auto [i, sign] : letters) w.push_back(BraidGenerator::s(i, sign));
  return w;
}

std::vector<int> indices_of(const BraidWord& w) {
  std::vector<int> idx;
  for (const auto& g : w) {
    require(g.kind == BraidGenerator::Kind::S, "braid part contains an e letter");
    idx.push_back(g.index);
  }
  return idx;
}

}  // namespace

BraidRelationInstance instantiate_braid_relation(const BraidRelationParams& params, int n) {
  auto check_letters = [n](const BraidWord& w) {
    for (const auto& g : w) validate_generator(g, n);
  };
  return std::visit(
      [&](const auto& p) -> BraidRelationInstance {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BRe1>) {
          const int a = p.inverse_first ? -1 : 1;
          auto lhs = s_letters({{p.i, a}, {p.i, -a}});
          check_letters(lhs);
          return {BraidSchema::re1, std::move(lhs), {}};
        } else if constexpr (std::is_same_v<T, BRe2>) {
          require(std::abs(p.i - p.j) >= 2, "|i-j| >= 2");
          auto lhs = s_letters({{p.i, 1}, {p.j, 1}});
          check_letters(lhs);
          return {BraidSchema::re2, std::move(lhs), s_letters({{p.j, 1}, {p.i, 1}})};
        } else if constexpr (std::is_same_v<T, BRe3>) {
          auto lhs = s_letters({{p.i, 1}, {p.i + 1, 1}, {p.i, 1}});
          check_letters(lhs);
          return {BraidSchema::re3, std::move(lhs), s_letters({{p.i + 1, 1}, {p.i, 1}, {p.i + 1, 1}})};
        } else if constexpr (std::is_same_v<T, BRe4>) {
          require(p.cuts.size() == n, "cuts sized for n");
          check_letters(p.left);
          check_letters(p.right);
          require(block_restricted_identity(p.left, p.cuts, p.right),
                  "braid restricted to every block is the identity");
          BraidWord lhs = p.left;
          lhs.push_back(BraidGenerator::e(p.cuts));
          lhs.insert(lhs.end(), p.right.begin(), p.right.end());
          return {BraidSchema::re4, std::move(lhs), {BraidGenerator::e(p.cuts)}};
        } else {
          require(p.k.size() == n && p.l.size() == n, "cuts sized for n");
          check_letters(p.middle);
          const auto qr = compute_q(p.k, indices_of(p.middle), p.l);
          BraidWord lift;
          if (p.lift) {
            check_letters(*p.lift);
            require(permutation_of_word(n, indices_of(*p.lift)) == qr.standardizer,
                    "lift realizes the standardizing permutation");
            lift = *p.lift;
          } else {
            for (int j : qr.standardizer_word) lift.push_back(BraidGenerator::s(j));
          }
          BraidWord lhs{BraidGenerator::e(p.k)};
          lhs.insert(lhs.end(), p.middle.begin(), p.middle.end());
          lhs.push_back(BraidGenerator::e(p.l));
          BraidWord rhs = inverse_word(lift);
          rhs.push_back(BraidGenerator::e(qr.q));
          rhs.insert(rhs.end(), lift.begin(), lift.end());
          rhs.insert(rhs.end(), p.middle.begin(), p.middle.end());
          return {BraidSchema::re5, std::move(lhs), std::move(rhs)};
        }
      },
      params);
}

bool relation_soundness(const BraidRelationParams& params, int n) {
  const auto inst = instantiate_braid_relation(params, n);
  return words_equal(inst.lhs, inst.rhs, n);
}

std::vector<BraidRelationParams> all_braid_relations_re1_re3(int n) {
  std::vector<BraidRelationParams> out;
  for (int i = 1; i < n; ++i) {
    out.emplace_back(BRe1{i, false});
    out.emplace_back(BRe1{i, true});
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) >= 2) out.emplace_back(BRe2{i, j});
  for (int i = 1; i + 1 < n; ++i) out.emplace_back(BRe3{i});
  return out;
}

}  // namespace pmm
