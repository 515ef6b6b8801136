#include "pmm/ordered_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmm {

StandardComposition::StandardComposition(int n, std::vector<int> cuts)
    : n_(n), cuts_(std::move(cuts)) {
  if (n < 1) throw std::invalid_argument("composition size must be positive");
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (cuts_[i] < 1 || cuts_[i] >= n)
      throw std::out_of_range("cut " + std::to_string(cuts_[i]) + " outside 1.." +
                              std::to_string(n - 1));
    if (i > 0 && cuts_[i] <= cuts_[i - 1])
      throw std::invalid_argument("cuts must be strictly increasing");
  }
}

Block StandardComposition::block(int j) const {
  const int lo = j == 1 ? 1 : cuts_[j - 2] + 1;
  const int hi = j == block_count() ? n_ : cuts_[j - 1];
  Block b;
  for (int k = lo; k <= hi; ++k) b.push_back(k);
  return b;
}

std::vector<StandardComposition> all_standard_compositions(int n) {
  std::vector<StandardComposition> out;
  const unsigned limit = 1u << (n - 1);
  for (unsigned mask = 0; mask < limit; ++mask) {
    std::vector<int> cuts;
    for (int k = 1; k < n; ++k)
      if (mask & (1u << (k - 1))) cuts.push_back(k);
    out.emplace_back(n, std::move(cuts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.cuts().size() != b.cuts().size()) return a.cuts().size() < b.cuts().size();
    return a.cuts() < b.cuts();
  });
  return out;
}

OrderedSetPartition::OrderedSetPartition(int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("partition size must be positive");
  std::vector<bool> seen(n + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("ordered set partition has an empty block");
    std::sort(b.begin(), b.end());
    for (int k : b) {
      if (k < 1 || k > n)
        throw std::out_of_range("block element " + std::to_string(k) + " outside 1.." +
                                std::to_string(n));
      if (seen[k]) throw std::invalid_argument("blocks are not disjoint");
      seen[k] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not cover 1..n");
}

OrderedSetPartition OrderedSetPartition::full(int n) {
  return standard(StandardComposition(n, {}));
}

OrderedSetPartition OrderedSetPartition::standard(const StandardComposition& c) {
  std::vector<Block> blocks;
  for (int j = 1; j <= c.block_count(); ++j) blocks.push_back(c.block(j));
  return OrderedSetPartition(c.size(), std::move(blocks), trusted{});
}

int OrderedSetPartition::block_of(int k) const {
  for (int j = 0; j < block_count(); ++j)
    if (std::binary_search(blocks_[j].begin(), blocks_[j].end(), k)) return j;
  throw std::out_of_range("index not covered by partition");
}

OrderedSetPartition OrderedSetPartition::preimage(const Permutation& sigma) const {
  return image(sigma.inverse());
}

OrderedSetPartition OrderedSetPartition::image(const Permutation& sigma) const {
  if (sigma.size() != n_) throw std::invalid_argument("partition/permutation size mismatch");
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    Block img;
    img.reserve(b.size());
    for (int k : b) img.push_back(sigma(k));
    std::sort(img.begin(), img.end());
    out.push_back(std::move(img));
  }
  return OrderedSetPartition(n_, std::move(out), trusted{});
}

std::optional<StandardComposition> OrderedSetPartition::as_standard() const {
  int next = 1;
  std::vector<int> cuts;
  for (const auto& b : blocks_) {
    for (int k : b)
      if (k != next++) return std::nullopt;
    if (next <= n_) cuts.push_back(next - 1);
  }
  return StandardComposition(n_, std::move(cuts));
}

OrderedSetPartition partition_product(const OrderedSetPartition& p, const OrderedSetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
  std::vector<Block> out;
  for (const auto& qb : q.blocks()) {
    for (const auto& pb : p.blocks()) {
      Block meet;
      std::set_intersection(pb.begin(), pb.end(), qb.begin(), qb.end(), std::back_inserter(meet));
      if (!meet.empty()) out.push_back(std::move(meet));
    }
  }
  return OrderedSetPartition(p.size(), std::move(out), OrderedSetPartition::trusted{});
}

std::vector<OrderedSetPartition> all_ordered_partitions(int n) {
  // Every map {1..n} -> {1..m} that hits all labels gives one partition with m blocks.
  std::vector<OrderedSetPartition> out;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> label(n, 0);
    std::vector<OrderedSetPartition> level;
    while (true) {
      std::vector<Block> blocks(m);
      for (int k = 0; k < n; ++k) blocks[label[k]].push_back(k + 1);
      if (std::none_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); }))
        level.emplace_back(n, std::move(blocks));
      int pos = n - 1;
      while (pos >= 0 && label[pos] == m - 1) label[pos--] = 0;
      if (pos < 0) break;
      ++label[pos];
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const OrderedSetPartition& p) {
  std::string out = "(";
  for (int j = 0; j < p.block_count(); ++j) {
    if (j > 0) out += ',';
    out += '{';
    for (std::size_t i = 0; i < p.blocks()[j].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(p.blocks()[j][i]);
    }
    out += '}';
  }
  return out + ")";
}

std::string to_string(const StandardComposition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.cuts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c.cuts()[i]);
  }
  return out + ")";
}

}  // namespace pmm
