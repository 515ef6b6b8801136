#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pmm/permutation.hpp"

namespace pmm {

/// Sorted set of indices in 1..n.
using Block = std::vector<int>;

/// Cuts 1 <= k_1 < ... < k_{m-1} < n naming the partition
/// ({1..k_1}, {k_1+1..k_2}, ..., {k_{m-1}+1..n}). No cuts means one block.
class StandardComposition {
public:
  StandardComposition() = default;
  StandardComposition(int n, std::vector<int> cuts);

  int size() const { return n_; }
  const std::vector<int>& cuts() const { return cuts_; }
  int block_count() const { return static_cast<int>(cuts_.size()) + 1; }
  /// 1-based block j as the interval {k_{j-1}+1, ..., k_j}.
  Block block(int j) const;

  friend bool operator==(const StandardComposition&, const StandardComposition&) = default;
  friend auto operator<=>(const StandardComposition&, const StandardComposition&) = default;

private:
  int n_ = 0;
  std::vector<int> cuts_;
};

/// All 2^{n-1} standard compositions of n, ordered by (cut count, cuts).
std::vector<StandardComposition> all_standard_compositions(int n);

/// Ordered sequence of disjoint nonempty blocks covering {1..n}.
class OrderedSetPartition {
public:
  OrderedSetPartition() = default;
  /// Blocks are sorted internally; throws std::invalid_argument unless they
  /// are disjoint, nonempty, and cover 1..n.
  OrderedSetPartition(int n, std::vector<Block> blocks);

  static OrderedSetPartition full(int n);
  static OrderedSetPartition standard(const StandardComposition& c);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  /// 0-based index of the block holding k.
  int block_of(int k) const;

  /// Blockwise preimage (sigma^-1(p_1), ..., sigma^-1(p_m)).
  OrderedSetPartition preimage(const Permutation& sigma) const;
  /// Blockwise image (sigma(p_1), ..., sigma(p_m)).
  OrderedSetPartition image(const Permutation& sigma) const;

  /// Cuts when every block is a consecutive interval in order.
  std::optional<StandardComposition> as_standard() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
  struct trusted {};
  OrderedSetPartition(int n, std::vector<Block> blocks, trusted)
      : n_(n), blocks_(std::move(blocks)) {}
  friend OrderedSetPartition partition_product(const OrderedSetPartition&,
                                               const OrderedSetPartition&);

  int n_ = 0;
  std::vector<Block> blocks_;
};

/// (p_1 & q_1, ..., p_m & q_1, ..., p_1 & q_m', ..., p_m & q_m'): the first
/// factor's index varies fastest; empty intersections are dropped.
OrderedSetPartition partition_product(const OrderedSetPartition& p, const OrderedSetPartition& q);
inline OrderedSetPartition operator*(const OrderedSetPartition& p, const OrderedSetPartition& q) {
  return partition_product(p, q);
}

/// P_n ordered by (number of blocks, lexicographic block contents).
std::vector<OrderedSetPartition> all_ordered_partitions(int n);

std::string to_string(const OrderedSetPartition& p);
std::string to_string(const StandardComposition& c);

}  // namespace pmm
