#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pmm/ordered_partition.hpp"
#include "pmm/permutation.hpp"

namespace pmm {

/// Element (sigma, (p_1, ..., p_m)) of the PM-monoid R_n = S_n x| P_n.
struct PMElement {
  Permutation perm;
  OrderedSetPartition partition;

  PMElement() = default;
  PMElement(Permutation p, OrderedSetPartition q);

  static PMElement unit(int n);
  static PMElement transposition(int n, int i);
  static PMElement idempotent(const StandardComposition& c);

  int size() const { return perm.size(); }

  friend bool operator==(const PMElement&, const PMElement&) = default;
  friend auto operator<=>(const PMElement&, const PMElement&) = default;
};

/// (sigma, p)(sigma', p') = (sigma sigma', sigma'^-1(p) * p').
PMElement rn_product(const PMElement& a, const PMElement& b);
inline PMElement operator*(const PMElement& a, const PMElement& b) { return rn_product(a, b); }

/// (sigma, p)* = (sigma^-1, sigma(p)).
PMElement rn_star(const PMElement& a);

/// {(id, p) : p in P_n}.
std::vector<PMElement> idempotents(int n);

/// Largest n accepted by enumerate_rn.
inline constexpr int kEnumerationGuard = 6;

/// All of R_n, permutations (lexicographic) outer and partitions inner.
/// Throws std::length_error when n exceeds kEnumerationGuard.
std::vector<PMElement> enumerate_rn(int n);

/// Stirling number of the second kind S(n, m).
std::uint64_t stirling2(int n, int m);
/// n! * sum_m m! S(n, m). Throws std::overflow_error past 64 bits.
std::uint64_t rn_order_stirling(int n);
/// sum over compositions r_1 + ... + r_m = n of prod_k C(n - r_1 - ... - r_{k-1}, r_k)^2 r_k!.
std::uint64_t rn_order_multinomial(int n);

/// Cumulative block sizes of a.partition without the final n; indexes the
/// W e W double coset containing a.
StandardComposition lambda_of(const PMElement& a);

struct Standardization {
  Permutation w;          ///< order-preserving on each block
  StandardComposition q;  ///< w(p) is the standard partition of q
};
Standardization standardize_partition(const OrderedSetPartition& p);

/// Positions (row, col) of the 0/1 terms sum_{j in p_t} E_{sigma(j) j}.
struct MatrixTupleSymbolic {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> terms;
  friend bool operator==(const MatrixTupleSymbolic&, const MatrixTupleSymbolic&) = default;
};
MatrixTupleSymbolic to_matrix_tuple(const PMElement& a);
/// Inverse of to_matrix_tuple; throws std::invalid_argument when the positions
/// do not form a permutation matrix split into nonempty terms.
PMElement from_matrix_tuple(const MatrixTupleSymbolic& t);

}  // namespace pmm
