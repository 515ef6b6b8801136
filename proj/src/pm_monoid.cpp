#include "pmm/pm_monoid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pmm {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("count exceeds 64 bits");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw std::overflow_error("count exceeds 64 bits");
  return a + b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f = checked_mul(f, static_cast<std::uint64_t>(k));
  return f;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = checked_mul(b, static_cast<std::uint64_t>(n - k + i)) / i;
  return b;
}

// Sum over compositions of `remaining` of the multinomial product.
std::uint64_t multinomial_sum(int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (int r = 1; r <= remaining; ++r) {
    const std::uint64_t c = binomial(remaining, r);
    const std::uint64_t head = checked_mul(checked_mul(c, c), factorial(r));
    total = checked_add(total, checked_mul(head, multinomial_sum(remaining - r)));
  }
  return total;
}

}  // namespace

PMElement::PMElement(Permutation p, OrderedSetPartition q)
    : perm(std::move(p)), partition(std::move(q)) {
  if (perm.size() != partition.size()) throw std::invalid_argument("PM element size mismatch");
}

PMElement PMElement::unit(int n) {
  return {Permutation::identity(n), OrderedSetPartition::full(n)};
}

PMElement PMElement::transposition(int n, int i) {
  return {Permutation::transposition(n, i), OrderedSetPartition::full(n)};
}

PMElement PMElement::idempotent(const StandardComposition& c) {
  return {Permutation::identity(c.size()), OrderedSetPartition::standard(c)};
}

PMElement rn_product(const PMElement& a, const PMElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PM element size mismatch");
  return {a.perm * b.perm, a.partition.preimage(b.perm) * b.partition};
}

PMElement rn_star(const PMElement& a) {
  return {a.perm.inverse(), a.partition.image(a.perm)};
}

std::vector<PMElement> idempotents(int n) {
  std::vector<PMElement> out;
  const auto id = Permutation::identity(n);
  for (auto& p : all_ordered_partitions(n)) out.emplace_back(id, std::move(p));
  return out;
}

std::vector<PMElement> enumerate_rn(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kEnumerationGuard)
    throw std::length_error("enumeration guard: n=" + std::to_string(n) + " exceeds " +
                            std::to_string(kEnumerationGuard));
  const auto parts = all_ordered_partitions(n);
  std::vector<PMElement> out;
  for (const auto& sigma : all_permutations(n))
    for (const auto& p : parts) out.emplace_back(sigma, p);
  return out;
}

std::uint64_t stirling2(int n, int m) {
  if (m < 0 || n < 0 || m > n) return 0;
  // row[k] = S(i, k), built row by row from S(i, k) = k S(i-1, k) + S(i-1, k-1).
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = std::min(i, m); k >= 1; --k)
      row[k] = checked_add(checked_mul(static_cast<std::uint64_t>(k), row[k]), row[k - 1]);
    row[0] = 0;
  }
  return row[m];
}

std::uint64_t rn_order_stirling(int n) {
  std::uint64_t ordered_bell = 0;
  for (int m = 1; m <= n; ++m)
    ordered_bell = checked_add(ordered_bell, checked_mul(factorial(m), stirling2(n, m)));
  return checked_mul(factorial(n), ordered_bell);
}

std::uint64_t rn_order_multinomial(int n) { return multinomial_sum(n); }

StandardComposition lambda_of(const PMElement& a) {
  std::vector<int> cuts;
  int acc = 0;
  for (const auto& b : a.partition.blocks()) {
    acc += static_cast<int>(b.size());
    if (acc < a.size()) cuts.push_back(acc);
  }
  return StandardComposition(a.size(), std::move(cuts));
}

Standardization standardize_partition(const OrderedSetPartition& p) {
  std::vector<int> w(p.size());
  int next = 1;
  std::vector<int> cuts;
  for (const auto& b : p.blocks()) {
    for (int k : b) w[k - 1] = next++;
    if (next <= p.size()) cuts.push_back(next - 1);
  }
  return {Permutation(std::move(w)), StandardComposition(p.size(), std::move(cuts))};
}

MatrixTupleSymbolic to_matrix_tuple(const PMElement& a) {
  MatrixTupleSymbolic t{a.size(), {}};
  for (const auto& b : a.partition.blocks()) {
    std::vector<std::pair<int, int>> term;
    for (int j : b) term.emplace_back(a.perm(j), j);
    std::sort(term.begin(), term.end());
    t.terms.push_back(std::move(term));
  }
  return t;
}

PMElement from_matrix_tuple(const MatrixTupleSymbolic& t) {
  std::vector<int> images(t.n, 0);
  std::vector<Block> blocks;
  for (const auto& term : t.terms) {
    Block b;
    for (auto [row, col] : term) {
      if (col < 1 || col > t.n || row < 1 || row > t.n)
        throw std::invalid_argument("matrix tuple position out of range");
      if (images[col - 1] != 0) throw std::invalid_argument("column used twice in matrix tuple");
      images[col - 1] = row;
      b.push_back(col);
    }
    blocks.push_back(std::move(b));
  }
  return {Permutation(std::move(images)), OrderedSetPartition(t.n, std::move(blocks))};
}

}  // namespace pmm
