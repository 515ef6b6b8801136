#include "pmm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pmm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n)
    throw std::out_of_range("transposition s" + std::to_string(i) + " outside n=" +
                            std::to_string(n));
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= size(); ++k) inv[images_[k - 1] - 1] = k;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(a.size());
  for (int k = 1; k <= a.size(); ++k) im[k - 1] = a(b(k));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<int> transposition_word(const Permutation& sigma) {
  // Swapping positions j, j+1 of the image array is right multiplication by s_j.
  // Sorting gives sigma * s_{a_1} * ... * s_{a_t} = id, so sigma = s_{a_t} * ... * s_{a_1}.
  std::vector<int> a = sigma.images();
  std::vector<int> swaps;
  const int n = sigma.size();
  for (int pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (int j = 1; j < n; ++j) {
      if (a[j - 1] > a[j]) {
        std::swap(a[j - 1], a[j]);
        swaps.push_back(j);
        moved = true;
      }
    }
    if (!moved) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation permutation_of_word(int n, const std::vector<int>& word) {
  auto p = Permutation::identity(n);
  for (int i : word) p = p * Permutation::transposition(n, i);
  return p;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int k = 1; k <= p.size(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(p(k));
  }
  return out + "]";
}

}  // namespace pmm
