#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pmm {

/// Bijection of {1..n}; images()[j-1] holds sigma(j).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The adjacent transposition s_i = (i, i+1).
  static Permutation transposition(int n, int i);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// (a * b)(k) = a(b(k)): the right factor acts first.
Permutation perm_compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return perm_compose(a, b);
}

/// All of S_n in lexicographic order of the image sequence.
std::vector<Permutation> all_permutations(int n);

/// Adjacent-transposition word (s_{j_1}, ..., s_{j_t}) with s_{j_1} * ... * s_{j_t} = sigma,
/// obtained from a bubble sort. Length is the inversion count.
std::vector<int> transposition_word(const Permutation& sigma);
Permutation permutation_of_word(int n, const std::vector<int>& word);

std::string to_string(const Permutation& p);

}  // namespace pmm
