#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmm {

/// A letter of the free group F(x_1, ..., x_n), stored as a signed generator
/// index: +k is x_k and -k is x_k^-1. Indices are 1-based.
using Letter = int;

/// Freely reduced word in F(x_1, ..., x_n). The empty word is the identity.
class FreeWord {
public:
  FreeWord() = default;

  /// Reduces `letters`. Throws std::out_of_range if an index is 0 or |index| > rank.
  static FreeWord reduce(std::span<const Letter> letters, int rank);
  static FreeWord generator(int index, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// Suffix after the first `count` letters (still reduced).
  FreeWord drop_front(std::size_t count) const;
  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord& operator*=(const FreeWord& rhs);

  /// True when every letter is x_j^{+-1} with keep(j).
  bool uses_only(const std::function<bool(int)>& keep) const;

  friend FreeWord kill_generators(const FreeWord& w, const std::function<bool(int)>& keep);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

private:
  explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

/// Single left-to-right stack pass. Idempotent.
FreeWord free_reduce(std::span<const Letter> letters, int rank);

/// Sends every generator x_j with !keep(j) to the identity.
FreeWord kill_generators(const FreeWord& w, const std::function<bool(int)>& keep);

/// `x1 x2^-1 x1`; the identity prints as the empty string.
std::string to_string(const FreeWord& w);
FreeWord parse_free_word(std::string_view text, int rank);

/// Endomorphism of F_n given by the images of x_1, ..., x_n.
class FreeEndo {
public:
  explicit FreeEndo(std::vector<FreeWord> images);

  static FreeEndo identity(int rank);
  /// Artin generator: x_k -> x_k^-1 x_{k+1} x_k, x_{k+1} -> x_k.
  static FreeEndo artin(int k, int rank);
  /// Explicit inverse of artin(k): x_k -> x_{k+1}, x_{k+1} -> x_{k+1} x_k x_{k+1}^-1.
  static FreeEndo artin_inverse(int k, int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int index) const { return images_.at(index - 1); }
  const std::vector<FreeWord>& images() const { return images_; }

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

private:
  std::vector<FreeWord> images_;
};

FreeWord endo_apply(const FreeEndo& f, const FreeWord& w);

/// (f o g)(x) = f(g(x)).
FreeEndo endo_compose(const FreeEndo& f, const FreeEndo& g);

}  // namespace pmm
