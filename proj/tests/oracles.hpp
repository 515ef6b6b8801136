#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's algorithms; they re-derive values the slow, obvious way.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pmm/linalg.hpp"
#include "pmm/pm_monoid.hpp"

namespace oracle {

/// Removes adjacent inverse pairs until none are left.
inline std::vector<int> naive_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

/// Substitutes images[k-1] for x_k (and its formal inverse for x_k^-1).
inline std::vector<int> substitute(const std::vector<std::vector<int>>& images, const std::vector<int>& w) {
  std::vector<int> out;
  for (int letter : w) {
    auto img = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    if (letter < 0) {
      std::reverse(img.begin(), img.end());
      for (auto& x : img) x = -x;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  return naive_reduce(out);
}

/// Artin generator as raw images: x_k -> x_k^-1 x_{k+1} x_k, x_{k+1} -> x_k.
inline std::vector<std::vector<int>> artin_images(int k, int n, int sign) {
  std::vector<std::vector<int>> img;
  for (int j = 1; j <= n; ++j) img.push_back({j});
  if (sign > 0) {
    img[static_cast<std::size_t>(k - 1)] = {-k, k + 1, k};
    img[static_cast<std::size_t>(k)] = {k};
  } else {
    img[static_cast<std::size_t>(k - 1)] = {k + 1};
    img[static_cast<std::size_t>(k)] = {k + 1, k, -(k + 1)};
  }
  return img;
}

/// An element of R_n as the list of partial maps sigma|_{p_i}, one per block.
using Layers = std::vector<std::map<int, int>>;

inline Layers layers_of(const pmm::PMElement& a) {
  Layers out;
  for (const auto& block : a.partition.blocks()) {
    std::map<int, int> m;
    for (int j : block) m[j] = a.perm(j);
    out.push_back(m);
  }
  return out;
}

/// Composite of partial maps, right factor first, right factor's layer outer.
inline Layers compose(const Layers& a, const Layers& b) {
  Layers out;
  for (const auto& bj : b)
    for (const auto& ai : a) {
      std::map<int, int> m;
      for (auto [x, y] : bj)
        if (auto it = ai.find(y); it != ai.end()) m[x] = it->second;
      if (!m.empty()) out.push_back(m);
    }
  return out;
}

/// Ordered set partitions of {1..n} listed as preimages of surjections onto {1..m}.
inline std::set<std::vector<std::vector<int>>> ordered_partitions(int n) {
  std::set<std::vector<std::vector<int>>> out;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
      for (int x = 1; x <= n; ++x) blocks[static_cast<std::size_t>(f[static_cast<std::size_t>(x - 1)])].push_back(x);
      if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) out.insert(blocks);
      int i = 0;
      while (i < n && ++f[static_cast<std::size_t>(i)] == m) f[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
  return out;
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

/// Ordered Bell numbers from a(n) = sum_k C(n, k) a(n - k).
inline std::uint64_t fubini(int n) {
  std::vector<std::uint64_t> a{1};
  for (int m = 1; m <= n; ++m) {
    std::uint64_t s = 0, c = 1;
    for (int k = 1; k <= m; ++k) {
      c = c * static_cast<std::uint64_t>(m - k + 1) / static_cast<std::uint64_t>(k);
      s += c * a[static_cast<std::size_t>(m - k)];
    }
    a.push_back(s);
  }
  return a[static_cast<std::size_t>(n)];
}

/// Laplace-expansion determinant.
inline pmm::Rational det(const std::vector<std::vector<pmm::Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  pmm::Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<pmm::Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<pmm::Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

/// Rank as the size of the largest nonzero minor (small matrices only).
inline int minor_rank(const pmm::RationalMatrix& a) {
  const int rows = a.rows(), cols = a.cols();
  for (int k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(static_cast<std::size_t>(rows), false), csel(static_cast<std::size_t>(cols), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<pmm::Rational>> m;
        for (int r = 0; r < rows; ++r) {
          if (!rsel[static_cast<std::size_t>(r)]) continue;
          std::vector<pmm::Rational> row;
          for (int c = 0; c < cols; ++c)
            if (csel[static_cast<std::size_t>(c)]) row.push_back(a(r, c));
          m.push_back(row);
        }
        if (det(m) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace oracle
