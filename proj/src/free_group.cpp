#include "pmm/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pmm {

namespace {

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == -l)
    stack.pop_back();
  else
    stack.push_back(l);
}

}  // namespace

FreeWord FreeWord::reduce(std::span<const Letter> letters, int rank) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw std::out_of_range("free group letter index " + std::to_string(l) +
                              " outside 1.." + std::to_string(rank));
    push_reduced(stack, l);
  }
  return FreeWord(std::move(stack));
}

FreeWord FreeWord::generator(int index, int sign) {
  if (index <= 0)
    throw std::out_of_range("free group generator index must be positive");
  return FreeWord({sign < 0 ? -index : index});
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::drop_front(std::size_t count) const {
  count = std::min(count, letters_.size());
  return FreeWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(count),
                                      letters_.end()));
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord out = *this;
  out *= rhs;
  return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  for (Letter l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

bool FreeWord::uses_only(const std::function<bool(int)>& keep) const {
  for (Letter l : letters_)
    if (!keep(std::abs(l))) return false;
  return true;
}

FreeWord free_reduce(std::span<const Letter> letters, int rank) {
  return FreeWord::reduce(letters, rank);
}

FreeWord kill_generators(const FreeWord& w, const std::function<bool(int)>& keep) {
  std::vector<Letter> out;
  for (Letter l : w.letters())
    if (keep(std::abs(l))) push_reduced(out, l);
  return FreeWord(std::move(out));
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_free_word(std::string_view text, int rank) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string body = tok;
    if (body.size() > 3 && body.ends_with("^-1")) {
      sign = -1;
      body.resize(body.size() - 3);
    }
    if (body.size() < 2 || body[0] != 'x')
      throw std::invalid_argument("bad free group letter '" + tok + "'");
    int index = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
      if (body[i] < '0' || body[i] > '9')
        throw std::invalid_argument("bad free group letter '" + tok + "'");
      index = index * 10 + (body[i] - '0');
      if (index > 1'000'000) throw std::out_of_range("generator index too large");
    }
    letters.push_back(sign * index);
  }
  return FreeWord::reduce(letters, rank);
}

FreeEndo::FreeEndo(std::vector<FreeWord> images) : images_(std::move(images)) {
  const int r = rank();
  for (const auto& w : images_)
    if (!w.uses_only([r](int j) { return j >= 1 && j <= r; }))
      throw std::out_of_range("endomorphism image uses a letter outside the rank");
}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
  return FreeEndo(std::move(images));
}

FreeEndo FreeEndo::artin(int k, int rank) {
  if (k < 1 || k >= rank) throw std::out_of_range("artin generator index out of range");
  auto images = identity(rank).images_;
  const Letter xk[] = {-k, k + 1, k};
  images[k - 1] = FreeWord::reduce(xk, rank);
  images[k] = FreeWord::generator(k);
  return FreeEndo(std::move(images));
}

FreeEndo FreeEndo::artin_inverse(int k, int rank) {
  if (k < 1 || k >= rank) throw std::out_of_range("artin generator index out of range");
  auto images = identity(rank).images_;
  images[k - 1] = FreeWord::generator(k + 1);
  const Letter xk1[] = {k + 1, k, -(k + 1)};
  images[k] = FreeWord::reduce(xk1, rank);
  return FreeEndo(std::move(images));
}

FreeWord endo_apply(const FreeEndo& f, const FreeWord& w) {
  FreeWord out;
  for (Letter l : w.letters()) {
    const auto& img = f.image(std::abs(l));
    if (l > 0)
      out *= img;
    else
      out *= img.inverse();
  }
  return out;
}

FreeEndo endo_compose(const FreeEndo& f, const FreeEndo& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("endomorphism rank mismatch");
  std::vector<FreeWord> images;
  images.reserve(g.images().size());
  for (const auto& w : g.images()) images.push_back(endo_apply(f, w));
  return FreeEndo(std::move(images));
}

}  // namespace pmm
