#include "wzt/permutation.hpp"

#include <charconv>
#include <stdexcept>

namespace wzt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("permutation images must be a bijection of {1..n}");
    seen[static_cast<size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 1; i <= degree; ++i) im[static_cast<size_t>(i) - 1] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_text() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[static_cast<size_t>(i)]);
  }
  out += ']';
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  size_t pos = text.find_first_not_of(" \t");
  if (pos == std::string_view::npos || text[pos] != '[')
    throw std::invalid_argument("permutation text must start with '['");
  ++pos;
  std::vector<int> images;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    int value = 0;
    auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw std::invalid_argument("bad integer in permutation text");
    pos = static_cast<size_t>(next - text.data());
    images.push_back(value);
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(static_cast<size_t>(f.degree()));
  for (int m = 1; m <= f.degree(); ++m) im[static_cast<size_t>(m) - 1] = f(g(m));
  return Permutation(std::move(im));
}

Permutation invert(const Permutation& g) {
  std::vector<int> im(static_cast<size_t>(g.degree()));
  for (int m = 1; m <= g.degree(); ++m) im[static_cast<size_t>(g(m)) - 1] = m;
  return Permutation(std::move(im));
}

Permutation transposition(int degree, int k) {
  if (k < 1 || k >= degree)
    throw std::invalid_argument("transposition index out of range");
  Permutation id = Permutation::identity(degree);
  std::vector<int> im = id.images();
  std::swap(im[static_cast<size_t>(k) - 1], im[static_cast<size_t>(k)]);
  return Permutation(std::move(im));
}

Permutation sigma_expand(const Permutation& g, int k) {
  const int n = g.degree();
  if (k < 1 || k > n) throw std::invalid_argument("sigma_expand: strand index out of range");
  const int gk = g(k);
  std::vector<int> im(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n + 1; ++m) {
    int value;
    if (m <= k) {
      value = (g(m) <= gk) ? g(m) : g(m) + 1;
    } else {
      value = (g(m - 1) < gk) ? g(m - 1) : g(m - 1) + 1;
    }
    im[static_cast<size_t>(m) - 1] = value;
  }
  return Permutation(std::move(im));
}

}  // namespace wzt
