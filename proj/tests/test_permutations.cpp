#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <vector>

#include "wzt/permutation.hpp"
#include "wzt/random.hpp"

using namespace wzt;

namespace {

// Independent model of the strand-doubling expansion: split strand k of the
// permutation diagram into two adjacent parallel strands landing at g(k) and
// g(k)+1, then renumber. Deliberately avoids the piecewise formula.
Permutation strand_double_oracle(const Permutation& g, int k) {
  const int n = g.degree();
  const int gk = g(k);
  std::vector<int> im(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n + 1; ++m) {
    int source = m <= k ? m : (m == k + 1 ? k : m - 1);
    int value;
    if (source == k) {
      value = (m == k) ? gk : gk + 1;  // the two copies stay parallel
    } else {
      int img = g(source);
      value = img < gk ? img : img + 1;
    }
    im[static_cast<size_t>(m) - 1] = value;
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation random_permutation(int n, RandomGen& gen) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(im[static_cast<size_t>(i)], im[static_cast<size_t>(gen.uniform_int(0, i))]);
  return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  Permutation c = Permutation::parse("[2,3,1]");
  CHECK(compose(Permutation::identity(3), c) == c);
  CHECK(compose(Permutation::parse("[2,1,3]"), Permutation::parse("[2,1,3]")) ==
        Permutation::identity(3));
  CHECK(compose(c, c) == Permutation::parse("[3,1,2]"));
  CHECK_THROWS_AS(compose(c, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("transpositions") {
  CHECK(transposition(3, 1) == Permutation::parse("[2,1,3]"));
  CHECK(transposition(3, 2) == Permutation::parse("[1,3,2]"));
  CHECK(compose(transposition(4, 2), transposition(4, 2)) == Permutation::identity(4));
  CHECK_THROWS_AS(transposition(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(transposition(3, 0), std::invalid_argument);
}

TEST_CASE("strand-doubling expansion on pinned cases") {
  CHECK(sigma_expand(Permutation::identity(2), 1) == Permutation::identity(3));
  CHECK(sigma_expand(Permutation::parse("[2,1]"), 1) == Permutation::parse("[2,3,1]"));
  CHECK(sigma_expand(Permutation::parse("[2,1,3]"), 2) == Permutation::parse("[3,1,2,4]"));
  CHECK_THROWS_AS(sigma_expand(Permutation::identity(2), 3), std::invalid_argument);
}

TEST_CASE("expansion of the identity is the identity") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(sigma_expand(Permutation::identity(n), k) == Permutation::identity(n + 1));
}

TEST_CASE("expansion equals the strand-doubling model exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& g : all_permutations(n)) {
      for (int k = 1; k <= n; ++k) {
        CAPTURE(g.to_text());
        CAPTURE(k);
        CHECK(sigma_expand(g, k) == strand_double_oracle(g, k));
      }
    }
  }
}

TEST_CASE("group laws on random permutations") {
  RandomGen gen(11);
  for (int t = 0; t < 200; ++t) {
    int n = gen.uniform_int(1, 7);
    Permutation a = random_permutation(n, gen);
    Permutation b = random_permutation(n, gen);
    Permutation c = random_permutation(n, gen);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, invert(a)) == Permutation::identity(n));
    CHECK(compose(invert(a), a) == Permutation::identity(n));
  }
}

TEST_CASE("text round trip") {
  for (const char* text : {"[1]", "[2,1]", "[3,1,2]", "[2,3,1,5,4]"}) {
    Permutation p = Permutation::parse(text);
    CHECK(p.to_text() == text);
  }
  CHECK_THROWS_AS(Permutation::parse("[2,2]"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("2,1"), std::invalid_argument);
}
