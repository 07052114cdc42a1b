#include <doctest.h>

#include <stdexcept>

#include "wzt/free_word.hpp"
#include "wzt/magnus.hpp"
#include "wzt/random.hpp"

using namespace wzt;

namespace {

FreeWord W(const char* text) { return FreeWord::parse(text); }

FreeWord random_word(int rank, int max_len, RandomGen& gen) {
  std::vector<FreeLetter> letters;
  int len = gen.uniform_int(0, max_len);
  for (int i = 0; i < len; ++i)
    letters.push_back(FreeLetter{gen.uniform_int(1, rank), gen.coin() ? 1 : -1});
  return FreeWord(rank, std::move(letters));
}

}  // namespace

TEST_CASE("free reduction and inversion") {
  CHECK(free_reduce(W("f2: x1 x1^-1")).empty());
  CHECK(free_reduce(W("f2: x1 x2 x2^-1 x1")) == W("f2: x1 x1"));
  CHECK(invert(W("f2: x1 x2^-1")) == W("f2: x2 x1^-1"));
  CHECK(equivalent(W("f2: x1 x2 x2^-1"), W("f2: x1")));
  CHECK_FALSE(equivalent(W("f2: x1"), W("f2: x2")));
}

TEST_CASE("expansion of single letters") {
  MagnusSeries plus = magnus_expand(W("f1: x1"), 2);
  CHECK(plus.coefficient({}) == 1);
  CHECK(plus.coefficient({1}) == 1);
  CHECK(plus.coefficient({1, 1}) == 0);

  MagnusSeries minus = magnus_expand(W("f1: x1^-1"), 2);
  CHECK(minus.coefficient({}) == 1);
  CHECK(minus.coefficient({1}) == -1);
  CHECK(minus.coefficient({1, 1}) == 1);
}

TEST_CASE("expansion of a commutator starts at degree two") {
  MagnusSeries s = magnus_expand(W("f2: x1 x2 x1^-1 x2^-1"), 2);
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1}) == 0);
  CHECK(s.coefficient({2}) == 0);
  CHECK(s.coefficient({1, 2}) == 1);
  CHECK(s.coefficient({2, 1}) == -1);
  CHECK(s.coefficient({1, 1}) == 0);
  CHECK(s.coefficient({2, 2}) == 0);
}

TEST_CASE("comparison on pinned cases") {
  CHECK(magnus_compare(W("f1: x1"), W("f1: x1")) == Ordering::equal);
  CHECK(magnus_compare(W("f1: 1"), W("f1: x1")) == Ordering::less);
  CHECK(magnus_compare(W("f2: x2"), W("f2: x1")) == Ordering::less);
  CHECK_THROWS_AS(magnus_compare(W("f1: x1"), W("f2: x1")), std::invalid_argument);
}

TEST_CASE("deep commutators are still ordered") {
  // [[x1,x2],x1] sits two levels down the lower central series.
  FreeWord c = W("f2: x1 x2 x1^-1 x2^-1");
  FreeWord cc = concat(concat(c, W("f2: x1")), concat(invert(c), W("f2: x1^-1")));
  CHECK_FALSE(equivalent(cc, FreeWord::identity(2)));
  CHECK(magnus_compare(FreeWord::identity(2), cc) != Ordering::equal);
}

TEST_CASE("order is bi-invariant, total and matches the word problem") {
  RandomGen gen(23);
  for (int t = 0; t < 300; ++t) {
    int rank = gen.uniform_int(1, 4);
    FreeWord a = random_word(rank, 12, gen);
    FreeWord b = random_word(rank, 12, gen);
    FreeWord c = random_word(rank, 12, gen);
    Ordering ab = magnus_compare(a, b);
    CHECK(magnus_compare(b, a) == opposite(ab));
    CHECK(magnus_compare(concat(c, a), concat(c, b)) == ab);
    CHECK(magnus_compare(concat(a, c), concat(b, c)) == ab);
    CHECK((ab == Ordering::equal) == equivalent(a, b));
  }
}

TEST_CASE("expansion is multiplicative up to truncation") {
  RandomGen gen(29);
  for (int t = 0; t < 100; ++t) {
    int rank = gen.uniform_int(1, 4);
    FreeWord u = random_word(rank, 10, gen);
    FreeWord v = random_word(rank, 10, gen);
    int d = gen.uniform_int(1, 5);
    CHECK(magnus_expand(concat(u, v), d) ==
          truncate(multiply(magnus_expand(u, d), magnus_expand(v, d)), d));
  }
}

TEST_CASE("free word text round trip") {
  CHECK(W("f3: x1 x3^-1").to_text() == "f3: x1 x3^-1");
  CHECK(W("f2: x1^3").to_text() == "f2: x1 x1 x1");
  CHECK(W("f2: 1").to_text() == "f2: 1");
  CHECK(FreeWord::parse(W("f4: x2^-2 x4").to_text()) == W("f4: x2^-2 x4"));
  CHECK_THROWS_AS(W("f2: x3"), std::invalid_argument);
}
