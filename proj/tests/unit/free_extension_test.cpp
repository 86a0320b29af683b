#include "common.hpp"

#include "dgenv/random.hpp"

using namespace dgenv;
using namespace dgenv::test;

TEST_CASE("word order reproduces the worked comparison", "[free]") {
  // x3*y2*x1^2, x2*x3*y3^2*y1, x2*y3*x3*y2*y1
  const Word v = word({X(3), Y(2), X(1), X(1)});
  const Word u = word({X(2), X(3), Y(3), Y(3), Y(1)});
  const Word w = word({X(2), Y(3), X(3), Y(2), Y(1)});
  CHECK(bidegree(v) == Bidegree{3, 1});
  CHECK(bidegree(u) == Bidegree{2, 3});
  CHECK(precedes(v, u));
  CHECK(precedes(u, w));
  CHECK_FALSE(precedes(w, u));
  CHECK(precedes(Word{}, v));
  CHECK_FALSE(precedes(Word{}, Word{}));
}

TEST_CASE("word order is a monomial order", "[free][property]") {
  const FreeAlgebra fa(Signature({{"x1", 1}, {"x2", 2}, {"x3", 3}}));
  Rng rng(7);
  std::uniform_int_distribution<int> deg(0, 6);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    auto u = random_word(fa, deg(rng), rng), v = random_word(fa, deg(rng), rng);
    auto a = random_word(fa, deg(rng), rng), b = random_word(fa, deg(rng), rng);
    if (!u || !v || !a || !b || *u == *v) continue;
    if (precedes(*v, *u)) std::swap(u, v);
    REQUIRE(precedes(*u, *v));
    CHECK(precedes(concat(*a, *u, *b), concat(*a, *v, *b)));
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("leading words", "[free]") {
  const Presentation ex = builtin("ex313");
  CHECK(nc(ex, "x2*x1' + x1*x2'").leading_word() == word({X(2), Y(1)}));
  CHECK(nc(ex, "3*x1").make_monic() == nc(ex, "x1"));
  CHECK(nc(ex, "x1*x2 + x1'").leading_word() == word({Y(1)}));
}

TEST_CASE("psi on the free side and embedding", "[free]") {
  const Presentation ex = builtin("ex313");
  const FreeAlgebra fa(ex.signature());
  CHECK(fa.embed(poly(ex, "x1*x2")) == NCPolynomial::word(word({X(1), X(2)})));
  CHECK(nc(ex, "x1'") * nc(ex, "x2") == NCPolynomial::word(word({Y(1), X(2)})));
  CHECK(fa.letter_degree(Y(1)) == 3);
  CHECK(fa.sign_degree(Y(1)) == 2);
}
