#include <doctest.h>

#include "pqs/psl2.hpp"

using namespace pqs;

TEST_CASE("orders of small PSL2 groups") {
  CHECK(Psl2(5).group().order() == 60);
  CHECK(Psl2(7).group().order() == 168);
  CHECK_THROWS_AS(Psl2(9), Error);  // prime powers not supported
  CHECK_THROWS_AS(Psl2(2), Error);
}

TEST_CASE("matrix to permutation is a homomorphism") {
  Psl2 P(7);
  const FiniteGroup& g = P.group();
  std::vector<Mat2> mats = {{{{1, 1}, {0, 1}}}, {{{0, -1}, {1, 0}}},
                            {{{2, 0}, {0, 4}}}, {{{1, 0}, {3, 1}}},
                            {{{2, 3}, {3, 5}}}};
  for (const Mat2& a : mats)
    for (const Mat2& b : mats) {
      Mat2 ab;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          ab[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
      CHECK(g.mul(P.element_of(a), P.element_of(b)) == P.element_of(ab));
    }
}

TEST_CASE("PSL2 membership requires square determinant") {
  Psl2 P(13);
  CHECK_THROWS_AS(P.permutation_of({{{1, 0}, {0, 0}}}), Error);  // singular
  CHECK_THROWS_AS(P.permutation_of({{{2, 0}, {0, 1}}}), Error);  // det 2, nonsquare
  CHECK_NOTHROW(P.permutation_of({{{4, 0}, {0, 1}}}));           // det 4 = 2^2
}

TEST_CASE("scalar matrices act trivially") {
  Psl2 P(13);
  CHECK(P.permutation_of({{{3, 0}, {0, 3}}}).is_identity());
}

TEST_CASE("reference triple in PSL2(F13)") {
  Psl2 P(13);
  const FiniteGroup& g = P.group();
  CHECK(g.order() == 1092);
  CHECK(g.degree() == 14);
  int a = P.element_of({{{5, 3}, {0, 8}}});
  int b = P.element_of({{{-1, 3}, {4, 0}}});
  int c = P.element_of({{{0, 2}, {6, 6}}});
  CHECK(g.element_order(a) == 2);
  CHECK(g.element_order(b) == 3);
  CHECK(g.element_order(c) == 7);
  CHECK(g.mul(g.mul(a, b), c) == g.identity());
}

TEST_CASE("outer automorphism is an order-2 automorphism modulo inner ones") {
  Psl2 P(13);
  const FiniteGroup& g = P.group();
  // applying it twice is conjugation by diag(nu^2, 1), i.e. inner: classes fixed
  for (int x = 0; x < 60; ++x)
    CHECK(g.class_of(P.apply_outer(P.apply_outer(x))) == g.class_of(x));
  for (int x = 0; x < 60; ++x) {
    CHECK(g.element_order(P.apply_outer(x)) == g.element_order(x));
    for (int y = 0; y < 20; ++y)
      CHECK(P.apply_outer(g.mul(x, y)) == g.mul(P.apply_outer(x), P.apply_outer(y)));
  }
  // it is not inner: some class is not preserved
  bool moves_a_class = false;
  for (const auto& cls : g.classes())
    if (g.class_of(P.apply_outer(cls.representative)) != g.class_of(cls.representative))
      moves_a_class = true;
  CHECK(moves_a_class);
}
