#include <doctest.h>

#include <numeric>

#include "pqs/singularities.hpp"

using namespace pqs;

TEST_CASE("hirzebruch-jung expansions, known values") {
  CHECK(hj_expansion(7, 3) == std::vector<long long>{3, 2, 2});
  CHECK(hj_expansion(7, 4) == std::vector<long long>{2, 4});
  CHECK(hj_expansion(7, 1) == std::vector<long long>{7});
  CHECK(hj_expansion(5, 1) == std::vector<long long>{5});
  CHECK(hj_expansion(3, 2) == std::vector<long long>{2, 2});
  CHECK_THROWS_AS(hj_expansion(6, 4), Error);  // gcd != 1
  CHECK_THROWS_AS(hj_expansion(5, 5), Error);
}

TEST_CASE("A_n expansion is n twos") {
  for (long long n = 2; n <= 30; ++n) {
    auto b = hj_expansion(n, n - 1);
    CHECK((long long)b.size() == n - 1);
    for (long long bi : b) CHECK(bi == 2);
  }
}

TEST_CASE("expansion round-trips: evaluating the continued fraction returns n/a") {
  for (long long n = 2; n <= 200; ++n)
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      auto b = hj_expansion(n, a);
      Rational v(b.back());
      for (int i = (int)b.size() - 2; i >= 0; --i) v = Rational(b[i]) - Rational(1) / v;
      CHECK(v == Rational(n, a));
      for (long long bi : b) CHECK(bi >= 2);
    }
}

TEST_CASE("discrepancies lie in (-1,0] and vanish exactly for A_n") {
  for (long long n = 2; n <= 60; ++n)
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      ExceptionalChain chain = chain_data(CyclicQuotientType{n, a});
      bool all_zero = true;
      for (const Rational& d : chain.discrepancies) {
        CHECK(d > Rational(-1));
        CHECK(d <= Rational(0));
        all_zero = all_zero && d == Rational(0);
      }
      CHECK(all_zero == (a == n - 1));  // A-type iff 1/n(1,n-1)
    }
}

TEST_CASE("type normalization identifies a with its inverse") {
  CHECK(normalize_type(7, 4) == CyclicQuotientType{7, 2});
  CHECK(normalize_type(7, 2) == CyclicQuotientType{7, 2});
  CHECK(normalize_type(7, 3) == CyclicQuotientType{7, 3});  // 3^-1 = 5
  CHECK(normalize_type(2, 1) == CyclicQuotientType{2, 1});
  CHECK_THROWS_AS(normalize_type(1, 1), Error);
}

TEST_CASE("k, e, B, D for A_1") {
  CyclicQuotientType a1{2, 1};
  CHECK(k_invariant(a1) == Rational(0));
  CHECK(e_invariant(a1) == Rational(3, 2));
  CHECK(B_invariant(a1) == Rational(3));
  CHECK(D_invariant(a1) == Rational(2));
}

TEST_CASE("k, e, B, D for 1/7 types") {
  CyclicQuotientType t71{7, 1};  // expansion [7]
  CHECK(k_invariant(t71) == Rational(-2) + Rational(2 + 1 + 1, 7) + Rational(5));
  CHECK(e_invariant(t71) == Rational(2) - Rational(1, 7));
  CyclicQuotientType t72{7, 2};  // a' = 4, expansion [4,2]
  CHECK(k_invariant(t72) == Rational(8, 7));
  CHECK(e_invariant(t72) == Rational(3) - Rational(1, 7));
  CHECK(D_invariant(t72) == Rational(8));
  CyclicQuotientType t73{7, 3};  // a' = 5, expansion [3,2,2]
  CHECK(k_invariant(t73) == Rational(3, 7));
  CHECK(e_invariant(t73) == Rational(4) - Rational(1, 7));
  CHECK(D_invariant(t73) == Rational(5));
}

TEST_CASE("k is invariant under a -> a^-1 and nonnegative combinations sum") {
  for (long long n = 2; n <= 40; ++n)
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      // normalize_type folds a and a^-1 together; k/e/B/D must agree on both
      CyclicQuotientType raw{n, a};
      CyclicQuotientType norm = normalize_type(n, a);
      CHECK(k_invariant(raw) == k_invariant(norm));
      CHECK(e_invariant(raw) == e_invariant(norm));
      CHECK(B_invariant(raw) == B_invariant(norm));
      CHECK(D_invariant(raw) == D_invariant(norm));
    }
}

TEST_CASE("basket invariants accumulate linearly") {
  Basket b;
  b[CyclicQuotientType{2, 1}] = 36;
  b[CyclicQuotientType{7, 6}] = 1;
  b[CyclicQuotientType{7, 1}] = 1;
  BasketInvariants inv = basket_invariants(b);
  CHECK(inv.point_count == 38);
  CHECK(inv.k == Rational(36) * k_invariant({2, 1}) + k_invariant({7, 6}) +
                     k_invariant({7, 1}));
  CHECK(inv.e == Rational(36) * e_invariant({2, 1}) + e_invariant({7, 6}) +
                     e_invariant({7, 1}));
}
