#include <doctest.h>

#include <random>

#include "pqs/invariants.hpp"
#include "pqs/psl2.hpp"

using namespace pqs;

namespace {

FiniteGroup make_s3() {
  return FiniteGroup::from_generators(
      3, {perm_from_cycles(3, {{0, 1}}), perm_from_cycles(3, {{0, 1, 2}})});
}

FiniteGroup make_dihedral(int n) {
  std::vector<int> rot(n), flip(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return FiniteGroup::from_generators(n, {Permutation(rot), Permutation(flip)});
}

// Random spherical system over g: random elements with a correcting tail.
std::optional<std::vector<int>> random_system(const FiniteGroup& g, std::mt19937& rng,
                                              int len) {
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> elems;
    int prod = g.identity();
    for (int i = 0; i < len - 1; ++i) {
      int e = pick(rng);
      if (e == g.identity()) continue;
      elems.push_back(e);
      prod = g.mul(prod, e);
    }
    int last = g.inv(prod);
    if (last == g.identity()) continue;
    elems.push_back(last);
    if (subgroup_generated(g, elems).order() != g.order()) continue;
    return elems;
  }
  return std::nullopt;
}

Basket basket_of(const FiniteGroup&, const SphericalSystem& a, const SphericalSystem& b) {
  return compute_basket(a, b).basket;
}

}  // namespace

TEST_CASE("noether integrality and nonnegativity on randomized systems") {
  std::mt19937 rng(20260823);
  FiniteGroup s3 = make_s3();
  FiniteGroup d4 = make_dihedral(4);
  for (const FiniteGroup* g : {&s3, &d4}) {
    int built = 0;
    while (built < 8) {
      auto e1 = random_system(*g, rng, 4);
      auto e2 = random_system(*g, rng, 5);
      if (!e1 || !e2) continue;
      ++built;
      SphericalSystem a = validate_system(*g, *e1), b = validate_system(*g, *e2);
      SurfaceInvariants inv = surface_invariants(a, b);
      CHECK((inv.KX2 + inv.c2) % 12 == 0);
      CHECK(inv.chi == (inv.KX2 + inv.c2) / 12);
      CHECK(inv.pg == inv.chi - 1);
      CHECK(inv.h11 == inv.c2 - 2 - 2 * inv.pg);
    }
  }
}

TEST_CASE("basket is invariant under simultaneous conjugation and Hurwitz moves") {
  std::mt19937 rng(7);
  FiniteGroup g = make_s3();
  int built = 0;
  while (built < 6) {
    auto e1 = random_system(g, rng, 4);
    auto e2 = random_system(g, rng, 4);
    if (!e1 || !e2) continue;
    ++built;
    SphericalSystem a = validate_system(g, *e1), b = validate_system(g, *e2);
    Basket base = basket_of(g, a, b);
    for (int x = 0; x < g.order(); ++x) {
      std::vector<int> ca, cb;
      for (int e : *e1) ca.push_back(g.conj(e, x));
      for (int e : *e2) cb.push_back(g.conj(e, x));
      CHECK(basket_of(g, validate_system(g, ca), validate_system(g, cb)) == base);
    }
    for (int i = 0; i + 1 < (int)e1->size(); ++i)
      CHECK(basket_of(g, hurwitz_move(a, i), b) == base);
    for (int i = 0; i + 1 < (int)e2->size(); ++i)
      CHECK(basket_of(g, a, hurwitz_move(b, i)) == base);
  }
}

TEST_CASE("basket contributions depend only on element classes") {
  // replacing one element of one system by any conjugate leaves the basket
  // unchanged (the sweep over Galois twists relies on this)
  FiniteGroup g = make_dihedral(7);
  int s = g.index_of(Permutation(std::vector<int>{0, 6, 5, 4, 3, 2, 1}));
  int r = g.index_of(Permutation(std::vector<int>{1, 2, 3, 4, 5, 6, 0}));
  std::vector<int> elems{s, g.conj(s, r), g.conj(s, g.mul(r, r)), 0, 0, 0, 0};
  int prod = g.identity();
  for (int i = 0; i < 3; ++i) prod = g.mul(prod, elems[i]);
  // fill with two more reflections and the order-7 closer
  elems[3] = s;
  elems[4] = g.conj(s, r);
  prod = g.mul(g.mul(prod, elems[3]), elems[4]);
  elems[5] = s;
  prod = g.mul(prod, elems[5]);
  elems[6] = g.inv(prod);
  REQUIRE(g.element_order(elems[6]) == 7);
  SphericalSystem a = validate_system(g, elems);
  Basket base = basket_of(g, a, a);
  // conjugating only the second factor's system must not change the basket
  // (the Galois twist sweep relies on per-factor class independence)
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> cb;
    for (int e : elems) cb.push_back(g.conj(e, x));
    CHECK(basket_of(g, a, validate_system(g, cb)) == base);
  }
}

TEST_CASE("reference family: frozen diagonal invariants") {
  Psl2 P(13);
  const FiniteGroup& G = P.group();
  SphericalSystem big = validate_system(
      G, {P.element_of({{{5, 3}, {0, 8}}}), P.element_of({{{-1, 3}, {4, 0}}}),
          P.element_of({{{0, 2}, {6, 6}}})});
  struct Expect {
    std::string structure;
    long long K2, c2, pg, h11, KE2;
    Basket basket;
  };
  std::vector<Expect> expects = {
      {"D7", 93, 111, 16, 77, 2, {{{2, 1}, 36}, {{7, 1}, 1}, {{7, 6}, 1}}},
      {"D6", 112, 128, 19, 88, 14, {{{2, 1}, 42}, {{3, 1}, 2}, {{3, 2}, 2}}},
      {"A4", 110, 118, 18, 80, 18, {{{2, 1}, 18}, {{3, 1}, 8}, {{3, 2}, 8}}},
  };
  auto classes = two_generated_subgroup_classes(G);
  for (const Expect& ex : expects) {
    bool found = false;
    for (const auto& ci : classes) {
      if (ci.structure != ex.structure) continue;
      found = true;
      MaterializedSubgroup m = materialize(ci.representative);
      SphericalSystem diag = realize_induced_system(big, ci.representative, m);
      SurfaceInvariants inv = surface_invariants(diag, diag);
      CHECK(inv.KX2 == ex.K2);
      CHECK(inv.c2 == ex.c2);
      CHECK(inv.pg == ex.pg);
      CHECK(inv.h11 == ex.h11);
      CHECK(inv.KminusE2 == ex.KE2);
      CHECK(inv.basket == ex.basket);
      CHECK(inv.criterion_positive);
    }
    CHECK(found);
  }
}

TEST_CASE("twist report is deterministic across thread counts") {
  FiniteGroup g = make_s3();
  int t = g.index_of(perm_from_cycles(3, {{0, 1}}));
  int r = g.index_of(perm_from_cycles(3, {{0, 1, 2}}));
  int u = g.conj(t, r);
  std::vector<SphericalSystem> list = {
      validate_system(g, {t, t, r, g.inv(r)}),
      validate_system(g, {t, u, g.inv(g.mul(t, u))})};
  TwistReport one = twist_report(list, list, 0, 0, 1);
  TwistReport four = twist_report(list, list, 0, 0, 4);
  REQUIRE(one.entries.size() == four.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i)
    for (std::size_t j = 0; j < one.entries[i].size(); ++j) {
      CHECK(one.entries[i][j].KX2 == four.entries[i][j].KX2);
      CHECK(one.entries[i][j].basket == four.entries[i][j].basket);
    }
  CHECK(one.min_k_minus_e2 == four.min_k_minus_e2);
}
