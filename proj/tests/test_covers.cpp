#include <doctest.h>

#include <set>

#include "pqs/covers.hpp"
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

}  // namespace

TEST_CASE("system validation") {
  FiniteGroup g = make_s3();
  int t = g.index_of(perm_from_cycles(3, {{0, 1}}));
  int r = g.index_of(perm_from_cycles(3, {{0, 1, 2}}));
  CHECK_THROWS_AS(validate_system(g, {t, t, t}), Error);          // product != 1
  CHECK_THROWS_AS(validate_system(g, {r, r, r}), Error);          // does not generate
  CHECK_THROWS_AS(validate_system(g, {t, g.identity(), t}), Error);
  int u = g.conj(t, r);
  SphericalSystem sys = validate_system(g, {t, u, g.inv(g.mul(t, u))});
  CHECK(sys.signature == std::vector<int>{2, 2, 3});
}

TEST_CASE("genus of classical covers") {
  FiniteGroup g = make_s3();
  int t = g.index_of(perm_from_cycles(3, {{0, 1}}));
  int r = g.index_of(perm_from_cycles(3, {{0, 1, 2}}));
  // (2,2,3,3): 2g-2 = 6(-2 + 1/2 + 1/2 + 2/3 + 2/3) = 2
  CHECK(genus_of_cover(validate_system(g, {t, t, r, g.inv(r)})) == 2);
  // (2,2,2,2) over C2
  FiniteGroup c2 = FiniteGroup::from_generators(2, {perm_from_cycles(2, {{0, 1}})});
  int s = 1 - c2.identity();
  CHECK(genus_of_cover(validate_system(c2, {s, s, s, s})) == 1);
  CHECK(genus_of_cover(validate_system(c2, {s, s})) == 0);
}

TEST_CASE("hurwitz moves preserve the key invariants") {
  FiniteGroup g = make_dihedral(7);
  int s = g.index_of(Permutation(std::vector<int>{0, 6, 5, 4, 3, 2, 1}));
  int r = g.index_of(Permutation(std::vector<int>{1, 2, 3, 4, 5, 6, 0}));
  std::vector<int> elems;
  for (int i = 0; i < 6; ++i) elems.push_back(i % 2 ? s : g.conj(s, r));
  elems.push_back(r);  // product is forced below
  // fix the last element so the product is the identity
  int prod = g.identity();
  for (int i = 0; i < 6; ++i) prod = g.mul(prod, elems[i]);
  elems[6] = g.inv(prod);
  SphericalSystem sys = validate_system(g, elems);
  for (int i = 0; i + 1 < (int)sys.elements.size(); ++i) {
    SphericalSystem moved = hurwitz_move(sys, i);
    CHECK(genus_of_cover(moved) == genus_of_cover(sys));
    std::multiset<int> a(sys.signature.begin(), sys.signature.end());
    std::multiset<int> b(moved.signature.begin(), moved.signature.end());
    CHECK(a == b);
    int p = g.identity();
    for (int e : moved.elements) p = g.mul(p, e);
    CHECK(p == g.identity());
  }
}

TEST_CASE("canonical form classifies simultaneous conjugation") {
  FiniteGroup g = make_s3();
  int t = g.index_of(perm_from_cycles(3, {{0, 1}}));
  int r = g.index_of(perm_from_cycles(3, {{0, 1, 2}}));
  std::vector<int> sys = {t, g.mul(r, t), g.inv(r)};
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> conj;
    for (int e : sys) conj.push_back(g.conj(e, x));
    CHECK(canonical_form(g, conj) == canonical_form(g, sys));
  }
}

TEST_CASE("enumeration matches brute force on S3") {
  FiniteGroup g = make_s3();
  int t = g.index_of(perm_from_cycles(3, {{0, 1}}));
  int r = g.index_of(perm_from_cycles(3, {{0, 1, 2}}));
  auto systems = enumerate_systems(g, {t, t, r});
  // brute force canonical forms
  std::set<std::vector<int>> expect;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (g.element_order(a) != 2 || g.element_order(b) != 2) continue;
      int c = g.inv(g.mul(a, b));
      if (g.element_order(c) != 3) continue;
      if (subgroup_generated(g, {a, b, c}).order() != 6) continue;
      expect.insert(canonical_form(g, {a, b, c}));
    }
  std::set<std::vector<int>> got;
  for (const auto& s : systems) got.insert(s.elements);
  CHECK(got == expect);
  CHECK(systems.size() == 1);
}

TEST_CASE("induced monodromy of the trivial and full subgroups") {
  FiniteGroup g = make_s3();
  int t = g.index_of(perm_from_cycles(3, {{0, 1}}));
  int r = g.index_of(perm_from_cycles(3, {{0, 1, 2}}));
  SphericalSystem sys = validate_system(g, {t, t, r, g.inv(r)});
  Subgroup triv(g, {g.identity()});
  CoverDescription full = induced_quotient_monodromy(sys, triv);
  CHECK(full.quotient_genus == genus_of_cover(sys));
  CHECK(full.branch.empty());
  Subgroup whole(g, subgroup_generated(g, {t, r}).elements());
  CoverDescription base = induced_quotient_monodromy(sys, whole);
  CHECK(base.quotient_genus == 0);
  // branch points grouped by conjugacy class: {t, t} and {r, r^-1}
  int total = 0;
  for (const BranchDatum& b : base.branch) total += b.count;
  CHECK(base.branch.size() == 2);
  CHECK(total == 4);
}

TEST_CASE("materialized subgroup is isomorphic to the abstract one") {
  FiniteGroup g = make_dihedral(6);
  int r = g.index_of(Permutation(std::vector<int>{1, 2, 3, 4, 5, 0}));
  Subgroup h = subgroup_generated(g, {g.mul(r, r)});
  MaterializedSubgroup m = materialize(h);
  CHECK(m.group.order() == 3);
  for (int a : h.elements())
    for (int b : h.elements())
      CHECK(m.to_parent[m.group.mul(m.from_parent(a), m.from_parent(b))] == g.mul(a, b));
}

TEST_CASE("signature-level enumeration covers every class vector") {
  Psl2 P(13);
  auto systems = enumerate_systems_by_orders(P.group(), {2, 3, 7});
  CHECK(systems.size() == 6);
  std::set<int> seven_classes;
  for (const auto& s : systems) seven_classes.insert(P.group().class_of(s.elements[2]));
  CHECK(seven_classes.size() == 3);
}
