#include "pqs/covers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pqs {

SphericalSystem validate_system(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) fail_validation("spherical system must be nonempty");
  SphericalSystem sys;
  sys.group = &g;
  sys.elements = elements;
  int prod = g.identity();
  for (int e : elements) {
    if (e < 0 || e >= g.order()) fail_validation("system element index out of range");
    if (e == g.identity()) fail_validation("spherical system contains the identity");
    sys.signature.push_back(g.element_order(e));
    prod = g.mul(prod, e);
  }
  if (prod != g.identity()) fail_validation("spherical system product is not the identity");
  if (subgroup_generated(g, elements).order() != g.order())
    fail_validation("spherical system generates a proper subgroup");
  return sys;
}

long long genus_of_cover(const SphericalSystem& sys) {
  // 2g - 2 = |G| (-2 + sum (1 - 1/m_i)), base P^1.
  Rational sum = -2;
  for (int m : sys.signature) sum += Rational(m - 1, m);
  Rational two_g_minus_two = Rational(sys.group->order()) * sum;
  Rational genus = (two_g_minus_two + 2) / 2;
  if (!genus.is_integer() || genus.num() < 0)
    fail_inconsistency("Riemann-Hurwitz produced a bad genus " + genus.str());
  return genus.as_integer();
}

MaterializedSubgroup materialize(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Permutation> gens;
  gens.reserve(h.elements().size());
  for (int e : h.elements()) gens.push_back(g.element(e));
  MaterializedSubgroup out{FiniteGroup::from_generators(g.degree(), gens), {}};
  out.to_parent.resize(out.group.order());
  for (int i = 0; i < out.group.order(); ++i)
    out.to_parent[i] = g.index_of(out.group.element(i));
  return out;
}

int MaterializedSubgroup::from_parent(int parent_index) const {
  for (int i = 0; i < group.order(); ++i)
    if (to_parent[i] == parent_index) return i;
  fail_validation("element is not in the subgroup");
}

CoverDescription induced_quotient_monodromy(const SphericalSystem& sys, const Subgroup& h) {
  const FiniteGroup& g = *sys.group;
  CosetSpace cosets(g, h);
  MaterializedSubgroup hg = materialize(h);

  CoverDescription out;
  out.total_genus = genus_of_cover(sys);

  long long ramification = 0;  // sum over cycles of (length - 1)
  // branch classes keyed by H-class index of the materialized subgroup
  std::map<int, BranchDatum> branch;
  for (int e : sys.elements) {
    for (const auto& cyc : cosets.action_cycles(e)) {
      const int len = static_cast<int>(cyc.size());
      ramification += len - 1;
      int r = cosets.representative(cyc.front());
      // local monodromy r g^len r^-1, in H
      int local = g.conj(g.power(e, len), g.inv(r));
      if (local == g.identity()) continue;
      if (!h.contains(local)) fail_inconsistency("local monodromy escaped the subgroup");
      int hidx = hg.group.index_of(g.element(local));
      int cls = hg.group.class_of(hidx);
      auto it = branch.find(cls);
      if (it == branch.end()) {
        int rep = hg.to_parent[hg.group.classes()[cls].representative];
        branch.emplace(cls, BranchDatum{rep, hg.group.classes()[cls].element_order, 1});
      } else {
        ++it->second.count;
      }
    }
  }
  for (const auto& [cls, datum] : branch) out.branch.push_back(datum);
  std::sort(out.branch.begin(), out.branch.end(), [](const BranchDatum& a, const BranchDatum& b) {
    if (a.local_order != b.local_order) return a.local_order < b.local_order;
    return a.class_rep < b.class_rep;
  });

  const long long index = cosets.count();
  long long two_g_minus_two = -2 * index + ramification;
  if (two_g_minus_two % 2 != 0 || two_g_minus_two < -2)
    fail_inconsistency("quotient Riemann-Hurwitz produced a bad genus");
  out.quotient_genus = (two_g_minus_two + 2) / 2;

  // Cross-check Riemann-Hurwitz for C -> C/H against the total genus.
  long long upstairs = 0;
  for (int e : sys.elements) {
    for (const auto& cyc : cosets.action_cycles(e)) {
      int m = g.element_order(e) / static_cast<int>(cyc.size());
      upstairs += (long long)h.order() / m * (m - 1);
    }
  }
  if (2 * out.total_genus - 2 != (long long)h.order() * two_g_minus_two + upstairs)
    fail_inconsistency("Riemann-Hurwitz consistency failed for the intermediate cover");
  return out;
}

long long quotient_genus(const SphericalSystem& sys, const Subgroup& h) {
  return induced_quotient_monodromy(sys, h).quotient_genus;
}

SphericalSystem hurwitz_move(const SphericalSystem& sys, int i) {
  const int r = static_cast<int>(sys.elements.size());
  if (i < 0 || i + 1 >= r) fail_validation("hurwitz move index out of range");
  const FiniteGroup& g = *sys.group;
  std::vector<int> elems = sys.elements;
  int a = elems[i], b = elems[i + 1];
  elems[i] = g.mul(g.mul(a, b), g.inv(a));
  elems[i + 1] = a;
  return validate_system(g, elems);
}

std::vector<int> canonical_form(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> best;
  std::vector<int> cur(elements.size());
  for (int x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < elements.size(); ++k) cur[k] = g.conj(elements[k], x);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::vector<SphericalSystem> enumerate_systems(const FiniteGroup& g,
                                               const std::vector<int>& class_reps,
                                               long long node_cap) {
  if (class_reps.empty()) fail_validation("class list must be nonempty");
  const int r = static_cast<int>(class_reps.size());
  for (int rep : class_reps)
    if (rep == g.identity()) fail_validation("identity class not allowed in a spherical system");

  std::vector<const std::vector<int>*> members(r);
  for (int i = 0; i < r; ++i)
    members[i] = &g.classes()[g.class_of(class_reps[i])].members;
  const int last_class = g.class_of(class_reps[r - 1]);

  std::set<std::vector<int>> canon_seen;
  std::vector<SphericalSystem> out;
  std::vector<int> chosen(r);
  long long nodes = 0;

  auto finish = [&](const std::vector<int>& elems) {
    if (subgroup_generated(g, elems).order() != g.order()) return;
    std::vector<int> canon = canonical_form(g, elems);
    if (canon_seen.insert(canon).second) out.push_back(validate_system(g, canon));
  };

  // g_1 is pinned to its class representative (conjugation freedom).
  chosen[0] = class_reps[0];
  auto recurse = [&](auto&& self, int pos, int prefix_prod) -> void {
    if (++nodes > node_cap) fail_resource("enumeration node cap exceeded");
    if (r == 1) {
      return;  // single nontrivial element can never have product one
    }
    if (pos == r - 1) {
      int needed = g.inv(prefix_prod);
      if (g.class_of(needed) == last_class) {
        chosen[r - 1] = needed;
        finish(chosen);
      }
      return;
    }
    for (int e : *members[pos]) {
      chosen[pos] = e;
      self(self, pos + 1, g.mul(prefix_prod, e));
    }
  };
  recurse(recurse, 1, chosen[0]);

  std::sort(out.begin(), out.end(), [](const SphericalSystem& a, const SphericalSystem& b) {
    return a.elements < b.elements;
  });
  return out;
}

std::vector<SphericalSystem> enumerate_systems_by_orders(const FiniteGroup& g,
                                                         const std::vector<int>& orders,
                                                         long long node_cap) {
  if (orders.empty()) fail_validation("order list must be nonempty");
  const int r = static_cast<int>(orders.size());
  std::vector<std::vector<int>> choices(r);  // class reps of the right order
  for (int i = 0; i < r; ++i) {
    if (orders[i] < 2) fail_validation("signature orders must be at least 2");
    for (const ConjugacyClass& c : g.classes())
      if (c.element_order == orders[i]) choices[i].push_back(c.representative);
    if (choices[i].empty())
      fail_validation("group has no elements of order " + std::to_string(orders[i]));
  }
  std::vector<SphericalSystem> out;
  std::vector<int> reps(r);
  auto sweep = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      auto part = enumerate_systems(g, reps, node_cap);
      out.insert(out.end(), part.begin(), part.end());
      return;
    }
    for (int rep : choices[pos]) {
      reps[pos] = rep;
      self(self, pos + 1);
    }
  };
  sweep(sweep, 0);
  return out;
}

SphericalSystem realize_induced_system(const SphericalSystem& sys, const Subgroup& h,
                                       const MaterializedSubgroup& m, long long node_cap) {
  CoverDescription cd = induced_quotient_monodromy(sys, h);
  if (cd.quotient_genus != 0)
    fail_validation("induced system realization requires quotient genus zero");
  std::vector<int> reps;
  for (const BranchDatum& b : cd.branch)
    for (int k = 0; k < b.count; ++k) reps.push_back(m.from_parent(b.class_rep));
  std::vector<SphericalSystem> systems = enumerate_systems(m.group, reps, node_cap);
  if (systems.empty())
    fail_inconsistency("no spherical system realizes the induced branch classes");
  return systems.front();
}

}  // namespace pqs
