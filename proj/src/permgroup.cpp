#include "pqs/permgroup.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace pqs {

namespace {

std::string pack_images(const std::vector<int>& img) {
  std::string key(img.size() * sizeof(int32_t), '\0');
  for (std::size_t i = 0; i < img.size(); ++i) {
    int32_t v = img[i];
    std::memcpy(&key[i * sizeof(int32_t)], &v, sizeof(int32_t));
  }
  return key;
}

std::string pack_indices(const std::vector<int>& idx) { return pack_images(idx); }

}  // namespace

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      fail_validation("permutation images are not a bijection on {0..." +
                      std::to_string(degree() - 1) + "}");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) fail_validation("permutation degree mismatch in product");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = rhs.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

int Permutation::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, (long long)c.size());
  return static_cast<int>(ord);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 0 || from >= degree) fail_validation("cycle entry out of range");
      img[from] = to;
    }
  }
  return Permutation(img);
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

FiniteGroup FiniteGroup::from_generators(int degree, const std::vector<Permutation>& gens,
                                         std::size_t order_cap) {
  FiniteGroup g;
  g.degree_ = degree;
  for (const auto& p : gens)
    if (p.degree() != degree) fail_validation("generator degree mismatch");

  g.elements_.push_back(Permutation(degree));
  g.index_[pack_images(g.elements_[0].images())] = 0;
  // Breadth-first closure; element order is insertion order.
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& gen : gens) {
      Permutation p = g.elements_[i] * gen;
      std::string key = pack_images(p.images());
      if (g.index_.find(key) == g.index_.end()) {
        if (g.elements_.size() >= order_cap)
          fail_resource("group order exceeds cap " + std::to_string(order_cap));
        g.index_[key] = static_cast<int>(g.elements_.size());
        g.elements_.push_back(std::move(p));
      }
    }
  }

  g.order_ = static_cast<int>(g.elements_.size());
  g.identity_ = 0;
  for (const auto& p : gens) g.generators_.push_back(g.index_of(p));

  g.table_.resize(std::size_t(g.order_) * g.order_);
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      g.table_[std::size_t(a) * g.order_ + b] = g.index_of(g.elements_[a] * g.elements_[b]);

  g.inverse_.resize(g.order_);
  g.order_of_.resize(g.order_);
  for (int a = 0; a < g.order_; ++a) {
    g.inverse_[a] = g.index_of(g.elements_[a].inverse());
    g.order_of_[a] = g.elements_[a].order();
  }

  g.compute_classes();
  return g;
}

int FiniteGroup::power(int g, long long e) const {
  int m = element_order(g);
  e %= m;
  if (e < 0) e += m;
  int acc = identity_;
  for (long long k = 0; k < e; ++k) acc = mul(acc, g);
  return acc;
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto opt = find(p);
  if (!opt) fail_validation("permutation does not belong to the group");
  return *opt;
}

std::optional<int> FiniteGroup::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(pack_images(p.images()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroup::compute_classes() {
  class_of_.assign(order_, -1);
  std::vector<ConjugacyClass> classes;
  for (int g = 0; g < order_; ++g) {
    if (class_of_[g] != -1) continue;
    // Orbit of the conjugation action, generated by the group generators.
    std::vector<int> members{g};
    class_of_[g] = static_cast<int>(classes.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int t : generators_) {
        int h = conj(members[i], t);
        if (class_of_[h] == -1) {
          class_of_[h] = class_of_[g];
          members.push_back(h);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjugacyClass c;
    c.representative = members.front();
    c.element_order = order_of_[members.front()];
    c.members = std::move(members);
    classes.push_back(std::move(c));
  }
  // Deterministic class order: by element order, then class size, then
  // minimal element index.
  std::vector<int> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& ca = classes[a];
    const auto& cb = classes[b];
    if (ca.element_order != cb.element_order) return ca.element_order < cb.element_order;
    if (ca.members.size() != cb.members.size()) return ca.members.size() < cb.members.size();
    return ca.representative < cb.representative;
  });
  classes_.clear();
  for (std::size_t k = 0; k < perm.size(); ++k) {
    classes_.push_back(std::move(classes[perm[k]]));
    for (int m : classes_.back().members) class_of_[m] = static_cast<int>(k);
  }
}

std::optional<int> FiniteGroup::conjugating_witness(int g, int h) const {
  if (class_of_[g] != class_of_[h]) return std::nullopt;
  // BFS over conjugation by generators, tracking the conjugator.
  std::vector<int> witness(order_, -1);
  std::vector<int> frontier{g};
  witness[g] = identity_;
  if (g == h) return identity_;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    int cur = frontier[i];
    for (int t : generators_) {
      int nxt = conj(cur, t);
      if (witness[nxt] == -1) {
        witness[nxt] = mul(witness[cur], t);
        if (nxt == h) return witness[nxt];
        frontier.push_back(nxt);
      }
    }
  }
  return std::nullopt;  // unreachable when classes match
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> element_indices)
    : parent_(&parent), elements_(std::move(element_indices)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(parent.order(), 0);
  for (int e : elements_) member_[e] = 1;
  if (elements_.empty() || !member_[parent.identity()])
    fail_validation("subgroup must contain the identity");
  for (int a : elements_)
    for (int b : elements_)
      if (!member_[parent.mul(a, b)]) fail_validation("subgroup not closed under product");
  if (parent.order() % order() != 0)
    fail_inconsistency("subgroup order does not divide group order");
}

Subgroup Subgroup::conjugated(int x) const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (int e : elements_) out.push_back(parent_->conj(e, x));
  return Subgroup(*parent_, std::move(out));
}

namespace {

// Sorted element list of <gens>, without the Subgroup closure re-validation.
std::vector<int> closure_elements(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> member(g.order(), 0);
  std::vector<int> elems{g.identity()};
  member[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int t : gens) {
      int p = g.mul(elems[i], t);
      if (!member[p]) {
        member[p] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  return Subgroup(g, closure_elements(g, gens));
}

CosetSpace::CosetSpace(const FiniteGroup& parent, const Subgroup& subgroup)
    : parent_(&parent) {
  coset_of_.assign(parent.order(), -1);
  for (int x = 0; x < parent.order(); ++x) {
    if (coset_of_[x] != -1) continue;
    int c = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (int h : subgroup.elements()) coset_of_[parent.mul(h, x)] = c;  // coset Hx
  }
  if (static_cast<long long>(reps_.size()) * subgroup.order() != parent.order())
    fail_inconsistency("coset count times subgroup order != group order");
}

std::vector<std::vector<int>> CosetSpace::action_cycles(int g) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(count(), 0);
  for (int c = 0; c < count(); ++c) {
    if (seen[c]) continue;
    std::vector<int> cyc;
    int j = c;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = act(g, j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<DoubleCosetOrbit> double_coset_orbits(const FiniteGroup& g,
                                                  const Subgroup& a,
                                                  const Subgroup& b) {
  // Left cosets xA and xB, left multiplication action y . (xA) = (yx)A.
  auto left_cosets = [&](const Subgroup& h, std::vector<int>& coset_of,
                         std::vector<int>& reps) {
    coset_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
      if (coset_of[x] != -1) continue;
      int c = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int e : h.elements()) coset_of[g.mul(x, e)] = c;  // coset xH
    }
  };
  std::vector<int> coset_a, reps_a, coset_b, reps_b;
  left_cosets(a, coset_a, reps_a);
  left_cosets(b, coset_b, reps_b);
  const int na = static_cast<int>(reps_a.size());
  const int nb = static_cast<int>(reps_b.size());

  std::vector<DoubleCosetOrbit> out;
  std::vector<char> seen(std::size_t(na) * nb, 0);
  const int ca_id = coset_a[g.identity()];
  for (long long start = 0; start < (long long)na * nb; ++start) {
    if (seen[start]) continue;
    std::vector<long long> orbit{start};
    seen[start] = 1;
    int rep = -1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      int ca = static_cast<int>(orbit[i] / nb);
      int cb = static_cast<int>(orbit[i] % nb);
      if (ca == ca_id) {
        // normalized member (A, rB); keep the minimal such r for determinism
        if (rep == -1 || reps_b[cb] < rep) rep = reps_b[cb];
      }
      for (int t : g.generator_indices()) {
        int nca = coset_a[g.mul(t, reps_a[ca])];
        int ncb = coset_b[g.mul(t, reps_b[cb])];
        long long key = (long long)nca * nb + ncb;
        if (!seen[key]) {
          seen[key] = 1;
          orbit.push_back(key);
        }
      }
    }
    if (rep == -1) fail_inconsistency("diagonal orbit missed the identity A-coset");
    out.push_back({rep, (long long)orbit.size()});
  }
  return out;
}

std::string structure_label(const FiniteGroup& g, const Subgroup& h) {
  const int n = h.order();
  if (n == 1) return "1";
  std::map<int, int> hist;
  int max_order = 1, max_elt = h.elements().front();
  for (int e : h.elements()) {
    int o = g.element_order(e);
    hist[o]++;
    if (o > max_order) {
      max_order = o;
      max_elt = e;
    }
  }
  if (max_order == n) return "C" + std::to_string(n);
  if (n == 4) return "C2^2";
  if (n == 12 && hist.count(3) && hist[3] == 8) return "A4";
  if (n == 2 * max_order) {
    // dihedral test: some involution inverts a maximal cyclic subgroup
    int c = max_elt;
    int cinv = g.inv(c);
    for (int s : h.elements()) {
      if (g.element_order(s) == 2 && g.conj(c, s) == cinv) {
        if (max_order == 3) return "S3";
        return "D" + std::to_string(max_order);
      }
    }
  }
  // semidirect label when a maximal cyclic subgroup is normal
  Subgroup c = subgroup_generated(g, {max_elt});
  bool normal = true;
  for (int x : h.elements())
    for (int e : c.elements())
      if (!c.contains(g.conj(e, x))) {
        normal = false;
        break;
      }
  if (normal)
    return "C" + std::to_string(max_order) + ":C" + std::to_string(n / max_order);
  return "order" + std::to_string(n);
}

std::vector<SubgroupClassInfo> two_generated_subgroup_classes(const FiniteGroup& g) {
  // Distinct subgroups found so far, keyed by packed sorted element list.
  std::vector<std::vector<int>> subs;
  std::unordered_map<std::string, int> seen;
  auto add = [&](const std::vector<int>& elems) {
    std::string key = pack_indices(elems);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    seen[key] = static_cast<int>(subs.size());
    subs.push_back(elems);
    return static_cast<int>(subs.size() - 1);
  };

  add({g.identity()});
  // One generator: class representatives suffice up to conjugacy, but we add
  // all cyclic subgroups anyway (cheap) so orbit counting below sees them.
  for (int e = 0; e < g.order(); ++e) add(closure_elements(g, {e}));
  // Two generators: first from each class representative, second arbitrary.
  for (const auto& cls : g.classes())
    for (int b = 0; b < g.order(); ++b)
      add(closure_elements(g, {cls.representative, b}));

  // Group distinct subgroups into conjugacy orbits.
  std::vector<char> used(subs.size(), 0);
  std::vector<SubgroupClassInfo> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (used[i]) continue;
    if ((int)subs[i].size() == g.order()) {  // the whole group: orbit is itself
      Subgroup rep(g, subs[i]);
      out.push_back(SubgroupClassInfo{rep, 1, structure_label(g, rep)});
      continue;
    }
    std::set<std::string> orbit_keys;
    std::vector<int> min_elems = subs[i];
    for (int x = 0; x < g.order(); ++x) {
      std::vector<int> conj_elems;
      conj_elems.reserve(subs[i].size());
      for (int e : subs[i]) conj_elems.push_back(g.conj(e, x));
      std::sort(conj_elems.begin(), conj_elems.end());
      std::string key = pack_indices(conj_elems);
      if (orbit_keys.insert(key).second) {
        auto it = seen.find(key);
        if (it != seen.end()) used[it->second] = 1;
        if (conj_elems < min_elems) min_elems = conj_elems;
      }
    }
    Subgroup rep(g, min_elems);
    SubgroupClassInfo info{rep, static_cast<int>(orbit_keys.size()),
                           structure_label(g, rep)};
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClassInfo& a, const SubgroupClassInfo& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    if (a.structure != b.structure) return a.structure < b.structure;
    return a.representative.elements() < b.representative.elements();
  });
  return out;
}

}  // namespace pqs
