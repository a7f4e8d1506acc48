#ifndef PQS_PERMGROUP_HPP
#define PQS_PERMGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pqs/error.hpp"

namespace pqs {

// Permutation of {0, ..., degree-1}. Composition is "apply left, then right":
// (g * h)[i] == h[g[i]]. All code in this project assumes that convention.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  int order() const;
  std::vector<std::vector<int>> cycles() const;  // includes fixed points

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

// Permutation written in disjoint-cycle notation, e.g. "(0 1 2)(3 4)".
Permutation perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
std::string cycle_string(const Permutation& p);

struct ConjugacyClass {
  int representative = 0;        // element index, minimal in the class
  std::vector<int> members;      // sorted element indices
  int element_order = 1;
};

// A fully materialized finite permutation group: complete element list in
// closure order, multiplication table, inverses, orders, conjugacy classes.
class FiniteGroup {
public:
  static FiniteGroup from_generators(int degree, const std::vector<Permutation>& gens,
                                     std::size_t order_cap = 1'000'000);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<int>& generator_indices() const { return generators_; }

  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  int power(int g, long long e) const;
  int element_order(int g) const { return order_of_[g]; }

  // Index of a permutation; throws validation error if absent.
  int index_of(const Permutation& p) const;
  std::optional<int> find(const Permutation& p) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  // Conjugating witness x with x^-1 g x == h, or nullopt if not conjugate.
  std::optional<int> conjugating_witness(int g, int h) const;
  bool are_conjugate(int g, int h) const { return class_of_[g] == class_of_[h]; }

private:
  FiniteGroup() = default;
  void compute_classes();

  int degree_ = 0;
  int order_ = 0;
  int identity_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> generators_;
  std::unordered_map<std::string, int> index_;  // packed image bytes -> index
  std::vector<int32_t> table_;
  std::vector<int> inverse_;
  std::vector<int> order_of_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

// Subgroup given by its element indices in the parent group.
class Subgroup {
public:
  Subgroup(const FiniteGroup& parent, std::vector<int> element_indices);

  const FiniteGroup& parent() const { return *parent_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }  // sorted
  bool contains(int g) const { return member_[g]; }

  // Conjugate subgroup x^-1 H x.
  Subgroup conjugated(int x) const;
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

private:
  const FiniteGroup* parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

// Right cosets Hx with the right-multiplication action (Hx) * g = H(xg).
// Coset 0 is H itself; representatives are first-seen in element order.
class CosetSpace {
public:
  CosetSpace(const FiniteGroup& parent, const Subgroup& subgroup);

  const FiniteGroup& parent() const { return *parent_; }
  int count() const { return static_cast<int>(reps_.size()); }
  int representative(int coset) const { return reps_[coset]; }
  int coset_of(int g) const { return coset_of_[g]; }
  int act(int g, int coset) const { return coset_of_[parent_->mul(reps_[coset], g)]; }

  // Cycles of the right-multiplication action of g, each cycle listing coset
  // indices; deterministic (cycles ordered by minimal coset index).
  std::vector<std::vector<int>> action_cycles(int g) const;

private:
  const FiniteGroup* parent_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
};

// One diagonal G-orbit on (G/A) x (G/B) (left cosets, left action),
// normalized so the orbit contains the pair (1*A, rep*B).
struct DoubleCosetOrbit {
  int representative;  // element index r with normalized pair (A, rB)
  long long size;
};

std::vector<DoubleCosetOrbit> double_coset_orbits(const FiniteGroup& g,
                                                  const Subgroup& a,
                                                  const Subgroup& b);

// A conjugacy class of subgroups found by the <=2-generator scan.
struct SubgroupClassInfo {
  Subgroup representative;
  int conjugate_count;        // [G : N_G(H)]
  std::string structure;      // e.g. "C7", "S3", "D7", "A4", "C13:C6"
};

// All subgroups generated by at most two elements, up to conjugacy,
// in deterministic order (by order, then structure label, then elements).
std::vector<SubgroupClassInfo> two_generated_subgroup_classes(const FiniteGroup& g);

// Coarse structure label from order and element-order statistics; enough to
// tell apart every subgroup of the groups this project works with.
std::string structure_label(const FiniteGroup& g, const Subgroup& h);

}  // namespace pqs

#endif
