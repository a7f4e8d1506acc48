#ifndef PQS_COVERS_HPP
#define PQS_COVERS_HPP

#include <vector>

#include "pqs/permgroup.hpp"
#include "pqs/rational.hpp"

namespace pqs {

// Spherical generator system: g_1 ... g_r = 1, the g_i generate the group,
// every g_i nontrivial. Defines a G-cover of the line branched at r points.
struct SphericalSystem {
  const FiniteGroup* group = nullptr;
  std::vector<int> elements;   // element indices
  std::vector<int> signature;  // element orders m_i >= 2
};

SphericalSystem validate_system(const FiniteGroup& g, const std::vector<int>& elements);

long long genus_of_cover(const SphericalSystem& sys);

// Branch point data of C -> C/H, grouped by H-conjugacy class.
struct BranchDatum {
  int class_rep;    // parent-group element index, minimal in its H-class
  int local_order;  // order of the representative
  int count;        // branch points carrying this class
};

struct CoverDescription {
  long long total_genus = 0;
  long long quotient_genus = 0;
  std::vector<BranchDatum> branch;
};

// Monodromy of the intermediate cover C -> C/H induced from a spherical
// system for C -> P^1: for each cycle of g_i on the coset space G/H of
// length l containing Hr, the branch class is the H-class of r g_i^l r^-1;
// the quotient genus comes from Riemann-Hurwitz applied to the G/H action.
CoverDescription induced_quotient_monodromy(const SphericalSystem& sys, const Subgroup& h);

long long quotient_genus(const SphericalSystem& sys, const Subgroup& h);

// Braid move at position i (0-based): (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i).
SphericalSystem hurwitz_move(const SphericalSystem& sys, int i);

// Lexicographically minimal tuple over simultaneous conjugation by the whole
// group; two systems are simultaneously conjugate iff their forms are equal.
std::vector<int> canonical_form(const FiniteGroup& g, const std::vector<int>& elements);

// All spherical systems with the prescribed ordered conjugacy classes, up to
// simultaneous conjugation, in deterministic order. Each returned system is
// its own canonical form.
std::vector<SphericalSystem> enumerate_systems(const FiniteGroup& g,
                                               const std::vector<int>& class_reps,
                                               long long node_cap = 50'000'000);

// Union of enumerate_systems over every ordered choice of conjugacy classes
// with the prescribed element orders; deterministic (class vectors in class
// index order).
std::vector<SphericalSystem> enumerate_systems_by_orders(const FiniteGroup& g,
                                                         const std::vector<int>& orders,
                                                         long long node_cap = 50'000'000);

// The subgroup's elements as a standalone group, plus the index maps between
// parent element indices and the materialized group's indices.
struct MaterializedSubgroup {
  FiniteGroup group;
  std::vector<int> to_parent;  // group index -> parent index
  int from_parent(int parent_index) const;
};

MaterializedSubgroup materialize(const Subgroup& h);

// A spherical system for H acting on the cover, realizing the branch classes
// induced by `sys` on C -> C/H (first enumerated realization; any choice
// yields the same basket since per-pair contributions are class functions).
// Requires the induced quotient genus to be zero.
SphericalSystem realize_induced_system(const SphericalSystem& sys, const Subgroup& h,
                                       const MaterializedSubgroup& m,
                                       long long node_cap = 50'000'000);

}  // namespace pqs

#endif
