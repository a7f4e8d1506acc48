#ifndef PQS_SINGULARITIES_HPP
#define PQS_SINGULARITIES_HPP

#include <map>
#include <vector>

#include "pqs/covers.hpp"
#include "pqs/rational.hpp"

namespace pqs {

// Cyclic quotient singularity 1/n(1,a) in normal form (a <= a^-1 mod n).
// n == 1 would be a smooth point and is rejected.
struct CyclicQuotientType {
  long long n = 0;
  long long a = 0;

  friend auto operator<=>(const CyclicQuotientType&, const CyclicQuotientType&) = default;
};

CyclicQuotientType normalize_type(long long n, long long a);

// Hirzebruch-Jung continued fraction n/a = b1 - 1/(b2 - 1/(...)), all b_i >= 2.
std::vector<long long> hj_expansion(long long n, long long a);

// Exceptional chain of the minimal resolution: self-intersections -b_i and
// the discrepancies solving the adjunction system against the intersection
// matrix (tridiagonal, diagonal -b_i, off-diagonal 1).
struct ExceptionalChain {
  std::vector<long long> self_intersections;  // -b_i
  std::vector<Rational> discrepancies;        // each in (-1, 0]
};

ExceptionalChain chain_data(const CyclicQuotientType& t);

// Per-singularity rationals feeding the surface invariants.
Rational k_invariant(const CyclicQuotientType& t);
Rational e_invariant(const CyclicQuotientType& t);
Rational B_invariant(const CyclicQuotientType& t);  // 2e + k
Rational D_invariant(const CyclicQuotientType& t);  // 3 sum(b_i - 2) + 2; 2 for A_n

// Multiset of singularity types with multiplicities.
using Basket = std::map<CyclicQuotientType, long long>;

struct BasketInvariants {
  Rational k, e, B, D;
  long long point_count = 0;  // total singular points, multiplicities included
};

BasketInvariants basket_invariants(const Basket& basket);

struct BasketResult {
  Basket basket;
  long long singular_points = 0;
  long long smooth_orbits = 0;  // diagonal orbits with trivial stabilizer (audit)
};

// Basket of (C1 x C2)/G from two spherical systems over the same group: for
// every branch pair (g_i, h_j) and every diagonal orbit on G/<g_i> x G/<h_j>
// with representative (1, r), the stabilizer <g_i> n r<h_j>r^-1 contributes a
// 1/n(1,a) point with n = ord(g_i)/gamma and a = ord(g_i) delta / (ord(h_j) gamma),
// where gamma is minimal with g_i^gamma in r<h_j>r^-1 and g_i^gamma = r h_j^delta r^-1.
BasketResult compute_basket(const SphericalSystem& sys1, const SphericalSystem& sys2);

}  // namespace pqs

#endif
