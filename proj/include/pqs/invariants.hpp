#ifndef PQS_INVARIANTS_HPP
#define PQS_INVARIANTS_HPP

#include <vector>

#include "pqs/singularities.hpp"

namespace pqs {

// Invariants of the minimal resolution X of (C1 x C2)/G.
struct SurfaceInvariants {
  long long g1 = 0, g2 = 0;       // genera of C1, C2
  long long group_order = 0;
  Basket basket;
  long long singular_points = 0;
  long long KX2 = 0;              // K_X^2
  long long c2 = 0;               // c_2(X) = e(X)
  long long chi = 0;              // chi(O_X) = (K^2 + c2)/12
  long long q = 0;                // irregularity = g(C1/G) + g(C2/G)
  long long pg = 0;               // chi - 1 + q
  long long h11 = 0;              // c2 - 2 + 4q - 2 pg
  long long KminusE2 = 0;         // (K_X - E)^2
  bool criterion_positive = false;  // (K-E)^2 > 0; bigness assumes general type
};

// K^2 = 8(g1-1)(g2-1)/|G| - k(B),  c2 = 4(g1-1)(g2-1)/|G| + e(B).
// Throws inconsistency if either value fails to clear denominators.
std::pair<long long, long long> chern_numbers(long long g1, long long g2,
                                              long long group_order, const Basket& basket);

// (K_X - E)^2 = 8(g1-1)(g2-1)/|G| - k(B) - D(B).
long long k_minus_e_squared(long long g1, long long g2, long long group_order,
                            const Basket& basket);

// Full invariant set for a pair of spherical systems (quotient genera are
// supplied by the caller; for the product-quotient setup they are the genera
// of C_i/G, zero in all the cases of interest).
SurfaceInvariants surface_invariants(const SphericalSystem& sys1, const SphericalSystem& sys2,
                                     long long quotient_genus1 = 0,
                                     long long quotient_genus2 = 0);

struct TwistReport {
  std::vector<std::vector<SurfaceInvariants>> entries;  // [i][j] for (systems1[i], systems2[j])
  long long min_k_minus_e2 = 0;
  bool all_positive = false;
  bool numerically_constant = false;  // all entries share (K^2, c2, pg, h11, (K-E)^2)
};

TwistReport twist_report(const std::vector<SphericalSystem>& systems1,
                         const std::vector<SphericalSystem>& systems2,
                         long long quotient_genus1 = 0, long long quotient_genus2 = 0,
                         int threads = 1);

}  // namespace pqs

#endif
