#include "pqs/invariants.hpp"

#include <future>

namespace pqs {

namespace {

Rational euler_term(long long g1, long long g2, long long group_order, long long mult) {
  return Rational(mult * (g1 - 1) * (g2 - 1), group_order);
}

}  // namespace

std::pair<long long, long long> chern_numbers(long long g1, long long g2,
                                              long long group_order, const Basket& basket) {
  BasketInvariants b = basket_invariants(basket);
  Rational k2 = euler_term(g1, g2, group_order, 8) - b.k;
  Rational c2 = euler_term(g1, g2, group_order, 4) + b.e;
  if (!k2.is_integer() || !c2.is_integer())
    fail_inconsistency("Chern numbers are not integral (basket inconsistent with cover data): K^2 = " +
                       k2.str() + ", c2 = " + c2.str());
  return {k2.as_integer(), c2.as_integer()};
}

long long k_minus_e_squared(long long g1, long long g2, long long group_order,
                            const Basket& basket) {
  BasketInvariants b = basket_invariants(basket);
  Rational v = euler_term(g1, g2, group_order, 8) - b.k - b.D;
  if (!v.is_integer())
    fail_inconsistency("(K-E)^2 is not integral: " + v.str());
  return v.as_integer();
}

SurfaceInvariants surface_invariants(const SphericalSystem& sys1, const SphericalSystem& sys2,
                                     long long quotient_genus1, long long quotient_genus2) {
  SurfaceInvariants inv;
  inv.g1 = genus_of_cover(sys1);
  inv.g2 = genus_of_cover(sys2);
  inv.group_order = sys1.group->order();

  BasketResult basket = compute_basket(sys1, sys2);
  inv.basket = basket.basket;
  inv.singular_points = basket.singular_points;

  auto [k2, c2] = chern_numbers(inv.g1, inv.g2, inv.group_order, inv.basket);
  inv.KX2 = k2;
  inv.c2 = c2;
  if ((inv.KX2 + inv.c2) % 12 != 0)
    fail_inconsistency("Noether integrality failed: K^2 + c2 = " +
                       std::to_string(inv.KX2 + inv.c2));
  inv.chi = (inv.KX2 + inv.c2) / 12;
  inv.q = quotient_genus1 + quotient_genus2;
  inv.pg = inv.chi - 1 + inv.q;
  inv.h11 = inv.c2 - 2 + 4 * inv.q - 2 * inv.pg;
  inv.KminusE2 = k_minus_e_squared(inv.g1, inv.g2, inv.group_order, inv.basket);
  inv.criterion_positive = inv.KminusE2 > 0;
  return inv;
}

TwistReport twist_report(const std::vector<SphericalSystem>& systems1,
                         const std::vector<SphericalSystem>& systems2,
                         long long quotient_genus1, long long quotient_genus2,
                         int threads) {
  if (systems1.empty() || systems2.empty())
    fail_validation("twist report requires nonempty system lists");
  TwistReport rep;
  const std::size_t n1 = systems1.size(), n2 = systems2.size();
  rep.entries.assign(n1, std::vector<SurfaceInvariants>(n2));

  auto compute_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n2; ++j)
      rep.entries[i][j] =
          surface_invariants(systems1[i], systems2[j], quotient_genus1, quotient_genus2);
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < n1; ++i) compute_row(i);
  } else {
    // Row partition; results land in preallocated slots, so the merge is
    // deterministic regardless of scheduling.
    std::vector<std::future<void>> futures;
    for (std::size_t i = 0; i < n1; ++i)
      futures.push_back(std::async(std::launch::async, compute_row, i));
    for (auto& f : futures) f.get();
  }

  rep.min_k_minus_e2 = rep.entries[0][0].KminusE2;
  rep.all_positive = true;
  rep.numerically_constant = true;
  const auto& first = rep.entries[0][0];
  for (const auto& row : rep.entries) {
    for (const auto& e : row) {
      rep.min_k_minus_e2 = std::min(rep.min_k_minus_e2, e.KminusE2);
      rep.all_positive = rep.all_positive && e.criterion_positive;
      rep.numerically_constant =
          rep.numerically_constant && e.KX2 == first.KX2 && e.c2 == first.c2 &&
          e.pg == first.pg && e.h11 == first.h11 && e.KminusE2 == first.KminusE2;
    }
  }
  return rep;
}

}  // namespace pqs
