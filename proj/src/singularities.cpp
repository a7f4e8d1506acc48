#include "pqs/singularities.hpp"

#include <numeric>
#include <utility>

namespace pqs {

namespace {

long long mod_inverse(long long a, long long n) {
  // extended Euclid; gcd(a, n) == 1 assumed
  long long t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  long long inv = t % n;
  return inv < 0 ? inv + n : inv;
}

void check_type_args(long long n, long long a) {
  if (n < 2) fail_validation("singularity type requires n >= 2");
  if (a < 1 || a >= n) fail_validation("singularity type requires 1 <= a < n");
  if (std::gcd(a, n) != 1) fail_validation("singularity type requires gcd(a, n) = 1");
}

}  // namespace

CyclicQuotientType normalize_type(long long n, long long a) {
  check_type_args(n, a);
  long long inv = mod_inverse(a, n);
  return CyclicQuotientType{n, std::min(a, inv)};
}

std::vector<long long> hj_expansion(long long n, long long a) {
  check_type_args(n, a);
  std::vector<long long> out;
  while (a > 0) {
    long long b = (n + a - 1) / a;  // ceil(n/a)
    out.push_back(b);
    long long r = b * a - n;  // 0 <= r < a; next fraction is a/r
    n = a;
    a = r;
  }
  return out;
}

ExceptionalChain chain_data(const CyclicQuotientType& t) {
  std::vector<long long> b = hj_expansion(t.n, t.a);
  const int len = static_cast<int>(b.size());
  ExceptionalChain chain;
  chain.self_intersections.reserve(len);
  for (long long bi : b) chain.self_intersections.push_back(-bi);

  // Solve M d = rhs with M tridiagonal (-b_i on the diagonal, 1 off it) and
  // rhs_i = b_i - 2 (adjunction K.E_i = b_i - 2). Thomas algorithm, exact.
  std::vector<Rational> diag(len), rhs(len);
  for (int i = 0; i < len; ++i) {
    diag[i] = Rational(-b[i]);
    rhs[i] = Rational(b[i] - 2);
  }
  for (int i = 1; i < len; ++i) {
    Rational w = Rational(1) / diag[i - 1];
    diag[i] -= w;  // subdiagonal and superdiagonal entries are 1
    rhs[i] -= w * rhs[i - 1];
  }
  chain.discrepancies.assign(len, Rational(0));
  chain.discrepancies[len - 1] = rhs[len - 1] / diag[len - 1];
  for (int i = len - 2; i >= 0; --i)
    chain.discrepancies[i] = (rhs[i] - chain.discrepancies[i + 1]) / diag[i];

  for (const Rational& d : chain.discrepancies)
    if (d <= Rational(-1) || d > Rational(0))
      fail_inconsistency("discrepancy out of (-1, 0]");
  return chain;
}

Rational k_invariant(const CyclicQuotientType& t) {
  long long a_inv = mod_inverse(t.a, t.n);
  Rational sum = 0;
  for (long long b : hj_expansion(t.n, t.a)) sum += Rational(b - 2);
  return Rational(-2) + Rational(2 + t.a + a_inv, t.n) + sum;
}

Rational e_invariant(const CyclicQuotientType& t) {
  long long len = static_cast<long long>(hj_expansion(t.n, t.a).size());
  return Rational(len + 1) - Rational(1, t.n);
}

Rational B_invariant(const CyclicQuotientType& t) {
  return Rational(2) * e_invariant(t) + k_invariant(t);
}

Rational D_invariant(const CyclicQuotientType& t) {
  Rational sum = 0;
  for (long long b : hj_expansion(t.n, t.a)) sum += Rational(b - 2);
  return Rational(3) * sum + Rational(2);
}

BasketInvariants basket_invariants(const Basket& basket) {
  BasketInvariants inv;
  for (const auto& [type, mult] : basket) {
    Rational m(mult);
    inv.k += m * k_invariant(type);
    inv.e += m * e_invariant(type);
    inv.B += m * B_invariant(type);
    inv.D += m * D_invariant(type);
    inv.point_count += mult;
  }
  return inv;
}

BasketResult compute_basket(const SphericalSystem& sys1, const SphericalSystem& sys2) {
  if (sys1.group != sys2.group &&
      sys1.group->elements() != sys2.group->elements())
    fail_validation("basket computation requires systems over the same group");
  const FiniteGroup& g = *sys1.group;

  BasketResult out;
  for (int gi : sys1.elements) {
    Subgroup a = subgroup_generated(g, {gi});
    const int ord_g = g.element_order(gi);
    for (int hj : sys2.elements) {
      Subgroup b = subgroup_generated(g, {hj});
      const int ord_h = g.element_order(hj);
      for (const DoubleCosetOrbit& orbit : double_coset_orbits(g, a, b)) {
        const int r = orbit.representative;
        // gamma: least positive power of g_i landing in r <h_j> r^-1
        int gamma = 0, pw = g.identity();
        for (int c = 1; c <= ord_g; ++c) {
          pw = g.mul(pw, gi);
          if (b.contains(g.conj(pw, r))) {  // r^-1 g_i^c r in <h_j>
            gamma = c;
            break;
          }
        }
        if (gamma == 0) fail_inconsistency("cyclic stabilizer search failed");
        long long n = ord_g / gamma;
        if (ord_g % gamma != 0) fail_inconsistency("gamma does not divide ord(g_i)");
        if (n == 1) {
          ++out.smooth_orbits;
          continue;
        }
        // delta: g_i^gamma = r h_j^delta r^-1, 1 <= delta <= ord(h_j)
        int target = g.conj(pw, r);  // r^-1 g_i^gamma r
        int delta = 0, hw = g.identity();
        for (int c = 1; c <= ord_h; ++c) {
          hw = g.mul(hw, hj);
          if (hw == target) {
            delta = c;
            break;
          }
        }
        if (delta == 0) fail_inconsistency("delta search failed");
        long long num = (long long)ord_g * delta;
        long long den = (long long)ord_h * gamma;
        if (num % den != 0) fail_inconsistency("singularity weight is not integral");
        long long weight = num / den;
        if (std::gcd(weight, n) != 1)
          fail_inconsistency("singularity weight not coprime to n");
        ++out.basket[normalize_type(n, weight)];
        ++out.singular_points;
      }
    }
  }
  return out;
}

}  // namespace pqs
