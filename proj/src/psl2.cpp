#include "pqs/psl2.hpp"

namespace pqs {

namespace {

long long mod_norm(long long v, long long q) {
  v %= q;
  if (v < 0) v += q;
  return v;
}

long long pow_mod(long long b, long long e, long long q) {
  long long r = 1;
  b = mod_norm(b, q);
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Row-vector action of m on P^1(F_q): point t in 0..q-1 is [t : 1], q is [1 : 0].
Permutation mobius_permutation(const Mat2& m, long long q) {
  const long long a = mod_norm(m[0][0], q), b = mod_norm(m[0][1], q);
  const long long c = mod_norm(m[1][0], q), d = mod_norm(m[1][1], q);
  const int inf = static_cast<int>(q);
  std::vector<int> img(q + 1);
  auto point = [&](long long x, long long y) -> int {
    x %= q;
    y %= q;
    if (y == 0) return inf;
    long long yinv = pow_mod(y, q - 2, q);
    return static_cast<int>(x * yinv % q);
  };
  for (long long t = 0; t < q; ++t) img[t] = point(t * a % q + c, t * b % q + d);
  img[inf] = point(a, b);
  return Permutation(img);
}

}  // namespace

FiniteGroup Psl2::build_group(long long q) {
  if (!is_prime(q) || q == 2) fail_validation("psl2 requires an odd prime q");
  // Standard generators S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
  Permutation s = mobius_permutation({{{0, -1}, {1, 0}}}, q);
  Permutation t = mobius_permutation({{{1, 1}, {0, 1}}}, q);
  return FiniteGroup::from_generators(static_cast<int>(q + 1), {s, t});
}

Psl2::Psl2(long long q) : q_(q), group_(build_group(q)) {
  const long long expected = q * (q - 1) * (q + 1) / 2;
  if (group_.order() != expected)
    fail_inconsistency("PSL2 closure produced wrong order");
  // Smallest nonsquare gives a PGL2 \ PSL2 representative.
  long long nu = 2;
  while (pow_mod(nu, (q - 1) / 2, q) == 1) ++nu;
  outer_ = mobius_permutation({{{nu, 0}, {0, 1}}}, q);
}

Permutation Psl2::permutation_of(const Mat2& m) const {
  const long long a = mod_norm(m[0][0], q_), b = mod_norm(m[0][1], q_);
  const long long c = mod_norm(m[1][0], q_), d = mod_norm(m[1][1], q_);
  long long det = mod_norm(a * d - b * c, q_);
  if (det == 0) fail_validation("matrix is not invertible mod q");
  if (pow_mod(det, (q_ - 1) / 2, q_) != 1)
    fail_validation("matrix determinant is not a nonzero square mod q (not in PSL2)");
  return mobius_permutation({{{a, b}, {c, d}}}, q_);
}

int Psl2::apply_outer(int g) const {
  // w^-1 g w for the fixed PGL2 witness w.
  Permutation conj = outer_.inverse() * group_.element(g) * outer_;
  return group_.index_of(conj);
}

}  // namespace pqs
