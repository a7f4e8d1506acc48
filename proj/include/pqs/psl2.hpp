#ifndef PQS_PSL2_HPP
#define PQS_PSL2_HPP

#include <array>

#include "pqs/permgroup.hpp"

namespace pqs {

// 2x2 matrix over F_q, row-major: {{a, b}, {c, d}}.
using Mat2 = std::array<std::array<long long, 2>, 2>;

// PSL2(F_q) acting on the projective line P^1(F_q), for an odd prime q.
// Points 0..q-1 are [x : 1]; point q is infinity = [1 : 0]. Matrices act on
// row vectors, [x : y] . M = [xa + yc : xb + yd], so the matrix-to-permutation
// map is a homomorphism under the apply-left-then-right composition.
class Psl2 {
public:
  explicit Psl2(long long q);

  long long q() const { return q_; }
  const FiniteGroup& group() const { return group_; }

  // Rejects non-invertible matrices and matrices whose determinant is not a
  // nonzero square mod q (i.e. elements of PGL2 outside PSL2).
  Permutation permutation_of(const Mat2& m) const;
  int element_of(const Mat2& m) const { return group_.index_of(permutation_of(m)); }

  // Conjugation by a fixed determinant-nonsquare matrix; realizes the outer
  // automorphism of PSL2(F_q) as a permutation of P^1.
  const Permutation& outer_automorphism() const { return outer_; }
  int apply_outer(int g) const;  // image of element g under the outer automorphism

private:
  static FiniteGroup build_group(long long q);

  long long q_ = 0;
  FiniteGroup group_;
  Permutation outer_;
};

}  // namespace pqs

#endif
