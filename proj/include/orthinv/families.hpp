#ifndef ORTHINV_FAMILIES_HPP
#define ORTHINV_FAMILIES_HPP

#include <string>
#include <vector>

#include "orthinv/quadratic.hpp"

namespace orthinv {

// The three families of multilinear invariants.
//   G: Pf of the full Gram matrix of B's divided by 2^(mu-nu); O(n)-invariant.
//   H: the shuffle sum of D * Pf divided by 2^(mu-nu); SO(n)-invariant.
//   F: half the difference of the two; SO(n)-invariant, n and m even.
enum class Family { G, H, F };

struct FamilySpec {
  Family family;
  int n = 0;
  int m = 0;

  int nu() const { return n / 2; }
  int mu() const { return m / 2; }
};

std::string family_name(Family f);

// Throws InvalidSpecError unless the spec satisfies the family constraints:
// G: m even, m >= 2 nu;  H: m >= n, m == n (mod 2);  F: m >= n >= 4 even.
void validate_family_spec(const FamilySpec& spec);

// Sign of a multilinear monomial: the sign of the permutation of 1..m read
// off by concatenating the ascending slot blocks (z block first, then the
// x/y block of each pair in pair order).  Throws NotMultilinearError.
int monomial_sign(Monomial rho, int m);

// Pfaffian of the skew matrix whose upper entries are B^(slots[a] slots[b]).
// Throws ArityParityError for an odd number of slots.
Polynomial<Int> build_pf_gram(const QuadraticSpace& space, const std::vector<int>& slots);

// Sum over (n, m-n)-shuffles pi of sgn(pi) D^(pi(1..n)) Pf^(pi(n+1..m)).
// Throws ArityParityError unless m >= n and m == n (mod 2).
Polynomial<Int> build_db_sum(const QuadraticSpace& space, int m);

// Algebraic route: Pfaffian / shuffle-sum expansion followed by the exact
// 2-power division.  A NonDivisibleError escaping from here falsifies the
// divisibility claim and is never caught internally.
Polynomial<Int> construct_int(const FamilySpec& spec);
Polynomial<Gf2> construct_mod2(const FamilySpec& spec);

// Combinatorial route: direct enumeration of block profiles and alternating
// letter assignments with closed-form coefficients (integer lift) or the
// reduced membership description (mod 2).  Independent of the algebraic
// route; the two must agree exactly.
Polynomial<Int> construct_combinatorial_int(const FamilySpec& spec);
Polynomial<Gf2> construct_combinatorial_mod2(const FamilySpec& spec);

// Whether (family, n, m) is inside the range of the indecomposability
// theorems: G with even n needs m > n >= 2, with odd n needs m >= n >= 3;
// H follows the odd-n theorem or, for even n, the g = h identity with
// m > n; F needs m >= n >= 4 both even.
bool in_theorem_range(const FamilySpec& spec);

}  // namespace orthinv

#endif
