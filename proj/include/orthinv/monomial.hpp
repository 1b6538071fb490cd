#ifndef ORTHINV_MONOMIAL_HPP
#define ORTHINV_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orthinv/variable.hpp"

namespace orthinv {

struct VarPow {
  std::uint32_t var;  // Variable::key()
  std::uint32_t exp;  // > 0
  friend bool operator==(const VarPow& a, const VarPow& b) {
    return a.var == b.var && a.exp == b.exp;
  }
};

// Immutable interned monomial.  Equality of handles is pointer equality,
// which keeps term maps cheap during large Pfaffian expansions.
struct MonomialData {
  std::uint64_t hash = 0;
  std::uint32_t degree = 0;
  std::vector<VarPow> factors;  // sorted by var key ascending, no zero exponents
};

using Monomial = const MonomialData*;

// Interns the canonical monomial with the given factors (sorted, merged,
// zero-exponent-free).  Unsorted input is accepted and canonicalized.
Monomial intern_monomial(std::vector<VarPow> factors);

Monomial monomial_one();
Monomial monomial_var(const Variable& v, std::uint32_t exp = 1);
Monomial monomial_mul(Monomial a, Monomial b);

// Graded-lexicographic comparison on the canonical variable order:
// returns <0, 0, >0 as a < b, a == b, a > b.
int monomial_cmp_grlex(Monomial a, Monomial b);

std::uint32_t monomial_degree_in_slot(Monomial m, int slot);
std::uint32_t monomial_degree_z(Monomial m);
std::uint32_t monomial_degree_xy(Monomial m);
std::uint32_t monomial_degree_s(Monomial m);

// Multilinear over slots 1..m: every exponent is 1 and every slot carries
// exactly one variable.
bool monomial_is_multilinear(Monomial mono, int m);

// Exponent of the given variable (0 when absent).
std::uint32_t monomial_exponent(Monomial m, const Variable& v);

std::string monomial_str(Monomial m);

}  // namespace orthinv

#endif
