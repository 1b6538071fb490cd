#ifndef ORTHINV_RINGS_HPP
#define ORTHINV_RINGS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "orthinv/errors.hpp"

namespace orthinv {

// Exact arbitrary-precision signed integer.  Backed by GMP; arithmetic never
// overflows at any input size.
using Int = mpz_class;

// The two-element field.
struct Gf2 {
  std::uint8_t v = 0;

  constexpr Gf2() = default;
  constexpr explicit Gf2(unsigned long x) : v(static_cast<std::uint8_t>(x & 1u)) {}

  friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(unsigned(a.v ^ b.v)); }
  friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return a + b; }
  friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(unsigned(a.v & b.v)); }
  friend constexpr Gf2 operator-(Gf2 a) { return a; }
  friend constexpr bool operator==(Gf2 a, Gf2 b) { return a.v == b.v; }
  friend constexpr bool operator!=(Gf2 a, Gf2 b) { return a.v != b.v; }
  Gf2& operator+=(Gf2 b) { v ^= b.v; return *this; }
  Gf2& operator*=(Gf2 b) { v &= b.v; return *this; }
};

// -------------------------------------------------------------------------
// Coefficient traits shared by all rings used as polynomial coefficients.

inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(Gf2 c) { return c.v == 0; }

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Int> {
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
};

template <>
struct CoeffOps<Gf2> {
  static Gf2 zero() { return Gf2(); }
  static Gf2 one() { return Gf2(1u); }
};

inline std::string coeff_str(const Int& c) { return c.get_str(); }
inline std::string coeff_str(Gf2 c) { return c.v ? "1" : "0"; }

// Exact division; throws NonDivisibleError when b does not divide a.
inline Int coeff_divexact(const Int& a, const Int& b) {
  if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw NonDivisibleError(coeff_str(a), coeff_str(b));
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Gf2 coeff_divexact(Gf2 a, Gf2 b) {
  if (b.v == 0) throw NonDivisibleError(coeff_str(a), coeff_str(b));
  return a;
}

// Canonical ring map Z -> F2.
inline Gf2 coeff_mod2(const Int& c) { return Gf2(mpz_odd_p(c.get_mpz_t()) ? 1u : 0u); }

// -------------------------------------------------------------------------
// R[L]: finitely supported univariate extension of a base ring by the formal
// parameter L (lambda).  L is never inverted.

inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

template <class C>
struct ParamPoly {
  // exponent of L -> nonzero base coefficient
  std::map<int, C> coeffs;

  ParamPoly() = default;
  static ParamPoly constant(C c) {
    ParamPoly p;
    if (!coeff_is_zero(c)) p.coeffs.emplace(0, std::move(c));
    return p;
  }
  static ParamPoly lambda(int exp = 1, C c = CoeffOps<C>::one()) {
    ParamPoly p;
    if (!coeff_is_zero(c)) p.coeffs.emplace(exp, std::move(c));
    return p;
  }

  bool is_zero() const { return coeffs.empty(); }
  // degree of the zero element is the -infinity sentinel
  int degree() const { return coeffs.empty() ? kNegInfDegree : coeffs.rbegin()->first; }

  void add_term(int exp, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = coeffs.emplace(exp, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) coeffs.erase(it);
    }
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [e, c] : b.coeffs) r.add_term(e, c);
    return r;
  }
  friend ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r;
    for (const auto& [e, c] : a.coeffs) r.coeffs.emplace(e, -c);
    return r;
  }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.coeffs)
      for (const auto& [eb, cb] : b.coeffs) r.add_term(ea + eb, ca * cb);
    return r;
  }
  ParamPoly& operator+=(const ParamPoly& b) { *this = *this + b; return *this; }
  ParamPoly& operator*=(const ParamPoly& b) { *this = *this * b; return *this; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
};

template <class C>
inline bool coeff_is_zero(const ParamPoly<C>& c) {
  return c.is_zero();
}

template <class C>
struct CoeffOps<ParamPoly<C>> {
  static ParamPoly<C> zero() { return ParamPoly<C>{}; }
  static ParamPoly<C> one() { return ParamPoly<C>::constant(CoeffOps<C>::one()); }
};

template <class C>
inline std::string coeff_str(const ParamPoly<C>& p) {
  if (p.coeffs.empty()) return "0";
  std::string s;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += coeff_str(it->second);
    if (it->first > 0) s += "*L^" + std::to_string(it->first);
  }
  return s;
}

// Exact univariate division via leading terms; throws when not exact.
template <class C>
inline ParamPoly<C> coeff_divexact(const ParamPoly<C>& a, const ParamPoly<C>& d) {
  if (d.is_zero()) throw NonDivisibleError(coeff_str(a), coeff_str(d));
  ParamPoly<C> rem = a, q;
  const auto dlead = d.coeffs.rbegin();
  while (!rem.is_zero()) {
    const auto rlead = rem.coeffs.rbegin();
    if (rlead->first < dlead->first) throw NonDivisibleError(coeff_str(a), coeff_str(d));
    C c = coeff_divexact(rlead->second, dlead->second);
    int e = rlead->first - dlead->first;
    ParamPoly<C> t = ParamPoly<C>::lambda(e, c);
    q = q + t;
    rem = rem - t * d;
  }
  return q;
}

template <class C>
inline ParamPoly<Gf2> coeff_mod2_param(const ParamPoly<C>& p) {
  ParamPoly<Gf2> r;
  for (const auto& [e, c] : p.coeffs) r.add_term(e, coeff_mod2(c));
  return r;
}

inline ParamPoly<Gf2> coeff_mod2(const ParamPoly<Int>& p) { return coeff_mod2_param(p); }

}  // namespace orthinv

#endif
