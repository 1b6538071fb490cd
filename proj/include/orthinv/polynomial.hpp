#ifndef ORTHINV_POLYNOMIAL_HPP
#define ORTHINV_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orthinv/monomial.hpp"
#include "orthinv/rings.hpp"

namespace orthinv {

// Sparse exact multivariate polynomial with coefficients in C.  Canonical:
// no zero coefficients are stored; equality is term-map equality.
template <class C>
class Polynomial {
 public:
  using TermMap = std::unordered_map<Monomial, C>;

  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(C c) {
    Polynomial p;
    p.add_term(monomial_one(), c);
    return p;
  }
  static Polynomial one() { return constant(CoeffOps<C>::one()); }
  static Polynomial term(Monomial m, C c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }
  static Polynomial var(const Variable& v) { return term(monomial_var(v), CoeffOps<C>::one()); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(Monomial m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient_of(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffOps<C>::zero() : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const C& c) const {
    Polynomial r;
    for (const auto& [m, tc] : terms_) r.add_term(m, tc * c);
    return r;
  }

  // Exact coefficientwise division by a scalar; throws NonDivisibleError on
  // the first coefficient that fails.
  Polynomial divexact_scalar(const C& c) const {
    Polynomial r;
    for (const auto& [m, tc] : terms_) r.terms_.emplace(m, coeff_divexact(tc, c));
    return r;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m->degree);
    return d;
  }

  // deg_i: maximum over terms of the total exponent of slot-i variables.
  std::uint32_t degree_in_slot(int slot) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree_in_slot(m, slot));
    return d;
  }

  int max_slot() const {
    int s = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m->factors) s = std::max(s, Variable::from_key(f.var).slot);
    return s;
  }

  bool is_multilinear(int m) const {
    for (const auto& [mono, c] : terms_)
      if (!monomial_is_multilinear(mono, m)) return false;
    return true;
  }

  // Sorted list of distinct variables appearing in the polynomial.
  std::vector<Variable> variables() const {
    std::vector<std::uint32_t> keys;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m->factors) keys.push_back(f.var);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Variable> vs;
    vs.reserve(keys.size());
    for (auto k : keys) vs.push_back(Variable::from_key(k));
    return vs;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> Polynomial<decltype(f(std::declval<C>()))> {
    Polynomial<decltype(f(std::declval<C>()))> r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  // Terms sorted graded-lexicographically descending; canonical iteration
  // order for serialization and reports.
  std::vector<std::pair<Monomial, C>> sorted_terms() const {
    std::vector<std::pair<Monomial, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return monomial_cmp_grlex(a.first, b.first) > 0;
    });
    return v;
  }

 private:
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Substitution.  images maps Variable keys to polynomials over the target
// ring; embed lifts coefficients C -> C2.  When identity_on_missing is false
// a variable without an image raises MissingImageError; otherwise it maps to
// itself.
template <class C2, class C, class Embed>
Polynomial<C2> substitute_mapped(const Polynomial<C>& p,
                                 const std::unordered_map<std::uint32_t, Polynomial<C2>>& images,
                                 Embed&& embed, bool identity_on_missing = false) {
  auto image_of = [&](std::uint32_t key) -> Polynomial<C2> {
    auto it = images.find(key);
    if (it != images.end()) return it->second;
    if (!identity_on_missing)
      throw MissingImageError("no image for variable " + Variable::from_key(key).str());
    return Polynomial<C2>::var(Variable::from_key(key));
  };
  Polynomial<C2> result;
  for (const auto& [mono, c] : p.terms()) {
    Polynomial<C2> t = Polynomial<C2>::constant(embed(c));
    for (const auto& f : mono->factors) {
      Polynomial<C2> img = image_of(f.var);
      for (std::uint32_t e = 0; e < f.exp; ++e) t = t * img;
    }
    result += t;
  }
  return result;
}

// Same-ring substitution.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& p,
                         const std::unordered_map<std::uint32_t, Polynomial<C>>& images,
                         bool identity_on_missing = false) {
  return substitute_mapped<C>(p, images, [](const C& c) { return c; }, identity_on_missing);
}

template <class C>
Polynomial<ParamPoly<C>> lift_to_param(const Polynomial<C>& p) {
  return p.map_coeffs([](const C& c) { return ParamPoly<C>::constant(c); });
}

inline Polynomial<Gf2> reduce_mod2(const Polynomial<Int>& p) {
  return p.map_coeffs([](const Int& c) { return coeff_mod2(c); });
}

inline Polynomial<ParamPoly<Gf2>> reduce_mod2(const Polynomial<ParamPoly<Int>>& p) {
  return p.map_coeffs([](const ParamPoly<Int>& c) { return coeff_mod2(c); });
}

// ---------------------------------------------------------------------------
// Multihomogeneous components.

// Components by total degree in the z variables, ordered by z-degree
// ascending.  Empty list for the zero polynomial.
template <class C>
std::vector<Polynomial<C>> components_by_z_degree(const Polynomial<C>& p) {
  std::map<std::uint32_t, Polynomial<C>> buckets;
  for (const auto& [m, c] : p.terms()) buckets[monomial_degree_z(m)].add_term(m, c);
  std::vector<Polynomial<C>> out;
  out.reserve(buckets.size());
  for (auto& [deg, comp] : buckets) out.push_back(std::move(comp));
  return out;
}

// Components by slot multidegree vector (slots 1..m), ordered by the
// multidegree vector lexicographically ascending.
template <class C>
std::vector<Polynomial<C>> components_by_slot_multidegree(const Polynomial<C>& p, int m) {
  std::map<std::vector<std::uint32_t>, Polynomial<C>> buckets;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<std::uint32_t> key(static_cast<std::size_t>(m), 0);
    for (const auto& f : mono->factors) {
      int slot = Variable::from_key(f.var).slot;
      if (slot >= 1 && slot <= m) key[static_cast<std::size_t>(slot - 1)] += f.exp;
    }
    buckets[key].add_term(mono, c);
  }
  std::vector<Polynomial<C>> out;
  out.reserve(buckets.size());
  for (auto& [key, comp] : buckets) out.push_back(std::move(comp));
  return out;
}

}  // namespace orthinv

#endif
