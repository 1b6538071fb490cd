#ifndef ORTHINV_GENERATORS_HPP
#define ORTHINV_GENERATORS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orthinv/quadratic.hpp"

namespace orthinv {

enum class Group { O, SO };
enum class GroupChar { Zero, Two };
enum class Component { Special, NonSpecial };

std::string group_name(Group g);

// A slot-generic coordinate: x_r, y_r, z (t/s never occur in group elements).
struct Coord {
  VarKind kind = VarKind::X;
  int pair = 0;

  std::uint32_t key() const { return Variable(kind, pair, 1).key() & 0xFFFFu; }
  Variable at_slot(int slot) const { return Variable(kind, pair, slot); }
  friend bool operator<(const Coord& a, const Coord& b) { return a.key() < b.key(); }
};

// A symbolic group element given by coordinate images that are linear forms
// with coefficients in R[L].  The same map acts on every slot.  Generators
// may be two-sided: the pair (lhs, rhs) encodes the relation
// p o lhs = p o rhs, which expresses invariance under elements like
// diag(L, 1/L) without ever forming 1/L.  One-sided generators have an
// identity rhs.
template <class C>
struct Generator {
  using LinForm = std::vector<std::pair<Coord, ParamPoly<C>>>;

  std::string name;
  Component component = Component::Special;
  std::map<Coord, LinForm> lhs;
  std::map<Coord, LinForm> rhs;  // empty = identity

  bool two_sided() const { return !rhs.empty(); }
};

// Applies one side of a generator to p as a substitution into the
// L-extended ring.  Coordinates without an image map to themselves.
template <class C>
Polynomial<ParamPoly<C>> apply_side(const Polynomial<C>& p,
                                    const std::map<Coord, typename Generator<C>::LinForm>& side) {
  std::unordered_map<std::uint32_t, Polynomial<ParamPoly<C>>> images;
  for (const Variable& v : p.variables()) {
    Coord c{v.kind, v.pair};
    auto it = side.find(c);
    if (it == side.end()) continue;
    Polynomial<ParamPoly<C>> img;
    for (const auto& [target, coef] : it->second)
      img.add_term(monomial_var(target.at_slot(v.slot)), coef);
    images.emplace(v.key(), std::move(img));
  }
  return substitute_mapped<ParamPoly<C>>(
      p, images, [](const C& c) { return ParamPoly<C>::constant(c); },
      /*identity_on_missing=*/true);
}

// Generator families for O(n)/SO(n).  Every returned element preserves the
// quadratic form symbolically (asserted at construction).  The family
// contains, besides the members needed to distinguish O from SO, one
// root-subgroup representative with a formal parameter for every root of the
// isometry group, plus the formal torus relations; invariance under the
// family is therefore equivalent to invariance under the full group over an
// algebraically closed field.
std::vector<Generator<Int>> generator_family_int(const QuadraticSpace& space, Group group);
std::vector<Generator<Gf2>> generator_family_gf2(const QuadraticSpace& space, Group group);

enum class Verdict { Invariant, AntiInvariant, Neither };

std::string verdict_name(Verdict v);

// Exact verdict for one generator: lhs(p) - rhs(p) == 0 gives Invariant,
// lhs(p) + rhs(p) == 0 gives AntiInvariant, otherwise Neither.
template <class C>
Verdict check_invariance(const Polynomial<C>& p, const Generator<C>& gen) {
  Polynomial<ParamPoly<C>> left = apply_side<C>(p, gen.lhs);
  Polynomial<ParamPoly<C>> right =
      gen.two_sided() ? apply_side<C>(p, gen.rhs) : lift_to_param(p);

  // Images have L-degree <= 2 per coordinate, so sigma(p) stays within
  // L-degree 2 deg(p).
  const int bound = 2 * static_cast<int>(p.total_degree());
  for (const auto& [mono, c] : left.terms())
    if (c.degree() > bound) throw Error("internal: L-degree bound exceeded");

  if (left == right) return Verdict::Invariant;
  Polynomial<ParamPoly<C>> sum = left + right;
  if (sum.is_zero()) return Verdict::AntiInvariant;
  return Verdict::Neither;
}

template <class C>
std::vector<std::pair<std::string, Verdict>> check_invariance(
    const Polynomial<C>& p, const std::vector<Generator<C>>& family) {
  std::vector<std::pair<std::string, Verdict>> out;
  out.reserve(family.size());
  for (const auto& gen : family) out.emplace_back(gen.name, check_invariance(p, gen));
  return out;
}

}  // namespace orthinv

#endif
