#include "orthinv/generators.hpp"

namespace orthinv {

std::string group_name(Group g) { return g == Group::O ? "O" : "SO"; }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Invariant: return "invariant";
    case Verdict::AntiInvariant: return "anti-invariant";
    case Verdict::Neither: return "neither";
  }
  return "?";
}

namespace {

using Gen = Generator<Int>;
using Form = Gen::LinForm;

ParamPoly<Int> lam(int pow, long coef) { return ParamPoly<Int>::lambda(pow, Int(coef)); }

Coord cx(int r) { return Coord{VarKind::X, r}; }
Coord cy(int r) { return Coord{VarKind::Y, r}; }
Coord cz() { return Coord{VarKind::Z, 0}; }

// Asserts q o lhs = q o rhs symbolically; definitional orthogonality.
void assert_preserves_q(const QuadraticSpace& space, const Gen& gen) {
  Polynomial<Int> q = quadratic_form(space, 1);
  Polynomial<ParamPoly<Int>> left = apply_side<Int>(q, gen.lhs);
  Polynomial<ParamPoly<Int>> right =
      gen.two_sided() ? apply_side<Int>(q, gen.rhs) : lift_to_param(q);
  if (left != right)
    throw Error("internal: generator " + gen.name + " does not preserve the quadratic form");
}

std::vector<Gen> build_family_int(const QuadraticSpace& space, Group group, GroupChar chr) {
  const int nu = space.nu;
  std::vector<Gen> fam;

  auto add = [&](Gen g) {
    assert_preserves_q(space, g);
    fam.push_back(std::move(g));
  };

  // Formal torus relations p(L x_r, y_r) = p(x_r, L y_r), one per pair;
  // these encode invariance under diag(c, 1/c) on pair r.
  for (int r = 1; r <= nu; ++r) {
    Gen g;
    g.name = "torus-" + std::to_string(r);
    g.lhs[cx(r)] = Form{{cx(r), lam(1, 1)}};
    g.rhs[cy(r)] = Form{{cy(r), lam(1, 1)}};
    add(std::move(g));
  }

  // Transpositions of hyperbolic pairs (x_a,y_a) <-> (x_b,y_b); rank(g-1)=2,
  // determinant 1: special in both characteristics.
  for (int a = 1; a <= nu; ++a)
    for (int b = a + 1; b <= nu; ++b) {
      Gen g;
      g.name = "pair-swap-" + std::to_string(a) + std::to_string(b);
      g.lhs[cx(a)] = Form{{cx(b), lam(0, 1)}};
      g.lhs[cy(a)] = Form{{cy(b), lam(0, 1)}};
      g.lhs[cx(b)] = Form{{cx(a), lam(0, 1)}};
      g.lhs[cy(b)] = Form{{cy(a), lam(0, 1)}};
      add(std::move(g));
    }

  // Eichler transvections, one per long root: e_a + e_b, -(e_a + e_b), and
  // +-(e_a - e_b) via ordered pairs.
  for (int a = 1; a <= nu; ++a)
    for (int b = a + 1; b <= nu; ++b) {
      {
        Gen g;
        g.name = "transvect-yy-" + std::to_string(a) + std::to_string(b);
        g.lhs[cy(a)] = Form{{cy(a), lam(0, 1)}, {cx(b), lam(1, 1)}};
        g.lhs[cy(b)] = Form{{cy(b), lam(0, 1)}, {cx(a), lam(1, -1)}};
        add(std::move(g));
      }
      {
        Gen g;
        g.name = "transvect-xx-" + std::to_string(a) + std::to_string(b);
        g.lhs[cx(a)] = Form{{cx(a), lam(0, 1)}, {cy(b), lam(1, 1)}};
        g.lhs[cx(b)] = Form{{cx(b), lam(0, 1)}, {cy(a), lam(1, -1)}};
        add(std::move(g));
      }
    }
  for (int a = 1; a <= nu; ++a)
    for (int b = 1; b <= nu; ++b) {
      if (a == b) continue;
      Gen g;
      g.name = "transvect-xy-" + std::to_string(a) + std::to_string(b);
      g.lhs[cx(a)] = Form{{cx(a), lam(0, 1)}, {cx(b), lam(1, 1)}};
      g.lhs[cy(b)] = Form{{cy(b), lam(0, 1)}, {cy(a), lam(1, -1)}};
      add(std::move(g));
    }

  // Short-root transvections mixing z, both signs per pair.
  if (space.odd) {
    for (int r = 1; r <= nu; ++r) {
      {
        Gen g;
        g.name = "transvect-zx-" + std::to_string(r);
        g.lhs[cz()] = Form{{cz(), lam(0, 1)}, {cx(r), lam(1, 1)}};
        g.lhs[cy(r)] = Form{{cy(r), lam(0, 1)}, {cz(), lam(1, -2)}, {cx(r), lam(2, -1)}};
        add(std::move(g));
      }
      {
        Gen g;
        g.name = "transvect-zy-" + std::to_string(r);
        g.lhs[cz()] = Form{{cz(), lam(0, 1)}, {cy(r), lam(1, 1)}};
        g.lhs[cx(r)] = Form{{cx(r), lam(0, 1)}, {cz(), lam(1, -2)}, {cy(r), lam(2, -1)}};
        add(std::move(g));
      }
    }
  }

  // Single-pair swap x_1 <-> y_1: the non-special component representative.
  // Characteristic 0: determinant -1, outside SO in every dimension.
  // Characteristic 2: rank(g-1) = 1, outside SO for even n; for odd n the
  // group is connected and the family above already suffices.
  const bool include_swap =
      group == Group::O && (chr == GroupChar::Zero || !space.odd);
  if (include_swap) {
    Gen g;
    g.name = "swap-1";
    g.component = Component::NonSpecial;
    g.lhs[cx(1)] = Form{{cy(1), lam(0, 1)}};
    g.lhs[cy(1)] = Form{{cx(1), lam(0, 1)}};
    add(std::move(g));
  }

  return fam;
}

}  // namespace

std::vector<Generator<Int>> generator_family_int(const QuadraticSpace& space, Group group) {
  return build_family_int(space, group, GroupChar::Zero);
}

std::vector<Generator<Gf2>> generator_family_gf2(const QuadraticSpace& space, Group group) {
  std::vector<Generator<Int>> zfam = build_family_int(space, group, GroupChar::Two);
  std::vector<Generator<Gf2>> out;
  out.reserve(zfam.size());
  for (const auto& g : zfam) {
    Generator<Gf2> r;
    r.name = g.name;
    r.component = g.component;
    auto convert = [](const std::map<Coord, Gen::LinForm>& side) {
      std::map<Coord, Generator<Gf2>::LinForm> res;
      for (const auto& [c, form] : side) {
        Generator<Gf2>::LinForm f2;
        for (const auto& [target, coef] : form) {
          ParamPoly<Gf2> c2 = coeff_mod2(coef);
          if (!c2.is_zero()) f2.emplace_back(target, std::move(c2));
        }
        res.emplace(c, std::move(f2));
      }
      return res;
    };
    r.lhs = convert(g.lhs);
    r.rhs = convert(g.rhs);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace orthinv
