#include "orthinv/quadratic.hpp"

namespace orthinv {

Polynomial<Int> quadratic_form(const QuadraticSpace& space, int slot) {
  Polynomial<Int> q;
  for (int r = 1; r <= space.nu; ++r)
    q.add_term(monomial_mul(monomial_var(Variable::x(r, slot)), monomial_var(Variable::y(r, slot))),
               Int(1));
  if (space.odd) q.add_term(monomial_var(Variable::z(slot), 2), Int(1));
  return q;
}

Polynomial<Int> bilinear_form(const QuadraticSpace& space, int i, int j) {
  Polynomial<Int> b;
  for (int r = 1; r <= space.nu; ++r) {
    b.add_term(monomial_mul(monomial_var(Variable::x(r, i)), monomial_var(Variable::y(r, j))),
               Int(1));
    b.add_term(monomial_mul(monomial_var(Variable::y(r, i)), monomial_var(Variable::x(r, j))),
               Int(1));
  }
  if (space.odd)
    b.add_term(monomial_mul(monomial_var(Variable::z(i)), monomial_var(Variable::z(j))), Int(2));
  return b;
}

Polynomial<Int> determinant_d(const QuadraticSpace& space, const std::vector<int>& slots) {
  if (static_cast<int>(slots.size()) != space.n)
    throw WrongArityError("determinant needs exactly " + std::to_string(space.n) + " slots, got " +
                          std::to_string(slots.size()));
  std::vector<std::vector<Polynomial<Int>>> m(static_cast<std::size_t>(space.n));
  for (int row = 0; row < space.n; ++row) {
    m[static_cast<std::size_t>(row)].resize(slots.size());
    for (std::size_t col = 0; col < slots.size(); ++col) {
      Variable v = space.coordinates(slots[col])[static_cast<std::size_t>(row)];
      m[static_cast<std::size_t>(row)][col] = Polynomial<Int>::var(v);
    }
  }
  return poly_matrix_det(m);
}

}  // namespace orthinv
