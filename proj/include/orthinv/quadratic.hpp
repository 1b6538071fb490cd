#ifndef ORTHINV_QUADRATIC_HPP
#define ORTHINV_QUADRATIC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "orthinv/polynomial.hpp"

namespace orthinv {

// The standard quadratic space of dimension n >= 2:
//   q = x_1 y_1 + ... + x_nu y_nu            (n = 2 nu)
//   q = x_1 y_1 + ... + x_nu y_nu + z^2      (n = 2 nu + 1)
struct QuadraticSpace {
  int n = 0;
  int nu = 0;
  bool odd = false;

  static QuadraticSpace of_dim(int n) {
    if (n < 2) throw UnsupportedDimensionError("dimension must be >= 2, got " + std::to_string(n));
    QuadraticSpace s;
    s.n = n;
    s.nu = n / 2;
    s.odd = (n % 2) != 0;
    return s;
  }

  // Coordinate basis order x_1, y_1, ..., x_nu, y_nu (, z); fixes row order
  // for determinants and the letter indexing used by the solver.
  std::vector<Variable> coordinates(int slot) const {
    std::vector<Variable> cs;
    cs.reserve(static_cast<std::size_t>(n));
    for (int r = 1; r <= nu; ++r) {
      cs.push_back(Variable::x(r, slot));
      cs.push_back(Variable::y(r, slot));
    }
    if (odd) cs.push_back(Variable::z(slot));
    return cs;
  }
};

// Q^(i) = q(v^(i)) over Z.
Polynomial<Int> quadratic_form(const QuadraticSpace& space, int slot);

// B^(ij) = beta(v^(i), v^(j)) over Z; symmetric, includes 2 z^(i) z^(j) for
// odd n.
Polynomial<Int> bilinear_form(const QuadraticSpace& space, int i, int j);

// D^(i_1..i_n): determinant of the matrix with columns v^(i_1), ..., v^(i_n)
// in the fixed row order above.  Throws WrongArityError unless exactly n
// slots are given.
Polynomial<Int> determinant_d(const QuadraticSpace& space, const std::vector<int>& slots);

// Skew-symmetric matrix of polynomials: only the strict upper triangle is
// stored; the diagonal is zero and the lower triangle the negated mirror.
template <class C>
class SkewPolyMatrix {
 public:
  explicit SkewPolyMatrix(int size) : size_(size) {
    if (size < 0 || size % 2 != 0)
      throw WrongArityError("skew matrix size must be even, got " + std::to_string(size));
    upper_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  }

  int size() const { return size_; }

  void set_upper(int i, int j, Polynomial<C> p) {
    if (!(0 <= i && i < j && j < size_)) throw WrongArityError("set_upper expects i < j");
    upper_[static_cast<std::size_t>(i) * size_ + j] = std::move(p);
  }

  // Signed entry: M[i][j] = upper(i,j) for i<j, -upper(j,i) for i>j, 0 on the
  // diagonal.
  Polynomial<C> entry(int i, int j) const {
    if (i == j) return Polynomial<C>::zero();
    if (i < j) return upper_[static_cast<std::size_t>(i) * size_ + j];
    return -upper_[static_cast<std::size_t>(j) * size_ + i];
  }

  const Polynomial<C>& upper(int i, int j) const {
    return upper_[static_cast<std::size_t>(i) * size_ + j];
  }

 private:
  int size_;
  std::vector<Polynomial<C>> upper_;
};

// Pfaffian by expansion along the first remaining row, memoized on the index
// subset.  Pf of the empty matrix is 1, and Pf(M)^2 = det(M).
template <class C>
Polynomial<C> pfaffian(const SkewPolyMatrix<C>& m) {
  if (m.size() == 0) return Polynomial<C>::one();
  std::map<std::uint32_t, Polynomial<C>> memo;
  std::uint32_t full = (m.size() >= 32) ? ~0u : ((1u << m.size()) - 1u);
  if (m.size() > 30) throw TooLargeError("pfaffian limited to size 30");

  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial<C> {
    if (mask == 0) return Polynomial<C>::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int a = __builtin_ctz(mask);
    Polynomial<C> acc;
    int sign = 1;
    for (int b = a + 1; b < m.size(); ++b) {
      if (!(mask & (1u << b))) continue;
      Polynomial<C> sub = self(self, mask & ~(1u << a) & ~(1u << b));
      Polynomial<C> contrib = m.entry(a, b) * sub;
      acc += (sign > 0) ? contrib : -contrib;
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, full);
}

// Determinant of a general square polynomial matrix by cofactor expansion
// with memoization on the column subset.  Used as the independent companion
// of the Pfaffian (Pf^2 = det) and by determinant_d.
template <class C>
Polynomial<C> poly_matrix_det(const std::vector<std::vector<Polynomial<C>>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Polynomial<C>::one();
  if (n > 30) throw TooLargeError("determinant limited to size 30");
  std::map<std::uint32_t, Polynomial<C>> memo;

  // Row processed = n - popcount(mask); mask = unused columns.
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial<C> {
    if (mask == 0) return Polynomial<C>::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(mask);
    Polynomial<C> acc;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
        Polynomial<C> contrib =
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
            self(self, mask & ~(1u << col));
        acc += (sign > 0) ? contrib : -contrib;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n >= 32) ? ~0u : ((1u << n) - 1u));
}

// det(M) of a skew polynomial matrix, via the generic cofactor determinant.
template <class C>
Polynomial<C> skew_matrix_det(const SkewPolyMatrix<C>& m) {
  std::vector<std::vector<Polynomial<C>>> rows(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.size()));
    for (int j = 0; j < m.size(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.entry(i, j);
  }
  return poly_matrix_det(rows);
}

}  // namespace orthinv

#endif
