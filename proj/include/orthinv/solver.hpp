#ifndef ORTHINV_SOLVER_HPP
#define ORTHINV_SOLVER_HPP

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "orthinv/families.hpp"
#include "orthinv/generators.hpp"
#include "orthinv/gf2.hpp"

namespace orthinv {

struct SolverConfig {
  // Ceiling on the multilinear monomial space dimension n^m.
  std::size_t ceiling = 16384;
};

// Bijection between multilinear x/y/z monomials over slots 1..m and words in
// the n-letter coordinate alphabet; index order equals the canonical
// monomial order (graded-lex descending).
class WordSpace {
 public:
  WordSpace(const QuadraticSpace& space, int m, const SolverConfig& config);

  const QuadraticSpace& space() const { return space_; }
  int m() const { return m_; }
  int letters() const { return space_.n; }
  std::size_t count() const { return count_; }

  // letter index of a coordinate: x_r -> 2(r-1), y_r -> 2(r-1)+1, z -> 2 nu
  Variable letter_var(int letter, int slot) const;
  int letter_of(const Variable& v) const;

  std::vector<int> word_at(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& word) const;

  Monomial monomial_at(std::size_t index) const;
  // Throws NotMultilinearError for anything that is not an m-slot
  // multilinear x/y/z monomial.
  std::size_t index_of_monomial(Monomial mono) const;

  Polynomial<Gf2> to_poly(const BitVec& v) const;
  BitVec to_vec(const Polynomial<Gf2>& p) const;

 private:
  QuadraticSpace space_;
  int m_;
  std::size_t count_;
};

struct InvariantBasis {
  int n = 0;
  int m = 0;
  Group group = Group::SO;
  std::vector<BitVec> vectors;  // reduced echelon rows over the word space
  std::vector<Polynomial<Gf2>> elements;

  std::size_t dim() const { return vectors.size(); }
};

struct Certificate {
  FamilySpec spec;
  Group group = Group::SO;
  bool in_theorem_range = false;
  std::size_t dim_invariant = 0;
  std::size_t dim_decomposable = 0;
  bool member = false;
  Polynomial<Gf2> witness;  // reduced residual, nonzero iff member == false
};

struct LemmaAudit {
  int n = 0;
  int m = 0;
  Group group = Group::SO;
  std::size_t dim = 0;
  int bound = 0;          // min(m, 2 nu) for odd n, min(mu, nu) for even n
  int min_achieved = 0;   // kInfinityMult when the basis is empty
  bool pass = false;
};

inline constexpr int kInfinityMult = std::numeric_limits<int>::max();

// Memoizes invariant bases and decomposable subspaces across (n, m, group).
class SolverCache {
 public:
  explicit SolverCache(SolverConfig config = {}) : config_(config) {}

  const SolverConfig& config() const { return config_; }

  // Basis of the full space of m-linear G-invariants: kernel of the stacked
  // constraints "coefficient of each L-power of sigma(p) - p" over all
  // family generators.  Throws TooLargeError when n^m exceeds the ceiling.
  const InvariantBasis& invariant_basis(int n, int m, Group group);

  // Row space spanned by all products of block invariants over proper set
  // partitions of {1..m}.  The group action preserves slot multidegree, so
  // an m-linear element of the subalgebra generated by lower-degree
  // invariants is a combination of such products: any product of
  // multihomogeneous invariants contributing to the m-linear part splits the
  // slot set, and each factor must be multilinear on its block.  This is the
  // finite reduction that makes indecomposability decidable here.
  const Echelon& decomposable_subspace(int n, int m, Group group);

  Certificate indecomposability_certificate(const FamilySpec& spec);

  LemmaAudit lemma_bound_audit(int n, int m, Group group);

  // [df, Theorem 4.9] shadow: the multilinear O-invariant space equals the
  // span of perfect-matching B-products.
  bool matching_span_equals_invariants(int n, int m);

 private:
  SolverConfig config_;
  std::map<std::tuple<int, int, Group>, std::unique_ptr<InvariantBasis>> bases_;
  std::map<std::tuple<int, int, Group>, std::unique_ptr<Echelon>> decomposables_;
};

// Minimum total degree in the x, y variables over the monomials of p;
// kInfinityMult for the zero polynomial.
int multiplicity_in_xy(const Polynomial<Gf2>& p);

// Substitution x_r -> t_r, y_r -> t_r + s_r (characteristic 2).
Polynomial<Gf2> to_ts_coordinates(const Polynomial<Gf2>& p);

// Minimum total degree in the s variables after the t,s change;
// kInfinityMult for zero.
int multiplicity_in_s(const Polynomial<Gf2>& p);

// Image under x_nu^(i) -> z^(i), y_nu^(i) -> z^(i): reinterprets a
// multilinear polynomial over the 2 nu space inside the (2 nu - 1) space.
Polynomial<Gf2> substitute_z_for_top_pair(const Polynomial<Gf2>& p, const QuadraticSpace& space);

// Proper set partitions of {0..m-1} enumerated via restricted growth
// strings; each partition lists its blocks as ascending slot lists.
std::vector<std::vector<std::vector<int>>> proper_set_partitions(int m);

// Perfect matchings of {1..m} (m even) as lists of (a, b) pairs with a < b.
std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int m);

}  // namespace orthinv

#endif
