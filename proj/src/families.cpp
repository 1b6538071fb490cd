#include "orthinv/families.hpp"

#include <algorithm>
#include <numeric>

namespace orthinv {

std::string family_name(Family f) {
  switch (f) {
    case Family::G: return "g";
    case Family::H: return "h";
    case Family::F: return "f";
  }
  return "?";
}

void validate_family_spec(const FamilySpec& spec) {
  const int n = spec.n, m = spec.m;
  if (n < 2) throw InvalidSpecError("dimension n must be >= 2");
  if (m < 1) throw InvalidSpecError("vector count m must be >= 1");
  switch (spec.family) {
    case Family::G:
      if (m % 2 != 0) throw InvalidSpecError("g requires m even");
      if (m < 2 * (n / 2)) throw InvalidSpecError("g requires m >= 2*nu");
      break;
    case Family::H:
      if (m < n) throw InvalidSpecError("h requires m >= n");
      if ((m - n) % 2 != 0) throw InvalidSpecError("h requires m == n (mod 2)");
      break;
    case Family::F:
      if (n % 2 != 0 || m % 2 != 0) throw InvalidSpecError("f requires n and m even");
      if (n < 4) throw InvalidSpecError("f requires n >= 4");
      if (m < n) throw InvalidSpecError("f requires m >= n");
      break;
  }
}

int monomial_sign(Monomial rho, int m) {
  if (!monomial_is_multilinear(rho, m))
    throw NotMultilinearError("sign is defined for multilinear monomials only");
  // (block, slot) with block 0 = z, block r = hyperbolic pair r.
  std::vector<std::pair<int, int>> entries;
  entries.reserve(rho->factors.size());
  for (const auto& f : rho->factors) {
    Variable v = Variable::from_key(f.var);
    if (v.kind != VarKind::X && v.kind != VarKind::Y && v.kind != VarKind::Z)
      throw NotMultilinearError("sign is defined for x/y/z monomials only");
    entries.emplace_back(v.kind == VarKind::Z ? 0 : v.pair, v.slot);
  }
  std::sort(entries.begin(), entries.end());
  // Parity of the permutation slot_1, slot_2, ... of 1..m.
  int inversions = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].second > entries[j].second) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Polynomial<Int> build_pf_gram(const QuadraticSpace& space, const std::vector<int>& slots) {
  if (slots.size() % 2 != 0) throw ArityParityError("Pf needs an even number of slots");
  const int size = static_cast<int>(slots.size());
  SkewPolyMatrix<Int> mat(size);
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      mat.set_upper(a, b, bilinear_form(space, slots[static_cast<std::size_t>(a)],
                                        slots[static_cast<std::size_t>(b)]));
  return pfaffian(mat);
}

Polynomial<Int> build_db_sum(const QuadraticSpace& space, int m) {
  const int n = space.n;
  if (m < n || (m - n) % 2 != 0)
    throw ArityParityError("the shuffle sum needs m >= n with m == n (mod 2)");

  Polynomial<Int> total;
  // n-subsets of {1..m} in lexicographic order.
  std::vector<int> subset(static_cast<std::size_t>(n));
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    // sgn of the shuffle (subset ascending | complement ascending).
    long shift = 0;
    for (int j = 0; j < n; ++j) shift += subset[static_cast<std::size_t>(j)] - (j + 1);
    const bool negative = (shift % 2) != 0;

    std::vector<int> complement;
    complement.reserve(static_cast<std::size_t>(m - n));
    {
      std::size_t k = 0;
      for (int i = 1; i <= m; ++i) {
        if (k < subset.size() && subset[k] == i)
          ++k;
        else
          complement.push_back(i);
      }
    }
    Polynomial<Int> term = determinant_d(space, subset) * build_pf_gram(space, complement);
    if (negative)
      total -= term;
    else
      total += term;

    // next subset
    int i = n - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - (n - 1 - i)) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

namespace {

Int two_pow(int e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

}  // namespace

Polynomial<Int> construct_int(const FamilySpec& spec) {
  validate_family_spec(spec);
  const QuadraticSpace space = QuadraticSpace::of_dim(spec.n);
  const int mu = spec.mu(), nu = spec.nu();
  switch (spec.family) {
    case Family::G: {
      std::vector<int> slots(static_cast<std::size_t>(spec.m));
      std::iota(slots.begin(), slots.end(), 1);
      return build_pf_gram(space, slots).divexact_scalar(two_pow(mu - nu));
    }
    case Family::H:
      return build_db_sum(space, spec.m).divexact_scalar(two_pow(mu - nu));
    case Family::F: {
      Polynomial<Int> g = construct_int({Family::G, spec.n, spec.m});
      Polynomial<Int> h = construct_int({Family::H, spec.n, spec.m});
      return (g - h).divexact_scalar(Int(2));
    }
  }
  throw InvalidSpecError("unreachable");
}

Polynomial<Gf2> construct_mod2(const FamilySpec& spec) { return reduce_mod2(construct_int(spec)); }

namespace {

// Enumerates every multilinear monomial whose pair blocks alternate, i.e.
// every candidate of the closed-form coefficient statements, and hands it to
// the sink together with its block data:
//   labels    slot -> 0 (z) or pair index
//   counts    m_r for r = 0..nu
//   y_first   per pair with m_r > 0, whether the block starts with y.
template <class Sink>
void enumerate_alternating(const QuadraticSpace& space, int m, Sink&& sink) {
  const int nu = space.nu;
  std::vector<int> labels(static_cast<std::size_t>(m));

  std::vector<int> counts(static_cast<std::size_t>(nu + 1));
  auto emit = [&]() {
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < m; ++i) ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    std::vector<int> active;
    for (int r = 1; r <= nu; ++r)
      if (counts[static_cast<std::size_t>(r)] > 0) active.push_back(r);

    // Pattern choice per active pair: x-first (0) or y-first (1).
    const std::size_t npat = std::size_t{1} << active.size();
    for (std::size_t bits = 0; bits < npat; ++bits) {
      std::vector<bool> y_first(static_cast<std::size_t>(nu + 1), false);
      for (std::size_t k = 0; k < active.size(); ++k)
        y_first[static_cast<std::size_t>(active[k])] = (bits >> k) & 1;

      std::vector<VarPow> factors;
      factors.reserve(static_cast<std::size_t>(m));
      std::vector<int> pos(static_cast<std::size_t>(nu + 1), 0);
      for (int i = 0; i < m; ++i) {
        int r = labels[static_cast<std::size_t>(i)];
        if (r == 0) {
          factors.push_back(VarPow{Variable::z(i + 1).key(), 1});
        } else {
          int p = pos[static_cast<std::size_t>(r)]++;
          bool use_y = (p % 2 == 0) == y_first[static_cast<std::size_t>(r)];
          Variable v = use_y ? Variable::y(r, i + 1) : Variable::x(r, i + 1);
          factors.push_back(VarPow{v.key(), 1});
        }
      }
      sink(intern_monomial(std::move(factors)), counts, y_first);
    }
  };

  // Label range: 1..nu for even n, 0..nu for odd n (0 = z).
  const int lo = space.odd ? 0 : 1;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit();
      return;
    }
    for (int lab = lo; lab <= nu; ++lab) {
      labels[static_cast<std::size_t>(i)] = lab;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

Polynomial<Int> construct_combinatorial_int(const FamilySpec& spec) {
  validate_family_spec(spec);
  const QuadraticSpace space = QuadraticSpace::of_dim(spec.n);
  const int nu = spec.nu();
  Polynomial<Int> out;

  enumerate_alternating(space, spec.m, [&](Monomial rho, const std::vector<int>& counts,
                                           const std::vector<bool>& y_first) {
    bool all_even = true, all_positive = true;
    int active = 0, y_count = 0;
    for (int r = 1; r <= nu; ++r) {
      int mr = counts[static_cast<std::size_t>(r)];
      if (mr % 2 != 0) all_even = false;
      if (mr == 0)
        all_positive = false;
      else {
        ++active;
        if (y_first[static_cast<std::size_t>(r)]) ++y_count;
      }
    }
    if (counts[0] % 2 != 0) all_even = false;

    auto g_coeff = [&]() -> Int {
      // 2^(mu - #active) sgn, after division by 2^(mu - nu).
      if (!all_even) return 0;
      return two_pow(nu - active) * monomial_sign(rho, spec.m);
    };
    auto h_coeff = [&]() -> Int {
      // (-1)^(#y-first) sgn, after division by 2^(mu - nu).
      bool pair_ok = true;
      for (int r = 1; r <= nu; ++r) {
        int mr = counts[static_cast<std::size_t>(r)];
        if (mr == 0 || mr % 2 != 0) pair_ok = false;
      }
      if (!pair_ok) return 0;
      Int c = monomial_sign(rho, spec.m);
      return (y_count % 2 != 0) ? Int(-c) : c;
    };

    Int c;
    switch (spec.family) {
      case Family::G: c = g_coeff(); break;
      case Family::H: c = h_coeff(); break;
      case Family::F: c = coeff_divexact(g_coeff() - h_coeff(), Int(2)); break;
    }
    if (sgn(c) != 0) out.add_term(rho, c);
  });
  return out;
}

Polynomial<Gf2> construct_combinatorial_mod2(const FamilySpec& spec) {
  validate_family_spec(spec);
  const QuadraticSpace space = QuadraticSpace::of_dim(spec.n);
  const int nu = spec.nu();
  Polynomial<Gf2> out;

  enumerate_alternating(space, spec.m, [&](Monomial rho, const std::vector<int>& counts,
                                           const std::vector<bool>& y_first) {
    bool all_even = counts[0] % 2 == 0;
    int zero_pairs = 0, y_count = 0;
    for (int r = 1; r <= nu; ++r) {
      int mr = counts[static_cast<std::size_t>(r)];
      if (mr % 2 != 0) all_even = false;
      if (mr == 0)
        ++zero_pairs;
      else if (y_first[static_cast<std::size_t>(r)])
        ++y_count;
    }

    bool member = false;
    switch (spec.family) {
      case Family::G:
      case Family::H:
        // Strictly positive even m_r for every pair, letters alternating.
        member = all_even && zero_pairs == 0;
        break;
      case Family::F:
        // Either all pairs present with an odd number of y-first pairs, or a
        // unique empty pair.
        member = all_even && ((zero_pairs == 0 && y_count % 2 == 1) || zero_pairs == 1);
        break;
    }
    if (member) out.add_term(rho, Gf2(1));
  });
  return out;
}

bool in_theorem_range(const FamilySpec& spec) {
  const int n = spec.n, m = spec.m;
  switch (spec.family) {
    case Family::G:
      return (n % 2 == 0) ? (n >= 2 && m > n) : (n >= 3 && m >= n);
    case Family::H:
      return (n % 2 == 1) ? (n >= 3 && m >= n) : (n >= 2 && m > n);
    case Family::F:
      return n >= 4 && m >= n && n % 2 == 0 && m % 2 == 0;
  }
  return false;
}

}  // namespace orthinv
