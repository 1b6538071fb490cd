#include "orthinv/solver.hpp"

#include <algorithm>

namespace orthinv {

WordSpace::WordSpace(const QuadraticSpace& space, int m, const SolverConfig& config)
    : space_(space), m_(m) {
  if (m < 1) throw InvalidSpecError("word space needs m >= 1");
  std::size_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= static_cast<std::size_t>(space.n);
    if (count > config.ceiling)
      throw TooLargeError("monomial space " + std::to_string(space.n) + "^" + std::to_string(m) +
                          " exceeds ceiling " + std::to_string(config.ceiling));
  }
  count_ = count;
}

Variable WordSpace::letter_var(int letter, int slot) const {
  if (letter == 2 * space_.nu) return Variable::z(slot);
  int r = letter / 2 + 1;
  return letter % 2 == 0 ? Variable::x(r, slot) : Variable::y(r, slot);
}

int WordSpace::letter_of(const Variable& v) const {
  switch (v.kind) {
    case VarKind::X: return 2 * (v.pair - 1);
    case VarKind::Y: return 2 * (v.pair - 1) + 1;
    case VarKind::Z:
      if (!space_.odd) throw NotMultilinearError("z letter in an even-dimensional space");
      return 2 * space_.nu;
    default:
      throw NotMultilinearError("only x/y/z monomials live in the word space");
  }
}

std::vector<int> WordSpace::word_at(std::size_t index) const {
  std::vector<int> w(static_cast<std::size_t>(m_));
  for (int i = m_ - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(space_.n));
    index /= static_cast<std::size_t>(space_.n);
  }
  return w;
}

std::size_t WordSpace::index_of(const std::vector<int>& word) const {
  std::size_t idx = 0;
  for (int i = 0; i < m_; ++i)
    idx = idx * static_cast<std::size_t>(space_.n) +
          static_cast<std::size_t>(word[static_cast<std::size_t>(i)]);
  return idx;
}

Monomial WordSpace::monomial_at(std::size_t index) const {
  std::vector<int> w = word_at(index);
  std::vector<VarPow> factors;
  factors.reserve(w.size());
  for (int i = 0; i < m_; ++i)
    factors.push_back(VarPow{letter_var(w[static_cast<std::size_t>(i)], i + 1).key(), 1});
  return intern_monomial(std::move(factors));
}

std::size_t WordSpace::index_of_monomial(Monomial mono) const {
  if (!monomial_is_multilinear(mono, m_))
    throw NotMultilinearError("monomial is not multilinear over slots 1.." + std::to_string(m_));
  std::vector<int> w(static_cast<std::size_t>(m_), -1);
  for (const auto& f : mono->factors) {
    Variable v = Variable::from_key(f.var);
    if (v.pair > space_.nu) throw NotMultilinearError("pair index outside the space");
    w[static_cast<std::size_t>(v.slot - 1)] = letter_of(v);
  }
  return index_of(w);
}

Polynomial<Gf2> WordSpace::to_poly(const BitVec& v) const {
  Polynomial<Gf2> p;
  for (std::size_t i : v.set_bits()) p.add_term(monomial_at(i), Gf2(1));
  return p;
}

BitVec WordSpace::to_vec(const Polynomial<Gf2>& p) const {
  BitVec v(count_);
  for (const auto& [mono, c] : p.terms()) v.flip(index_of_monomial(mono));
  return v;
}

namespace {

// Per-letter expansion of one side of a generator: letter -> terms
// (lambda power, target letter).  GF(2)[L] coefficients are sums of L-powers.
using LetterImage = std::vector<std::pair<int, int>>;

std::vector<LetterImage> letter_images(const WordSpace& ws,
                                       const std::map<Coord, Generator<Gf2>::LinForm>& side) {
  const int n = ws.letters();
  std::vector<LetterImage> images(static_cast<std::size_t>(n));
  for (int letter = 0; letter < n; ++letter) {
    Variable v = ws.letter_var(letter, 1);
    auto it = side.find(Coord{v.kind, v.pair});
    if (it == side.end()) {
      images[static_cast<std::size_t>(letter)] = {{0, letter}};
      continue;
    }
    LetterImage img;
    for (const auto& [target, coef] : it->second) {
      int target_letter = ws.letter_of(target.at_slot(1));
      for (const auto& [lpow, c] : coef.coeffs)
        if (c.v) img.emplace_back(lpow, target_letter);
    }
    images[static_cast<std::size_t>(letter)] = std::move(img);
  }
  return images;
}

// sigma(word) expanded over the slots: XOR-canonical list of
// (total lambda power, image word index).
std::vector<std::pair<int, std::size_t>> image_of_word(const WordSpace& ws,
                                                       const std::vector<LetterImage>& images,
                                                       const std::vector<int>& word) {
  std::vector<std::pair<int, std::size_t>> acc = {{0, 0}};
  std::vector<std::pair<int, std::size_t>> next;
  for (int i = 0; i < ws.m(); ++i) {
    const LetterImage& img = images[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])];
    next.clear();
    next.reserve(acc.size() * img.size());
    for (const auto& [k, idx] : acc)
      for (const auto& [dk, letter] : img)
        next.emplace_back(k + dk, idx * static_cast<std::size_t>(ws.letters()) +
                                      static_cast<std::size_t>(letter));
    acc.swap(next);
  }
  std::sort(acc.begin(), acc.end());
  // cancel duplicate terms mod 2
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t i = 0; i < acc.size();) {
    std::size_t j = i;
    while (j < acc.size() && acc[j] == acc[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(acc[i]);
    i = j;
  }
  return out;
}

}  // namespace

const InvariantBasis& SolverCache::invariant_basis(int n, int m, Group group) {
  auto key = std::make_tuple(n, m, group);
  auto it = bases_.find(key);
  if (it != bases_.end()) return *it->second;

  const QuadraticSpace space = QuadraticSpace::of_dim(n);
  WordSpace ws(space, m, config_);
  const std::size_t count = ws.count();

  // Current basis of the cut-down subspace, refined one generator at a time.
  std::vector<BitVec> basis;
  basis.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BitVec v(count);
    v.set(i);
    basis.push_back(std::move(v));
  }

  const auto family = generator_family_gf2(space, group);
  for (const auto& gen : family) {
    if (basis.empty()) break;

    const auto lhs_images = letter_images(ws, gen.lhs);
    const auto rhs_images = letter_images(ws, gen.rhs);  // identity when empty

    // Constraint rows of "lhs(p) - rhs(p) = 0" in basis coordinates, keyed
    // by (lambda power, target word).
    std::map<std::pair<int, std::size_t>, BitVec> rows;
    auto accumulate = [&](const std::vector<LetterImage>& images, std::size_t j,
                          const std::vector<int>& word) {
      for (const auto& [k, target] : image_of_word(ws, images, word)) {
        auto [rit, inserted] = rows.try_emplace(std::make_pair(k, target), basis.size());
        rit->second.flip(j);
      }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t widx : basis[j].set_bits()) {
        const std::vector<int> word = ws.word_at(widx);
        accumulate(lhs_images, j, word);
        accumulate(rhs_images, j, word);
      }
    }

    std::vector<BitVec> constraint_rows;
    constraint_rows.reserve(rows.size());
    for (auto& [rk, row] : rows)
      if (!row.is_zero()) constraint_rows.push_back(std::move(row));

    const std::vector<BitVec> kernel = kernel_basis(constraint_rows, basis.size());
    std::vector<BitVec> refined;
    refined.reserve(kernel.size());
    for (const auto& kv : kernel) {
      BitVec combo(count);
      for (std::size_t j : kv.set_bits()) combo ^= basis[j];
      refined.push_back(std::move(combo));
    }
    basis.swap(refined);
  }

  // Canonical form: reduced echelon rows ordered by leading word.
  Echelon ech;
  for (auto& v : basis) ech.insert(std::move(v));

  auto data = std::make_unique<InvariantBasis>();
  data->n = n;
  data->m = m;
  data->group = group;
  data->vectors = ech.basis();
  data->elements.reserve(data->vectors.size());
  for (const auto& v : data->vectors) data->elements.push_back(ws.to_poly(v));

  auto [pos, ok] = bases_.emplace(key, std::move(data));
  return *pos->second;
}

std::vector<std::vector<std::vector<int>>> proper_set_partitions(int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  auto emit = [&]() {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (nblocks < 2) return;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (int i = 0; i < m; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
    out.push_back(std::move(blocks));
  };
  auto rec = [&](auto&& self, int i, int maxlab) -> void {
    if (i == m) {
      emit();
      return;
    }
    for (int lab = 0; lab <= std::min(maxlab + 1, m - 1); ++lab) {
      rgs[static_cast<std::size_t>(i)] = lab;
      self(self, i + 1, std::max(maxlab, lab));
    }
  };
  rec(rec, 1, 0);  // rgs[0] = 0 fixed
  return out;
}

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (m % 2 != 0) return out;
  std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    for (int i = 1; i <= m; ++i)
      if (!used[static_cast<std::size_t>(i)]) {
        a = i;
        break;
      }
    if (a == 0) {
      out.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b <= m; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      cur.emplace_back(a, b);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(b)] = false;
    }
    used[static_cast<std::size_t>(a)] = false;
  };
  rec(rec);
  return out;
}

const Echelon& SolverCache::decomposable_subspace(int n, int m, Group group) {
  auto key = std::make_tuple(n, m, group);
  auto it = decomposables_.find(key);
  if (it != decomposables_.end()) return *it->second;

  const QuadraticSpace space = QuadraticSpace::of_dim(n);
  WordSpace ws(space, m, config_);
  auto ech = std::make_unique<Echelon>();

  for (const auto& blocks : proper_set_partitions(m)) {
    // Invariant bases per block, reused by block size.
    bool degenerate = false;
    for (const auto& block : blocks) {
      if (invariant_basis(n, static_cast<int>(block.size()), group).dim() == 0) {
        degenerate = true;
        break;
      }
    }
    if (degenerate) continue;

    std::vector<WordSpace> subspaces;
    subspaces.reserve(blocks.size());
    for (const auto& block : blocks)
      subspaces.emplace_back(space, static_cast<int>(block.size()), config_);

    // All products of one basis element per block.
    std::vector<std::size_t> choice(blocks.size(), 0);
    while (true) {
      BitVec product(ws.count());
      // Merge supports: every combination of one word per block gives one
      // word of the product (blocks are slot-disjoint, so no collisions).
      std::vector<std::vector<std::size_t>> supports;
      supports.reserve(blocks.size());
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& b =
            invariant_basis(n, static_cast<int>(blocks[k].size()), group).vectors[choice[k]];
        supports.push_back(b.set_bits());
      }
      std::vector<int> word(static_cast<std::size_t>(m), 0);
      auto emit = [&](auto&& self, std::size_t k) -> void {
        if (k == blocks.size()) {
          product.flip(ws.index_of(word));
          return;
        }
        for (std::size_t s : supports[k]) {
          std::vector<int> w = subspaces[k].word_at(s);
          for (std::size_t j = 0; j < blocks[k].size(); ++j)
            word[static_cast<std::size_t>(blocks[k][j])] = w[j];
          self(self, k + 1);
        }
      };
      emit(emit, 0);
      ech->insert(std::move(product));

      // next choice tuple
      std::size_t k = 0;
      while (k < blocks.size()) {
        if (++choice[k] < invariant_basis(n, static_cast<int>(blocks[k].size()), group).dim())
          break;
        choice[k] = 0;
        ++k;
      }
      if (k == blocks.size()) break;
    }
  }

  auto [pos, ok] = decomposables_.emplace(key, std::move(ech));
  return *pos->second;
}

Certificate SolverCache::indecomposability_certificate(const FamilySpec& spec) {
  validate_family_spec(spec);
  const Group group = spec.family == Family::G ? Group::O : Group::SO;
  const QuadraticSpace space = QuadraticSpace::of_dim(spec.n);
  WordSpace ws(space, spec.m, config_);

  Certificate cert;
  cert.spec = spec;
  cert.group = group;
  cert.in_theorem_range = in_theorem_range(spec);
  cert.dim_invariant = invariant_basis(spec.n, spec.m, group).dim();

  const Echelon& dec = decomposable_subspace(spec.n, spec.m, group);
  cert.dim_decomposable = dec.rank();

  BitVec target = ws.to_vec(construct_mod2(spec));
  BitVec residual = dec.reduce(std::move(target));
  cert.member = residual.is_zero();
  if (!cert.member) cert.witness = ws.to_poly(residual);
  return cert;
}

int multiplicity_in_xy(const Polynomial<Gf2>& p) {
  int best = kInfinityMult;
  for (const auto& [mono, c] : p.terms())
    best = std::min(best, static_cast<int>(monomial_degree_xy(mono)));
  return best;
}

Polynomial<Gf2> to_ts_coordinates(const Polynomial<Gf2>& p) {
  std::unordered_map<std::uint32_t, Polynomial<Gf2>> images;
  for (const Variable& v : p.variables()) {
    if (v.kind == VarKind::X) {
      images.emplace(v.key(), Polynomial<Gf2>::var(Variable::t(v.pair, v.slot)));
    } else if (v.kind == VarKind::Y) {
      Polynomial<Gf2> img = Polynomial<Gf2>::var(Variable::t(v.pair, v.slot)) +
                            Polynomial<Gf2>::var(Variable::s(v.pair, v.slot));
      images.emplace(v.key(), std::move(img));
    } else if (v.kind == VarKind::Z) {
      throw InvalidSpecError("t,s coordinates require an even-dimensional space");
    }
  }
  return substitute(p, images, /*identity_on_missing=*/true);
}

int multiplicity_in_s(const Polynomial<Gf2>& p) {
  const Polynomial<Gf2> ts = to_ts_coordinates(p);
  int best = kInfinityMult;
  for (const auto& [mono, c] : ts.terms())
    best = std::min(best, static_cast<int>(monomial_degree_s(mono)));
  return best;
}

Polynomial<Gf2> substitute_z_for_top_pair(const Polynomial<Gf2>& p, const QuadraticSpace& space) {
  if (space.odd || space.nu < 2)
    throw InvalidSpecError("top-pair substitution needs an even dimension >= 4");
  std::unordered_map<std::uint32_t, Polynomial<Gf2>> images;
  for (const Variable& v : p.variables()) {
    if ((v.kind == VarKind::X || v.kind == VarKind::Y) && v.pair == space.nu)
      images.emplace(v.key(), Polynomial<Gf2>::var(Variable::z(v.slot)));
  }
  return substitute(p, images, /*identity_on_missing=*/true);
}

LemmaAudit SolverCache::lemma_bound_audit(int n, int m, Group group) {
  const InvariantBasis& basis = invariant_basis(n, m, group);
  LemmaAudit audit;
  audit.n = n;
  audit.m = m;
  audit.group = group;
  audit.dim = basis.dim();
  const int nu = n / 2;
  audit.bound = (n % 2 == 1) ? std::min(m, 2 * nu) : std::min(m / 2, nu);
  audit.min_achieved = kInfinityMult;
  for (const auto& e : basis.elements) {
    int mult = (n % 2 == 1) ? multiplicity_in_xy(e) : multiplicity_in_s(e);
    audit.min_achieved = std::min(audit.min_achieved, mult);
  }
  audit.pass = audit.min_achieved >= audit.bound;
  return audit;
}

bool SolverCache::matching_span_equals_invariants(int n, int m) {
  const QuadraticSpace space = QuadraticSpace::of_dim(n);
  WordSpace ws(space, m, config_);
  Echelon span;
  for (const auto& matching : perfect_matchings(m)) {
    Polynomial<Int> prod = Polynomial<Int>::one();
    for (const auto& [a, b] : matching) prod *= bilinear_form(space, a, b);
    Polynomial<Gf2> red = reduce_mod2(prod);
    if (!red.is_zero()) span.insert(ws.to_vec(red));
  }
  const InvariantBasis& basis = invariant_basis(n, m, Group::O);
  if (span.rank() != basis.dim()) return false;
  for (const auto& v : basis.vectors)
    if (!span.contains(v)) return false;
  return true;
}

}  // namespace orthinv
