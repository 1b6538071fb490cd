#include "orthinv/monomial.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace orthinv {

namespace {

std::uint64_t content_hash(const std::vector<VarPow>& factors) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& f : factors) {
    mix(f.var);
    mix(f.exp);
  }
  return h;
}

struct PoolHash {
  std::size_t operator()(const MonomialData* p) const { return static_cast<std::size_t>(p->hash); }
};
struct PoolEq {
  bool operator()(const MonomialData* a, const MonomialData* b) const {
    return a->hash == b->hash && a->factors == b->factors;
  }
};

// Interned monomials live for the whole process.
std::mutex g_pool_mutex;
std::unordered_set<MonomialData*, PoolHash, PoolEq>& pool() {
  static auto* p = new std::unordered_set<MonomialData*, PoolHash, PoolEq>();
  return *p;
}

}  // namespace

Monomial intern_monomial(std::vector<VarPow> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
  std::vector<VarPow> canon;
  canon.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!canon.empty() && canon.back().var == f.var)
      canon.back().exp += f.exp;
    else
      canon.push_back(f);
  }
  MonomialData probe;
  probe.factors = std::move(canon);
  probe.hash = content_hash(probe.factors);
  for (const auto& f : probe.factors) probe.degree += f.exp;

  std::lock_guard<std::mutex> lock(g_pool_mutex);
  auto it = pool().find(&probe);
  if (it != pool().end()) return *it;
  auto* owned = new MonomialData(std::move(probe));
  pool().insert(owned);
  return owned;
}

Monomial monomial_one() {
  static Monomial one = intern_monomial({});
  return one;
}

Monomial monomial_var(const Variable& v, std::uint32_t exp) {
  if (exp == 0) return monomial_one();
  return intern_monomial({VarPow{v.key(), exp}});
}

Monomial monomial_mul(Monomial a, Monomial b) {
  if (a->factors.empty()) return b;
  if (b->factors.empty()) return a;
  std::vector<VarPow> merged;
  merged.reserve(a->factors.size() + b->factors.size());
  merged.insert(merged.end(), a->factors.begin(), a->factors.end());
  merged.insert(merged.end(), b->factors.begin(), b->factors.end());
  return intern_monomial(std::move(merged));
}

int monomial_cmp_grlex(Monomial a, Monomial b) {
  if (a == b) return 0;
  if (a->degree != b->degree) return a->degree < b->degree ? -1 : 1;
  // Lexicographic on exponent vectors: at the smallest variable where they
  // differ, the larger exponent wins.
  auto ia = a->factors.begin(), ib = b->factors.begin();
  while (ia != a->factors.end() && ib != b->factors.end()) {
    if (ia->var != ib->var) {
      // The monomial owning the smaller variable has positive exponent there,
      // the other has zero.
      return ia->var < ib->var ? 1 : -1;
    }
    if (ia->exp != ib->exp) return ia->exp < ib->exp ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a->factors.end()) return 1;
  if (ib != b->factors.end()) return -1;
  return 0;
}

std::uint32_t monomial_degree_in_slot(Monomial m, int slot) {
  std::uint32_t d = 0;
  for (const auto& f : m->factors)
    if (Variable::from_key(f.var).slot == slot) d += f.exp;
  return d;
}

std::uint32_t monomial_degree_z(Monomial m) {
  std::uint32_t d = 0;
  for (const auto& f : m->factors)
    if (Variable::from_key(f.var).kind == VarKind::Z) d += f.exp;
  return d;
}

std::uint32_t monomial_degree_xy(Monomial m) {
  std::uint32_t d = 0;
  for (const auto& f : m->factors) {
    VarKind k = Variable::from_key(f.var).kind;
    if (k == VarKind::X || k == VarKind::Y) d += f.exp;
  }
  return d;
}

std::uint32_t monomial_degree_s(Monomial m) {
  std::uint32_t d = 0;
  for (const auto& f : m->factors)
    if (Variable::from_key(f.var).kind == VarKind::S) d += f.exp;
  return d;
}

bool monomial_is_multilinear(Monomial mono, int m) {
  if (mono->degree != static_cast<std::uint32_t>(m)) return false;
  if (mono->factors.size() != static_cast<std::size_t>(m)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (const auto& f : mono->factors) {
    if (f.exp != 1) return false;
    int slot = Variable::from_key(f.var).slot;
    if (slot < 1 || slot > m || seen[static_cast<std::size_t>(slot)]) return false;
    seen[static_cast<std::size_t>(slot)] = true;
  }
  return true;
}

std::uint32_t monomial_exponent(Monomial m, const Variable& v) {
  std::uint32_t key = v.key();
  for (const auto& f : m->factors)
    if (f.var == key) return f.exp;
  return 0;
}

std::string monomial_str(Monomial m) {
  if (m->factors.empty()) return "1";
  std::vector<std::pair<Variable, std::uint32_t>> vars;
  vars.reserve(m->factors.size());
  for (const auto& f : m->factors) vars.emplace_back(Variable::from_key(f.var), f.exp);
  std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) {
    return a.first.display_rank() < b.first.display_rank();
  });
  std::string s;
  for (const auto& [v, exp] : vars) {
    for (std::uint32_t e = 0; e < exp; ++e) {
      if (!s.empty()) s += '*';
      s += v.str();
    }
  }
  return s;
}

}  // namespace orthinv
