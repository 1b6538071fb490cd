#ifndef ORTHINV_POLY_TEXT_HPP
#define ORTHINV_POLY_TEXT_HPP

#include <cctype>
#include <string>
#include <vector>

#include "orthinv/polynomial.hpp"

// Canonical text form of polynomials.
//
//   poly  := "0" | ["- "] term (" + " term | " - " term)*
//   term  := factor ("*" factor)*
//   factor:= coeff | "L" ["^" k] | var
//   var   := ("x"|"y"|"t"|"s") "[" r "," i "]" | "z" "[" i "]"
//   coeff := decimal magnitude (sign is carried by the separator)
//
// Serialization is canonical: terms sorted graded-lexicographically
// descending on the slot-major variable order (parameter powers ascending as
// a tiebreak), variables within a term sorted by letter, coordinate
// exponents >= 2 rendered as repeated factors, the parameter as L^k.
// parse() additionally accepts "^k" on coordinate variables.

namespace orthinv {

namespace detail {

struct CoeffAtom {
  bool neg = false;
  Int mag = 1;  // > 0
  int lpow = 0;
};

inline void append_atoms(const Int& c, std::vector<CoeffAtom>& out) {
  out.push_back({sgn(c) < 0, abs(c), 0});
}
inline void append_atoms(Gf2 c, std::vector<CoeffAtom>& out) {
  if (c.v) out.push_back({false, 1, 0});
}
template <class C>
inline void append_atoms(const ParamPoly<C>& c, std::vector<CoeffAtom>& out) {
  for (const auto& [k, b] : c.coeffs) {
    std::vector<CoeffAtom> base;
    append_atoms(b, base);
    for (auto a : base) {
      a.lpow = k;
      out.push_back(a);
    }
  }
}

template <class C>
struct CoeffFromParts;

template <>
struct CoeffFromParts<Int> {
  static Int make(const Int& mag, int lpow) {
    if (lpow != 0) throw RingMismatchError("parameter L not available in an integer polynomial");
    return mag;
  }
};
template <>
struct CoeffFromParts<Gf2> {
  static Gf2 make(const Int& mag, int lpow) {
    if (lpow != 0) throw RingMismatchError("parameter L not available in a GF(2) polynomial");
    return coeff_mod2(mag);
  }
};
template <class B>
struct CoeffFromParts<ParamPoly<B>> {
  static ParamPoly<B> make(const Int& mag, int lpow) {
    return ParamPoly<B>::lambda(lpow, CoeffFromParts<B>::make(mag, 0));
  }
};

}  // namespace detail

template <class C>
std::string serialize(const Polynomial<C>& p) {
  struct Rendered {
    Monomial mono;
    detail::CoeffAtom atom;
  };
  std::vector<Rendered> rows;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<detail::CoeffAtom> atoms;
    detail::append_atoms(c, atoms);
    for (const auto& a : atoms) rows.push_back({mono, a});
  }
  if (rows.empty()) return "0";
  std::sort(rows.begin(), rows.end(), [](const Rendered& a, const Rendered& b) {
    int c = monomial_cmp_grlex(a.mono, b.mono);
    if (c != 0) return c > 0;
    return a.atom.lpow < b.atom.lpow;
  });

  std::string out;
  bool first = true;
  for (const auto& r : rows) {
    if (first) {
      if (r.atom.neg) out += "- ";
      first = false;
    } else {
      out += r.atom.neg ? " - " : " + ";
    }
    std::vector<std::string> tokens;
    if (r.atom.mag != 1) tokens.push_back(r.atom.mag.get_str());
    if (r.atom.lpow == 1)
      tokens.push_back("L");
    else if (r.atom.lpow > 1)
      tokens.push_back("L^" + std::to_string(r.atom.lpow));
    if (!r.mono->factors.empty()) tokens.push_back(monomial_str(r.mono));
    if (tokens.empty()) tokens.push_back("1");
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out += '*';
      out += tokens[i];
    }
  }
  return out;
}

template <class C>
Polynomial<C> parse_polynomial(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  };
  auto parse_uint = [&]() -> long {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, "expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ParseError(pos, "index out of range");
      ++pos;
    }
    return v;
  };

  Polynomial<C> result;
  skip_ws();
  if (pos >= text.size()) throw ParseError(pos, "empty input");

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw ParseError(pos, "empty input");
      break;
    }
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-' between terms");
    }
    first = false;

    // one term: factors joined by '*'
    Int mag = 1;
    int lpow = 0;
    std::vector<VarPow> factors;
    bool expecting_factor = true;
    while (expecting_factor) {
      skip_ws();
      if (pos >= text.size()) throw ParseError(pos, "expected a factor");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        mag *= Int(text.substr(start, pos - start));
      } else if (c == 'L') {
        ++pos;
        int k = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          k = static_cast<int>(parse_uint());
        }
        lpow += k;
      } else if (c == 'x' || c == 'y' || c == 'z' || c == 't' || c == 's') {
        ++pos;
        expect('[');
        skip_ws();
        long a = parse_uint();
        skip_ws();
        Variable v;
        if (c == 'z') {
          expect(']');
          if (a < 1) throw ParseError(pos, "slot index must be >= 1");
          v = Variable::z(static_cast<int>(a));
        } else {
          expect(',');
          skip_ws();
          long b = parse_uint();
          skip_ws();
          expect(']');
          if (a < 1) throw ParseError(pos, "pair index must be >= 1");
          if (b < 1) throw ParseError(pos, "slot index must be >= 1");
          VarKind kind = c == 'x'   ? VarKind::X
                         : c == 'y' ? VarKind::Y
                         : c == 't' ? VarKind::T
                                    : VarKind::S;
          v = Variable(kind, static_cast<int>(a), static_cast<int>(b));
        }
        std::uint32_t exp = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exp = static_cast<std::uint32_t>(parse_uint());
        }
        factors.push_back(VarPow{v.key(), exp});
      } else {
        throw ParseError(pos, "unexpected character");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        expecting_factor = true;
      } else {
        expecting_factor = false;
      }
    }
    C coeff = detail::CoeffFromParts<C>::make(mag, lpow);
    if (neg) coeff = -coeff;
    result.add_term(intern_monomial(std::move(factors)), coeff);
  }
  return result;
}

}  // namespace orthinv

#endif
