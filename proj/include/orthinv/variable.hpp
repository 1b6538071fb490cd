#ifndef ORTHINV_VARIABLE_HPP
#define ORTHINV_VARIABLE_HPP

#include <cstdint>
#include <string>
#include <tuple>

#include "orthinv/errors.hpp"

namespace orthinv {

// Coordinate letters.  X/Y are the hyperbolic pair coordinates, Z the odd
// extra coordinate, T/S the transformed pair coordinates t_r = x_r,
// s_r = x_r + y_r used by the multiplicity analysis.
enum class VarKind : std::uint8_t { X = 0, Y = 1, T = 2, S = 3, Z = 4 };

// A coordinate symbol attached to a vector slot: x_r^(i), y_r^(i), z^(i),
// t_r^(i), s_r^(i).  pair is 1-based (0 for Z), slot is 1-based.
struct Variable {
  VarKind kind = VarKind::X;
  int pair = 0;
  int slot = 0;

  Variable() = default;
  Variable(VarKind k, int r, int i) : kind(k), pair(k == VarKind::Z ? 0 : r), slot(i) {}

  static Variable x(int r, int i) { return Variable(VarKind::X, r, i); }
  static Variable y(int r, int i) { return Variable(VarKind::Y, r, i); }
  static Variable z(int i) { return Variable(VarKind::Z, 0, i); }
  static Variable t(int r, int i) { return Variable(VarKind::T, r, i); }
  static Variable s(int r, int i) { return Variable(VarKind::S, r, i); }

  // Canonical total order: slot ascending, then within a slot
  // x_1 < y_1 < t_1 < s_1 < x_2 < ... < z.  Encoded so that integer order on
  // the key realizes it.
  std::uint32_t key() const {
    std::uint32_t in_slot =
        kind == VarKind::Z ? 0xFFFFu
                           : static_cast<std::uint32_t>((pair - 1) * 4 + static_cast<int>(kind));
    return (static_cast<std::uint32_t>(slot) << 16) | in_slot;
  }

  static Variable from_key(std::uint32_t k) {
    Variable v;
    v.slot = static_cast<int>(k >> 16);
    std::uint32_t in_slot = k & 0xFFFFu;
    if (in_slot == 0xFFFFu) {
      v.kind = VarKind::Z;
      v.pair = 0;
    } else {
      v.kind = static_cast<VarKind>(in_slot % 4);
      v.pair = static_cast<int>(in_slot / 4) + 1;
    }
    return v;
  }

  char letter() const {
    switch (kind) {
      case VarKind::X: return 'x';
      case VarKind::Y: return 'y';
      case VarKind::T: return 't';
      case VarKind::S: return 's';
      case VarKind::Z: return 'z';
    }
    return '?';
  }

  // Within-term display order: by letter (ASCII), then pair, then slot.
  std::tuple<char, int, int> display_rank() const { return {letter(), pair, slot}; }

  std::string str() const {
    std::string s(1, letter());
    s += '[';
    if (kind != VarKind::Z) s += std::to_string(pair) + ",";
    s += std::to_string(slot);
    s += ']';
    return s;
  }

  friend bool operator==(const Variable& a, const Variable& b) { return a.key() == b.key(); }
  friend bool operator<(const Variable& a, const Variable& b) { return a.key() < b.key(); }
};

}  // namespace orthinv

#endif
