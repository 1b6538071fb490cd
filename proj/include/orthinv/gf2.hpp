#ifndef ORTHINV_GF2_HPP
#define ORTHINV_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace orthinv {

// Bit-packed GF(2) vector with word-level XOR.
class BitVec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  bool is_zero() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // Index of the lowest set bit, npos when zero.
  std::size_t lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
    return npos;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  std::vector<std::size_t> set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        out.push_back((k << 6) + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.nbits_ == b.nbits_ && a.w_ == b.w_;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

// Row space in reduced row echelon form.  Pivot of a row is its lowest set
// bit; every pivot column is zero in all other rows, so membership reduction
// and kernel extraction are direct.
class Echelon {
 public:
  // Reduces v against the rows (pivot hits only); the residual is v modulo
  // the row space.
  BitVec reduce(BitVec v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v.is_zero()) break;
      if (v.test(pivot)) v ^= row;
    }
    return v;
  }

  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

  // Inserts v; returns false when it was already in the row space.
  bool insert(BitVec v) {
    v = reduce(std::move(v));
    std::size_t p = v.lowest_set();
    if (p == BitVec::npos) return false;
    for (auto& [pivot, row] : rows_)
      if (row.test(p)) row ^= v;
    rows_.emplace(p, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Rows ordered by pivot: the canonical basis of the row space.
  std::vector<BitVec> basis() const {
    std::vector<BitVec> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
  }

  const std::map<std::size_t, BitVec>& rows() const { return rows_; }

 private:
  std::map<std::size_t, BitVec> rows_;
};

// Kernel basis of the linear map given by constraint rows over ncols
// coordinates, in reduced echelon form over the free columns.
std::vector<BitVec> kernel_basis(const std::vector<BitVec>& constraint_rows, std::size_t ncols);

}  // namespace orthinv

#endif
