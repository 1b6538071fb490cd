#include "orthinv/gf2.hpp"

namespace orthinv {

std::vector<BitVec> kernel_basis(const std::vector<BitVec>& constraint_rows, std::size_t ncols) {
  Echelon ech;
  for (const auto& r : constraint_rows) ech.insert(r);

  std::vector<bool> is_pivot(ncols, false);
  for (const auto& [pivot, row] : ech.rows()) is_pivot[pivot] = true;

  std::vector<BitVec> kernel;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(ncols);
    v.set(f);
    // RREF: the row with pivot p contributes p exactly when its f entry is
    // set; all other pivot entries of that row are zero.
    for (const auto& [pivot, row] : ech.rows())
      if (row.test(f)) v.set(pivot);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace orthinv
