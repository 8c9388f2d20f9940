#ifndef GWI_SYMBOL_FLUID_HPP
#define GWI_SYMBOL_FLUID_HPP

#include "gwi/tensor.hpp"

#include <vector>

namespace gwi {

/// Ten timelike covectors whose squares span Sym2.
std::vector<CoVec4q> default_fluid_directions();

/// Coefficients mu with sum_k mu_k v^k (x) v^k = P, basic solution under the
/// fixed pivot order when more than ten directions are given.
/// Throws PreconditionError for fewer than ten or non-timelike directions and
/// RankDeficient when the squares do not span Sym2.
VecXq fluid_decompose(const RationalSym2& P, const std::vector<CoVec4q>& dirs);

}  // namespace gwi

#endif  // GWI_SYMBOL_FLUID_HPP
