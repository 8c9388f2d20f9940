#ifndef GWI_SYMBOL_COMPAT_HPP
#define GWI_SYMBOL_COMPAT_HPP

#include "gwi/tensor.hpp"

#include <vector>

namespace gwi {

/// For a frame dphi_1..dphi_L (L >= 4, first four independent), with
/// w . dphi = sum_l w_l dphi_l:
///   A1 * v         is an L-vector with (A1 v) . dphi = v
///   A2 * w         satisfies (A2 w) . dphi = 0
///   A1 (w . dphi) + A2 w = w
struct CompatMaps {
    MatXq frame;  // 4 x L, columns dphi_l
    MatXq A1;     // L x 4
    MatXq A2;     // L x L
};

/// Throws NDViolation when dphi_1..dphi_4 are dependent and
/// PreconditionError when L < 4.
CompatMaps compat_maps(const std::vector<CoVec4q>& frame);

}  // namespace gwi

#endif  // GWI_SYMBOL_COMPAT_HPP
