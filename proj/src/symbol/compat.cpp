#include "gwi/symbol/compat.hpp"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"

namespace gwi {

CompatMaps compat_maps(const std::vector<CoVec4q>& frame)
{
    const int L = static_cast<int>(frame.size());
    if (L < 4) {
        throw PreconditionError("compat_maps: need at least four frame covectors");
    }
    CompatMaps out;
    out.frame = MatXq(4, L);
    for (int l = 0; l < L; ++l) out.frame.col(l) = frame[l].c;

    const MatXq phi = out.frame.leftCols(4);
    if (rank(phi) < 4) {
        throw NDViolation("compat_maps: dphi_1..dphi_4 are linearly dependent");
    }
    const MatXq phi_inv = inverse(phi);

    out.A1 = MatXq::Zero(L, 4);
    out.A1.topRows(4) = phi_inv;

    out.A2 = MatXq::Zero(L, L);
    for (int l = 4; l < L; ++l) {
        const VecXq c = phi_inv * out.frame.col(l);
        out.A2(l, l) = Rational(1);
        out.A2.col(l).head(4) -= c;
    }
    return out;
}

}  // namespace gwi
