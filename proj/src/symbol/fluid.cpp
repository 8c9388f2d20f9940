#include "gwi/symbol/fluid.hpp"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"

namespace gwi {

std::vector<CoVec4q> default_fluid_directions()
{
    return {CoVec4q(1, 0, 0, 0), CoVec4q(2, 1, 0, 0), CoVec4q(2, -1, 0, 0), CoVec4q(2, 0, 1, 0),
            CoVec4q(2, 0, -1, 0), CoVec4q(2, 0, 0, 1), CoVec4q(2, 0, 0, -1), CoVec4q(3, 1, 1, 0),
            CoVec4q(3, 1, 0, 1), CoVec4q(3, 0, 1, 1)};
}

VecXq fluid_decompose(const RationalSym2& P, const std::vector<CoVec4q>& dirs)
{
    if (dirs.size() < 10) {
        throw PreconditionError("fluid_decompose: need at least ten directions");
    }
    MatXq m(10, static_cast<Eigen::Index>(dirs.size()));
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        if (mink_pair(dirs[k], dirs[k]).sign() >= 0) {
            throw PreconditionError("fluid_decompose: direction " + std::to_string(k) + " is not timelike");
        }
        m.col(static_cast<Eigen::Index>(k)) = outer(dirs[k]).components();
    }
    if (rank(m) < 10) {
        throw RankDeficient("fluid_decompose: squares of the directions do not span Sym2");
    }
    const auto mu = solve(m, VecXq(P.components()));
    // Full row rank means the system is always consistent.
    return *mu;
}

}  // namespace gwi
