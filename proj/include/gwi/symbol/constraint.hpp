#ifndef GWI_SYMBOL_CONSTRAINT_HPP
#define GWI_SYMBOL_CONSTRAINT_HPP

#include "gwi/tensor.hpp"

#include <vector>

namespace gwi {

/// r_v = h(xi_*, e_v) - (tr h / 2) xi_v for v = 0..3.
Vec4q constraint_residual(const RationalSym2& h, const CoVec4q& xi);

bool constraint_membership(const RationalSym2& h, const CoVec4q& xi);

/// 4x10 matrix of h -> h(xi_*, .) acting on Sym2 component vectors.
MatXq contraction_matrix(const CoVec4q& xi);

struct ConstraintFibre {
    CoVec4q xi;
    std::vector<RationalSym2> basis;

    [[nodiscard]] int dimension() const { return static_cast<int>(basis.size()); }
    /// 10 x dim matrix of basis component vectors.
    [[nodiscard]] MatXq matrix() const;
    [[nodiscard]] bool contains(const RationalSym2& h) const;
};

/// Exact basis of the solution space of the constraint equation at a nonzero
/// lightlike xi: nullspace of h~ -> h~(xi_*, .), mapped through the trace
/// reversal. Throws PreconditionError for zero or non-lightlike xi.
ConstraintFibre constraint_fibre_basis(const CoVec4q& xi);

/// Divergence symbol iota_xi h = (I h)(xi_*, .) and a right inverse.
struct DivergencePair {
    CoVec4q xi;
    MatXq iota;           // 4 x 10
    MatXq right_inverse;  // 10 x 4

    [[nodiscard]] CoVec4q apply(const RationalSym2& h) const;
    [[nodiscard]] RationalSym2 lift(const CoVec4q& v) const;
};

/// The right inverse maps e_v to the basic solution of iota x = e_v under the
/// fixed pivot order. Throws PreconditionError for xi = 0.
DivergencePair divergence_symbol_pair(const CoVec4q& xi);

}  // namespace gwi

#endif  // GWI_SYMBOL_CONSTRAINT_HPP
