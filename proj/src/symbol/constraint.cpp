#include "gwi/symbol/constraint.hpp"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"

namespace gwi {

Vec4q constraint_residual(const RationalSym2& h, const CoVec4q& xi)
{
    const Vec4q up = raise(xi).c;
    const Rational half_tr = trace(h) / Rational(2);
    Vec4q res = h.matrix().transpose() * up;
    for (int v = 0; v < 4; ++v) {
        res(v) -= half_tr * xi[v];
    }
    return res;
}

bool constraint_membership(const RationalSym2& h, const CoVec4q& xi)
{
    return constraint_residual(h, xi).isZero();
}

MatXq contraction_matrix(const CoVec4q& xi)
{
    const Vec4q up = raise(xi).c;
    MatXq m(4, 10);
    for (int k = 0; k < 10; ++k) {
        m.col(k) = RationalSym2::unit(k).matrix() * up;
    }
    return m;
}

MatXq ConstraintFibre::matrix() const
{
    MatXq m(10, dimension());
    for (int k = 0; k < dimension(); ++k) {
        m.col(k) = basis[k].components();
    }
    return m;
}

bool ConstraintFibre::contains(const RationalSym2& h) const
{
    return solve(matrix(), VecXq(h.components())).has_value();
}

ConstraintFibre constraint_fibre_basis(const CoVec4q& xi)
{
    if (xi.is_zero()) {
        throw PreconditionError("constraint_fibre_basis: xi = 0");
    }
    if (!is_lightlike(xi)) {
        throw PreconditionError("constraint_fibre_basis: xi is not lightlike");
    }
    const RankNullspace rn = rank_nullspace(contraction_matrix(xi));
    ConstraintFibre out{xi, {}};
    for (Eigen::Index k = 0; k < rn.nullspace.cols(); ++k) {
        out.basis.push_back(involution(RationalSym2::from_components(rn.nullspace.col(k))));
    }
    return out;
}

CoVec4q DivergencePair::apply(const RationalSym2& h) const
{
    return CoVec4q(Vec4q(iota * h.components()));
}

RationalSym2 DivergencePair::lift(const CoVec4q& v) const
{
    return RationalSym2::from_components(right_inverse * v.c);
}

DivergencePair divergence_symbol_pair(const CoVec4q& xi)
{
    if (xi.is_zero()) {
        throw PreconditionError("divergence_symbol_pair: xi = 0");
    }
    const MatXq contract = contraction_matrix(xi);
    MatXq iota(4, 10);
    for (int k = 0; k < 10; ++k) {
        iota.col(k) = contract * involution(RationalSym2::unit(k)).components();
    }
    MatXq rinv(10, 4);
    for (int v = 0; v < 4; ++v) {
        const auto x = solve(iota, VecXq(VecXq::Unit(4, v)));
        if (!x) {
            throw RankDeficient("divergence_symbol_pair: iota is not surjective");
        }
        rinv.col(v) = *x;
    }
    return DivergencePair{xi, iota, rinv};
}

}  // namespace gwi
