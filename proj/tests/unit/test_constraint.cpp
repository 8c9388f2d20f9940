#include "doctest.h"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"
#include "gwi/symbol/compat.hpp"
#include "gwi/symbol/constraint.hpp"
#include "gwi/symbol/directions.hpp"

#include <random>

using namespace gwi;

namespace {

std::vector<CoVec4q> test_covectors()
{
    std::vector<CoVec4q> out{default_xi()};
    for (const auto& b : pythagorean_directions()) out.push_back(b.covector());
    return out;
}

Rational rnd(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("constraint membership examples")
{
    const CoVec4q xi = default_xi();
    CHECK(constraint_membership(RationalSym2{}, xi));
    CHECK(constraint_membership(outer(xi), xi));
    CHECK_FALSE(constraint_membership(RationalSym2::from_matrix(minkowski<Rational>()), xi));
}

TEST_CASE("constraint fibre has dimension six")
{
    for (const auto& xi : test_covectors()) {
        const ConstraintFibre f = constraint_fibre_basis(xi);
        CHECK(f.dimension() == 6);
        CHECK(rank(f.matrix()) == 6);
        for (const auto& h : f.basis) CHECK(constraint_membership(h, xi));
        CHECK(f.contains(outer(xi)));
        CHECK_FALSE(f.contains(RationalSym2::from_matrix(minkowski<Rational>())));
    }
    CHECK_THROWS_AS(constraint_fibre_basis(CoVec4q(1, 0, 0, 0)), PreconditionError);
    CHECK_THROWS_AS(constraint_fibre_basis(CoVec4q{}), PreconditionError);
}

TEST_CASE("membership agrees with the fibre span")
{
    // Random combinations of basis elements are members; perturbations by a
    // non-member are not.
    std::mt19937_64 rng(17);
    const CoVec4q xi = pythagorean_directions()[3].covector();
    const ConstraintFibre f = constraint_fibre_basis(xi);
    const RationalSym2 g = RationalSym2::from_matrix(minkowski<Rational>());
    for (int n = 0; n < 30; ++n) {
        RationalSym2 h;
        for (const auto& e : f.basis) h += rnd(rng) * e;
        CHECK(constraint_membership(h, xi));
        CHECK_FALSE(constraint_membership(h + g, xi));
    }
}

TEST_CASE("divergence symbol pair")
{
    for (const auto& xi : test_covectors()) {
        const DivergencePair d = divergence_symbol_pair(xi);
        CHECK(rank(d.iota) == 4);
        CHECK(d.iota * d.right_inverse == MatXq::Identity(4, 4));
        const ConstraintFibre f = constraint_fibre_basis(xi);
        for (const auto& h : f.basis) CHECK(d.apply(h).is_zero());
        // kernel equals the fibre: same dimension and the fibre is inside it
        const auto rn = rank_nullspace(d.iota);
        CHECK(rn.nullspace.cols() == 6);
        MatXq both(10, 12);
        both << rn.nullspace, f.matrix();
        CHECK(rank(both) == 6);
        for (int v = 0; v < 4; ++v) {
            const CoVec4q e(Vec4q(Vec4q::Unit(v)));
            CHECK(d.apply(d.lift(e)) == e);
        }
    }
    CHECK_THROWS_AS(divergence_symbol_pair(CoVec4q{}), PreconditionError);
}

TEST_CASE("compat maps")
{
    SUBCASE("standard frame")
    {
        const auto m = compat_maps({CoVec4q(1, 0, 0, 0), CoVec4q(0, 1, 0, 0), CoVec4q(0, 0, 1, 0), CoVec4q(0, 0, 0, 1)});
        CHECK(m.A1 == MatXq::Identity(4, 4));
        CHECK(m.A2.isZero());
    }
    SUBCASE("dependent fifth covector")
    {
        std::vector<CoVec4q> frame{CoVec4q(1, 2, 0, 0), CoVec4q(0, 1, 3, 0), CoVec4q(0, 0, 1, 1), CoVec4q(1, 0, 0, 5)};
        frame.push_back(frame[0] + Rational(2) * frame[1]);
        const auto m = compat_maps(frame);
        VecXq expect = VecXq::Zero(5);
        expect << Rational(-1), Rational(-2), Rational(0), Rational(0), Rational(1);
        CHECK(VecXq(m.A2.col(4)) == expect);
    }
    SUBCASE("degenerate frame")
    {
        CHECK_THROWS_AS(compat_maps({CoVec4q(1, 0, 0, 0), CoVec4q(2, 0, 0, 0), CoVec4q(0, 0, 1, 0), CoVec4q(0, 0, 0, 1)}),
                        NDViolation);
    }
    SUBCASE("random frames")
    {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> len(4, 8);
        int frames = 0;
        while (frames < 20) {
            const int L = len(rng);
            std::vector<CoVec4q> frame;
            for (int l = 0; l < L; ++l) frame.emplace_back(rnd(rng), rnd(rng), rnd(rng), rnd(rng));
            CompatMaps m;
            try {
                m = compat_maps(frame);
            } catch (const NDViolation&) {
                continue;
            }
            ++frames;
            CHECK(m.frame * m.A1 == MatXq::Identity(4, 4));
            CHECK((m.frame * m.A2).isZero());
            for (int n = 0; n < 50; ++n) {
                VecXq w(L);
                for (int l = 0; l < L; ++l) w(l) = rnd(rng);
                CHECK(VecXq(m.A1 * (m.frame * w) + m.A2 * w) == w);
            }
        }
    }
}
