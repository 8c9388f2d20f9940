#include "doctest.h"

#include "gwi/errors.hpp"
#include "gwi/geom/arrangement.hpp"
#include "gwi/geom/fermi.hpp"
#include "gwi/geom/spacetime.hpp"
#include "gwi/linalg.hpp"
#include "gwi/symbol/directions.hpp"

#include <cmath>

using namespace gwi;

namespace {

std::vector<SpacetimeSpec> all_presets()
{
    return {
        SpacetimeSpec::minkowski(),
        SpacetimeSpec::flat_torus(1, 1, 1),
        SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0, 0.1}, {}}),
        SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0}, {0.0, 0.05}}),
        SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0, 0.1, 0.02}, {0.0, 0.03}}),
    };
}

double lightlike_value(const CoVec4q& v)
{
    return mink_pair(v, v).to_double();
}

}  // namespace

TEST_CASE("fermi chart axis property on every preset")
{
    for (const auto& spec : all_presets()) {
        CAPTURE(spec.name());
        const Vec4d x(0.1, 0.2, -0.1, 0.05);
        const Frame f = orthonormal_frame(spec, x, Vec4d(1, 0.3, 0, 0.1));
        const FermiChart chart = fermi_chart(spec, x, f);
        for (double s : {0.0, 0.25, 0.5, 0.9}) {
            const Vec4d u(s, 0, 0, 0);
            const Mat4d g = chart.pullback_metric(u);
            CHECK((g - minkowski<double>()).cwiseAbs().maxCoeff() < 1e-8);
            double gmax = 0;
            for (const auto& G : chart.pullback_christoffels(u)) gmax = std::max(gmax, G.cwiseAbs().maxCoeff());
            CHECK(gmax < 1e-6);
        }
    }
}

TEST_CASE("fermi chart off the axis sees curvature")
{
    const auto spec = SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0, 0.1, 0.02}, {0.0, 0.03}});
    const Vec4d x = Vec4d::Zero();
    const FermiChart chart = fermi_chart(spec, x, orthonormal_frame(spec, x));
    const Mat4d g = chart.pullback_metric(Vec4d(0.2, 0.4, 0.3, 0.0));
    CHECK((g - minkowski<double>()).cwiseAbs().maxCoeff() > 1e-4);
}

TEST_CASE("fermi chart of minkowski is the identity")
{
    const auto spec = SpacetimeSpec::minkowski();
    const Frame f{Vec4d(1, 0, 0, 0), Vec4d(0, 1, 0, 0), Vec4d(0, 0, 1, 0), Vec4d(0, 0, 0, 1)};
    const FermiChart chart = fermi_chart(spec, Vec4d::Zero(), f);
    for (const Vec4d& u : {Vec4d(0.3, 0.1, -0.4, 0.2), Vec4d(-1, 2, 0.5, 1), Vec4d(0, 0, 0, 0)}) {
        CHECK((chart.map(u) - u).norm() < 1e-12);
    }
}

TEST_CASE("fermi chart along a boosted worldline is a Lorentz boost")
{
    const auto spec = SpacetimeSpec::minkowski();
    const double v = 0.6, gamma = 1.0 / std::sqrt(1 - v * v);
    Mat4d L = Mat4d::Identity();
    L(0, 0) = L(1, 1) = gamma;
    L(0, 1) = L(1, 0) = gamma * v;
    const Frame f{L.col(0), L.col(1), L.col(2), L.col(3)};
    const Vec4d x(0.5, -0.2, 0.1, 0.3);
    const FermiChart chart = fermi_chart(spec, x, f);
    for (const Vec4d& u : {Vec4d(0.3, 0.1, -0.4, 0.2), Vec4d(0.9, -0.5, 0.5, 1), Vec4d(0, 0.2, 0, 0)}) {
        CHECK((chart.map(u) - (x + L * u)).norm() < 1e-8);
    }
}

TEST_CASE("fermi chart rejects bad frames")
{
    const auto spec = SpacetimeSpec::minkowski();
    Frame f{Vec4d(1, 0, 0, 0), Vec4d(0, 1, 0, 0), Vec4d(0, 0, 1, 0), Vec4d(0, 0, 0, 1)};
    Frame skew = f;
    skew[1] = Vec4d(0, 1, 0.1, 0);
    CHECK_THROWS_AS(fermi_chart(spec, Vec4d::Zero(), skew), PreconditionError);
    Frame past = f;
    past[0] = Vec4d(-1, 0, 0, 0);
    CHECK_THROWS_AS(fermi_chart(spec, Vec4d::Zero(), past), PreconditionError);
}

TEST_CASE("pairwise conormal spans contain only the generators")
{
    const auto B = pythagorean_directions();
    int pairs = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t j = i + 1; j < B.size(); ++j) {
            const PairReport r = analyze_pair(B[i], B[j], {static_cast<int>(i), static_cast<int>(j)});
            CHECK(r.only_generators);
            CHECK_FALSE(r.cross.is_zero());
            // independent oracle: the quadratic form on (alpha, beta) is
            // alpha^2 Q(b_i) + 2 alpha beta <b_i, b_j> + beta^2 Q(b_j), whose
            // discriminant is 4 <b_i,b_j>^2 > 0, and since Q(b_i) = Q(b_j) = 0
            // its roots are exactly the coordinate axes
            const CoVec4q& bi = B[i].covector();
            const CoVec4q& bj = B[j].covector();
            CHECK(mink_pair(bi, bi).is_zero());
            CHECK(mink_pair(bj, bj).is_zero());
            CHECK(r.cross == mink_pair(bi, bj));
            for (int a = -3; a <= 3; ++a)
                for (int b = -3; b <= 3; ++b) {
                    const CoVec4q w = Rational(a) * bi + Rational(b) * bj;
                    if (a != 0 && b != 0) CHECK_FALSE(mink_pair(w, w).is_zero());
                }
            ++pairs;
        }
    }
    CHECK(pairs == 15);
    // the worked example from the first two directions
    const PairReport ex = analyze_pair(LightDirection(3, 2, 2, -1), LightDirection(6, 2, 4, -4));
    CHECK(ex.only_generators);
    CHECK(ex.cross == Rational(-2));
}

TEST_CASE("triple spans from valid quadruples carry a new lightlike direction")
{
    int checked = 0;
    for (const Quadruple& q : enumerate_valid_quadruples()) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    const TripleReport t = analyze_triple(q.b[i], q.b[j], q.b[k], {i, j, k});
                    REQUIRE(t.witness.has_value());
                    const CoVec4q& w = *t.witness;
                    CHECK(mink_pair(w, w).is_zero());
                    CHECK_FALSE(w.is_zero());
                    // witness lies in the span
                    const CoVec4q recon = t.witness_coefficients[0] * q.b[i].covector() +
                                          t.witness_coefficients[1] * q.b[j].covector() +
                                          t.witness_coefficients[2] * q.b[k].covector();
                    CHECK(recon == w);
                    // proportional to none of the generators: rank 2 with each
                    for (const auto* g : {&q.b[i], &q.b[j], &q.b[k]}) {
                        MatXq m(2, 4);
                        for (int c = 0; c < 4; ++c) {
                            m(0, c) = w[c];
                            m(1, c) = g->covector()[c];
                        }
                        CHECK(rank(m) == 2);
                    }
                    CHECK_FALSE(t.discriminant.is_zero());
                    ++checked;
                }
    }
    CHECK(checked == 36);
}

TEST_CASE("four planes through the origin")
{
    const auto q = enumerate_valid_quadruples().front();
    const ArrangementReport rep = plane_arrangement_analysis(q.b);
    CHECK(rep.quadruple_rank == 4);
    REQUIRE(rep.intersection_point.has_value());
    CHECK(rep.intersection_point->isZero());
    CHECK(rep.pairs.size() == 6);
    CHECK(rep.triples.size() == 4);

    const std::array<Rational, 4> c{Rational(1), Rational(-2), Rational(1, 3), Rational(5)};
    const ArrangementReport shifted = plane_arrangement_analysis(q.b, c);
    REQUIRE(shifted.intersection_point.has_value());
    for (int j = 0; j < 4; ++j) {
        Rational dot;
        for (int i = 0; i < 4; ++i) dot += q.b[j].covector()[i] * (*shifted.intersection_point)(i);
        CHECK(dot == c[j]);
    }

    const std::array<LightDirection, 4> dup{q.b[0], q.b[0], q.b[1], q.b[2]};
    CHECK_THROWS_AS(plane_arrangement_analysis(dup), PreconditionError);
}

TEST_CASE("triple cone directions are null")
{
    const auto q = enumerate_valid_quadruples().front();
    Vec4d z[3];
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i) z[j](i) = q.b[j].covector()[i].to_double();
    int found = 0;
    for (int n = 0; n < 32; ++n) {
        const auto w = triple_cone_direction(z[0], z[1], z[2], M_PI * (n + 0.5) / 32);
        if (!w) continue;
        CHECK(w->dot(minkowski<double>() * *w) == doctest::Approx(0.0).scale(1.0));
        CHECK((*w)(0) == doctest::Approx(1.0));
        ++found;
    }
    CHECK(found > 20);
    CHECK(lightlike_value(q.b[0].covector()) == 0.0);
}
