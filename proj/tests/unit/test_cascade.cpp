#include "doctest.h"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"
#include "gwi/symbol/cascade.hpp"
#include "gwi/symbol/certificate.hpp"
#include "gwi/symbol/constraint.hpp"
#include "gwi/symbol/fluid.hpp"

#include <random>

using namespace gwi;

namespace {

std::vector<std::string> strs(const VecXq& v)
{
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
    return out;
}

Quadruple example_quadruple(const CoVec4q& xi = default_xi())
{
    const auto B = pythagorean_directions();
    return decompose_xi({B[0], B[1], B[2], B[4]}, xi);
}

Quadruple permuted(const Quadruple& q, std::array<int, 4> perm)
{
    std::array<LightDirection, 4> b{q.b[perm[0]], q.b[perm[1]], q.b[perm[2]], q.b[perm[3]]};
    return decompose_xi(b, q.xi);
}

}  // namespace

TEST_CASE("cascade invariants")
{
    const CascadeState c = cascade_symbols(example_quadruple());
    for (int j = 0; j < 4; ++j) {
        CHECK(c.g1(j).is_zero());
        for (int k = 0; k < 4; ++k) {
            if (j == k) continue;
            CHECK(c.phi2(j, k).isZero());
            const bool paired = (std::min(j, k) == 0 && std::max(j, k) == 1) || (std::min(j, k) == 2 && std::max(j, k) == 3);
            CHECK(c.g2(j, k).is_zero() == !paired);
        }
    }
    CHECK(c.g2(0, 2).is_zero());
    CHECK_FALSE(c.phi_triple(0, 1, 2).isZero());
    CHECK_FALSE(c.phi_triple(3, 2, 0).isZero());
    CHECK(c.g3(0, 1, 2).is_zero());
    // tr g_(12) = -4 q(eta_12) <xi_1, xi_2> = -2
    CHECK(trace(c.g12) == Rational(-2));
    CHECK(trace(c.g34) == Rational(-2));
}

TEST_CASE("cascade rejects invalid input")
{
    const auto census = quadruple_census();
    CHECK_THROWS_AS(cascade_symbols(*census.candidates[4].quadruple), PreconditionError);

    // eta_12 lightlike when xi_1 and xi_2 are parallel null covectors
    const Quadruple q{{LightDirection(1, 1, 0, 0), LightDirection(1, 1, 0, 0), LightDirection(1, 0, 1, 0), LightDirection(1, 0, 0, 1)},
                      {Rational(1), Rational(1), Rational(1), Rational(1)},
                      default_xi()};
    try {
        cascade_symbols(q);
        FAIL("expected NullDenominator");
    } catch (const NullDenominator& e) {
        CHECK(e.indices() == std::vector<int>{1, 2});
    }
}

TEST_CASE("christoffel form")
{
    const RationalSym2 g = RationalSym2::from_matrix(minkowski<Rational>());
    const CoVec4q e0(1, 0, 0, 0);
    const Christoffel3 G = christoffel_form(e0, g);
    // hand expansion of 1/2 (eta_a g_cb + eta_b g_ac - eta_c g_ab) at eta = e0
    for (int a = 0; a < 4; ++a) {
        for (int c = 0; c < 4; ++c) {
            for (int b = 0; b < 4; ++b) {
                Rational expect;
                if (a == 0 && c == 0 && b == 0) expect = Rational(-1, 2);
                else if (a == 0 && c == b && c > 0) expect = Rational(1, 2);
                else if (b == 0 && a == c && a > 0) expect = Rational(1, 2);
                else if (c == 0 && a == b && a > 0) expect = Rational(-1, 2);
                CHECK(G[a][c][b] == expect);
            }
        }
    }
    const Christoffel3 Z = christoffel_form(e0, RationalSym2{});
    const CoVec4q eta(2, -1, 3, 5);
    const RationalSym2 h = sym_outer(CoVec4q(1, 2, 0, -1), CoVec4q(0, 1, 1, 1));
    const Christoffel3 G1 = christoffel_form(eta, h);
    const Christoffel3 G2 = christoffel_form(Rational(2) * eta, h);
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c)
            for (int b = 0; b < 4; ++b) {
                CHECK(Z[a][c][b].is_zero());
                CHECK(G2[a][c][b] == Rational(2) * G1[a][c][b]);
                // symmetric in the outer pair for symmetric g
                CHECK(G1[a][c][b] == G1[b][c][a]);
            }
}

TEST_CASE("interaction symbol frozen values")
{
    // Computed independently with Python fractions.
    const Quadruple q = example_quadruple();
    const SymbolVector der = interaction_symbol(q, AssemblyMode::Derived);
    CHECK(strs(der.metric.components()) ==
          std::vector<std::string>{"192/5", "232/5", "80/1", "32/1", "272/5", "80/1", "32/1", "192/5", "-144/5", "-192/5"});
    CHECK(der.scalar.isZero());
    const SymbolVector lit = interaction_symbol(q, AssemblyMode::Literal);
    CHECK(strs(lit.metric.components()) ==
          std::vector<std::string>{"1320/1", "822/1", "548/1", "-762/1", "544/1", "340/1", "-458/1", "208/1", "-328/1", "436/1"});
}

TEST_CASE("interaction symbol swap invariance")
{
    for (const auto& q : enumerate_valid_quadruples()) {
        const SymbolVector s = interaction_symbol(q);
        for (auto perm : {std::array<int, 4>{1, 0, 2, 3}, std::array<int, 4>{0, 1, 3, 2}, std::array<int, 4>{1, 0, 3, 2}}) {
            CHECK(interaction_symbol(permuted(q, perm)) == s);
        }
    }
}

TEST_CASE("interaction symbol is homogeneous of degree two")
{
    for (const Rational lambda : {Rational(2), Rational(-3, 7), Rational(5, 2)}) {
        for (const auto mode : {AssemblyMode::Derived, AssemblyMode::Literal}) {
            const SymbolVector s = interaction_symbol(example_quadruple(), mode);
            const SymbolVector t = interaction_symbol(example_quadruple(lambda * default_xi()), mode);
            CHECK(t == (lambda * lambda) * s);
        }
    }
}

TEST_CASE("derived symbols satisfy the constraint at xi")
{
    for (const auto& q : enumerate_valid_quadruples()) {
        CHECK(constraint_membership(interaction_symbol(q).metric, default_xi()));
    }
}

TEST_CASE("span certificate")
{
    const auto valid = enumerate_valid_quadruples();
    const SpanCertificate cert = span_rank_certificate(valid);
    CHECK(cert.rank == 6);
    CHECK(cert.alternate_rank == 9);
    CHECK(cert.scalar_parts_zero);
    CHECK(cert.witness == std::vector<int>{0, 1, 2, 3, 4, 5});
    std::vector<SymbolVector> w;
    for (int i : cert.witness) w.push_back(cert.symbols[i]);
    CHECK(symbol_span_rank(w) == 6);

    const SpanCertificate lit = span_rank_certificate(valid, AssemblyMode::Literal);
    CHECK(lit.rank == 9);
    CHECK(lit.alternate_rank == 6);

    CHECK(span_rank_certificate({}).rank == 0);
    CHECK(span_rank_certificate(std::vector<Quadruple>(9, valid[0])).rank == 1);
}

TEST_CASE("genericity sampling")
{
    const auto a = genericity_sample(42, 20);
    const auto b = genericity_sample(42, 20);
    CHECK(a.accepted == 20);
    CHECK(a.full_rank == b.full_rank);
    CHECK(a.rejected == b.rejected);
    CHECK(a.rank_histogram == b.rank_histogram);
    CHECK(a.fraction() >= 0.9);

    // the census family reaches full rank through the same path
    const auto valid = enumerate_valid_quadruples();
    const SpanCertificate cert = span_rank_certificate(valid);
    QuadrupleFamily fam{valid[cert.witness[0]], valid[cert.witness[1]], valid[cert.witness[2]],
                        valid[cert.witness[3]], valid[cert.witness[4]], valid[cert.witness[5]]};
    for (const auto& q : fam) CHECK(admissible(q));
    CHECK(family_rank(fam) == 6);
}

TEST_CASE("fluid decomposition")
{
    const auto dirs = default_fluid_directions();
    const VecXq mu = fluid_decompose(outer(dirs[0]), dirs);
    CHECK(mu == VecXq::Unit(10, 0));
    CHECK(fluid_decompose(RationalSym2{}, dirs).isZero());

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    const auto extended = [&] { auto e = dirs; e.emplace_back(5, 1, 2, 3); return e; }();
    for (int n = 0; n < 20; ++n) {
        Vec10<Rational> c;
        for (int k = 0; k < 10; ++k) c(k) = Rational(num(rng), den(rng));
        const RationalSym2 P = RationalSym2::from_components(c);
        for (const auto* d : {&dirs, &extended}) {
            const VecXq m = fluid_decompose(P, *d);
            RationalSym2 back;
            for (std::size_t k = 0; k < d->size(); ++k) back += m(static_cast<Eigen::Index>(k)) * outer((*d)[k]);
            CHECK(back == P);
        }
    }
    auto bad = dirs;
    bad[3] = CoVec4q(1, 1, 0, 0);
    CHECK_THROWS_AS(fluid_decompose(RationalSym2{}, bad), PreconditionError);
    std::vector<CoVec4q> few(dirs.begin(), dirs.begin() + 9);
    CHECK_THROWS_AS(fluid_decompose(RationalSym2{}, few), PreconditionError);
    std::vector<CoVec4q> flat(10, CoVec4q(1, 0, 0, 0));
    CHECK_THROWS_AS(fluid_decompose(RationalSym2{}, flat), RankDeficient);
}
