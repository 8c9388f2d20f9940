#include "doctest.h"

#include "gwi/linalg.hpp"

#include <random>

using namespace gwi;

namespace {

// Reference elimination: plain rational RREF, pivoting on the entry of largest
// absolute value. Shares nothing with the fraction-free routine.
int rref_rank(MatXq a)
{
    int r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index best = -1;
        for (Eigen::Index i = r; i < a.rows(); ++i) {
            if (!a(i, c).is_zero() && (best < 0 || a(i, c).abs() > a(best, c).abs())) best = i;
        }
        if (best < 0) continue;
        a.row(r).swap(a.row(best));
        const Rational p = a(r, c);
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(r, j) /= p;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

MatXq random_matrix(std::mt19937_64& rng, int rows, int cols, double zero_prob)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::bernoulli_distribution zero(zero_prob);
    MatXq m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = zero(rng) ? Rational(0) : Rational(num(rng), den(rng));
        }
    }
    // make some rows dependent so that deficient ranks actually occur
    if (rows >= 3 && zero(rng)) {
        m.row(rows - 1) = m.row(0) * Rational(2, 3) - m.row(1) * Rational(5);
    }
    return m;
}

}  // namespace

TEST_CASE("rank_nullspace trivial cases")
{
    const auto id = rank_nullspace(MatXq::Identity(4, 4));
    CHECK(id.rank == 4);
    CHECK(id.nullspace.cols() == 0);

    const auto z = rank_nullspace(MatXq::Zero(4, 10));
    CHECK(z.rank == 0);
    CHECK(z.nullspace.cols() == 10);
    CHECK(z.nullspace == MatXq::Identity(10, 10));
}

TEST_CASE("fraction-free elimination agrees with RREF oracle")
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> dim(1, 12);
    std::uniform_real_distribution<double> sparsity(0.0, 0.7);
    for (int n = 0; n < 200; ++n) {
        const int rows = dim(rng), cols = dim(rng);
        const MatXq m = random_matrix(rng, rows, cols, sparsity(rng));
        const auto rn = rank_nullspace(m);
        REQUIRE(rn.rank == rref_rank(m));
        CHECK(rn.rank + rn.nullspace.cols() == cols);
        CHECK((m * rn.nullspace).isZero());
        if (rn.nullspace.cols() > 0) {
            CHECK(rref_rank(rn.nullspace) == rn.nullspace.cols());
        }
    }
}

TEST_CASE("solve returns an exact solution or reports inconsistency")
{
    std::mt19937_64 rng(5);
    for (int n = 0; n < 50; ++n) {
        const MatXq m = random_matrix(rng, 5, 7, 0.3);
        VecXq x0(7);
        for (int k = 0; k < 7; ++k) x0(k) = Rational(static_cast<long>(rng() % 11) - 5, 3);
        const VecXq b = m * x0;
        const auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m * *x == b);
    }
    MatXq m = MatXq::Zero(2, 2);
    m(0, 0) = Rational(1);
    VecXq b(2);
    b << Rational(1), Rational(1);
    CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("inverse")
{
    std::mt19937_64 rng(9);
    int tested = 0;
    while (tested < 20) {
        const MatXq m = random_matrix(rng, 5, 5, 0.1);
        if (rank(m) < 5) continue;
        CHECK(inverse(m) * m == MatXq::Identity(5, 5));
        ++tested;
    }
    CHECK_THROWS_AS(inverse(MatXq::Zero(3, 3)), NotABasis);
}
