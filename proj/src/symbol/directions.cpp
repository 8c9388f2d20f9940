#include "gwi/symbol/directions.hpp"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"

namespace gwi {

LightDirection::LightDirection(CoVec4q b) : b_(std::move(b))
{
    b_.variance = Variance::Covector;
    if (b_.is_zero()) {
        throw PreconditionError("LightDirection: zero covector");
    }
    for (int i = 0; i < 4; ++i) {
        if (!b_[i].is_integer()) {
            throw PreconditionError("LightDirection: entries must be integers");
        }
    }
    if (!is_lightlike(b_)) {
        throw PreconditionError("LightDirection: covector is not lightlike");
    }
    if (b_[0].sign() <= 0) {
        throw PreconditionError("LightDirection: time component must be positive");
    }
}

LightDirection::LightDirection(long b0, long b1, long b2, long b3) : LightDirection(CoVec4q(b0, b1, b2, b3)) {}

LightDirection primitive_direction(const CoVec4q& b)
{
    mpz_class l = 1;
    for (int i = 0; i < 4; ++i) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].raw().get_den_mpz_t());
    }
    mpz_class g = 0;
    std::array<mpz_class, 4> n;
    for (int i = 0; i < 4; ++i) {
        n[i] = b[i].numerator() * (l / b[i].denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    }
    if (g == 0) {
        throw PreconditionError("primitive_direction: zero covector");
    }
    if (n[0] < 0) g = -g;
    CoVec4q out;
    for (int i = 0; i < 4; ++i) out[i] = Rational(mpz_class(n[i] / g));
    return LightDirection(out);
}

LightDirection pythagorean_direction(const Rational& m, const Rational& n, const Rational& s)
{
    const Rational mn = m * m + n * n;
    return primitive_direction(CoVec4q(s * s + mn, Rational(2) * m * s, Rational(2) * n * s, s * s - mn));
}

std::vector<LightDirection> pythagorean_directions()
{
    std::vector<LightDirection> out;
    for (long m = 1; m <= 3; ++m) {
        for (long n = 1; n <= 2; ++n) {
            out.emplace_back(1 + m * m + n * n, 2 * m, 2 * n, 1 - m * m - n * n);
        }
    }
    return out;
}

bool Quadruple::valid() const
{
    for (const auto& x : r) {
        if (x.is_zero()) return false;
    }
    return true;
}

Quadruple decompose_xi(const std::array<LightDirection, 4>& b, const CoVec4q& xi)
{
    MatXq m(4, 4);
    for (int j = 0; j < 4; ++j) {
        m.col(j) = b[j].covector().c;
    }
    if (rank(m) < 4) {
        throw NotABasis("decompose_xi: directions do not span the fibre");
    }
    const auto sol = solve(m, VecXq(xi.c));
    if (!sol || !(m * *sol == VecXq(xi.c))) {
        throw NotABasis("decompose_xi: back-substitution failed");
    }
    Quadruple q{b, {}, xi};
    for (int j = 0; j < 4; ++j) q.r[j] = (*sol)(j);
    return q;
}

std::string to_string(Rejection r)
{
    switch (r) {
    case Rejection::None: return "none";
    case Rejection::NotABasis: return "not_a_basis";
    case Rejection::ZeroCoefficient: return "zero_coefficient";
    }
    return "unknown";
}

QuadrupleCensus quadruple_census(const std::vector<LightDirection>& dirs, const CoVec4q& xi)
{
    QuadrupleCensus census;
    census.directions = dirs;
    const int n = static_cast<int>(dirs.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    CandidateSubset cand{{a, b, c, d}, Rejection::None, std::nullopt};
                    try {
                        cand.quadruple = decompose_xi({dirs[a], dirs[b], dirs[c], dirs[d]}, xi);
                        if (!cand.quadruple->valid()) {
                            cand.reason = Rejection::ZeroCoefficient;
                        } else {
                            census.valid.push_back(*cand.quadruple);
                        }
                    } catch (const NotABasis&) {
                        cand.reason = Rejection::NotABasis;
                    }
                    census.candidates.push_back(std::move(cand));
                }
            }
        }
    }
    return census;
}

QuadrupleCensus quadruple_census()
{
    return quadruple_census(pythagorean_directions());
}

std::vector<Quadruple> enumerate_valid_quadruples()
{
    return quadruple_census().valid;
}

}  // namespace gwi
