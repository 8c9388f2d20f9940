#include "gwi/symbol/cascade.hpp"

#include "gwi/errors.hpp"

#include <algorithm>

namespace gwi {

namespace {

// q(eta) with the offending direction set attached on failure.
Rational q_checked(const CoVec4q& eta, std::vector<int> indices)
{
    if (is_lightlike(eta)) {
        std::string label;
        for (int i : indices) label += std::to_string(i);
        throw NullDenominator("eta_" + label + " is lightlike", std::move(indices));
    }
    return q_factor(eta);
}

// p(g) at a covector: (g^-1 g g^-1)(eta, eta).
Rational p(const RationalSym2& g, const CoVec4q& eta)
{
    return raised_quadratic(g, eta);
}

// 2 g^{pp} g^{rr} (Ga_prj Gb_prk + Ga_prj Gb_pkr + Ga_prk Gb_pjr), Minkowski
// inverse being diagonal.
Mat4q christoffel_product(const Christoffel3& ga, const Christoffel3& gb)
{
    static const int sig[4] = {-1, 1, 1, 1};
    Mat4q out = Mat4q::Zero();
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            Rational s;
            for (int pp = 0; pp < 4; ++pp) {
                for (int r = 0; r < 4; ++r) {
                    const Rational t = ga[pp][r][j] * gb[pp][r][k] + ga[pp][r][j] * gb[pp][k][r] +
                                       ga[pp][r][k] * gb[pp][j][r];
                    if (t.is_zero()) continue;
                    s += (sig[pp] * sig[r] > 0) ? t : -t;
                }
            }
            out(j, k) = Rational(2) * s;
        }
    }
    return out;
}

}  // namespace

VecXq SymbolVector::stacked() const
{
    VecXq v(10 + L());
    v.head(10) = metric.components();
    v.tail(L()) = scalar;
    return v;
}

SymbolVector operator*(const Rational& s, const SymbolVector& v)
{
    return SymbolVector{s * v.metric, VecXq(v.scalar * s)};
}

PhiChoices canonical_phi(int L)
{
    if (L < 2) {
        throw PreconditionError("canonical_phi: L must be at least 2");
    }
    const VecXq e1 = VecXq::Unit(L, 0);
    const VecXq e2 = VecXq::Unit(L, 1);
    return {e1, e1, e2, e2};
}

RationalSym2 CascadeState::g2(int j, int k) const
{
    if (j > k) std::swap(j, k);
    if (j == 0 && k == 1) return g12;
    if (j == 2 && k == 3) return g34;
    return {};
}

VecXq CascadeState::phi_triple(int a, int b, int c) const
{
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == 0 && t[1] == 1) return phi3[t[2]];  // (01j), j in {2,3}
    if (t[1] == 2 && t[2] == 3) return phi3[t[0]];  // (23k), k in {0,1}
    return VecXq::Zero(L);
}

CascadeState cascade_symbols(const Quadruple& q, const PhiChoices& phi)
{
    if (!q.valid()) {
        throw PreconditionError("cascade_symbols: quadruple has a zero coefficient");
    }
    CascadeState s;
    s.L = static_cast<int>(phi[0].size());
    for (const auto& f : phi) {
        if (f.size() != s.L) {
            throw PreconditionError("cascade_symbols: phi choices differ in length");
        }
    }
    s.phi1 = phi;
    for (int j = 0; j < 4; ++j) s.xi[j] = q.xi_j(j);

    const CoVec4q eta12 = s.xi[0] + s.xi[1];
    const CoVec4q eta34 = s.xi[2] + s.xi[3];
    s.g12 = (Rational(-2) * q_checked(eta12, {1, 2})) * sym_outer(s.xi[0], s.xi[1]);
    s.g34 = (Rational(-2) * q_checked(eta34, {3, 4})) * sym_outer(s.xi[2], s.xi[3]);

    for (int j : {2, 3}) {
        const Rational f = q_checked(eta12 + s.xi[j], {1, 2, j + 1}) * p(s.g12, s.xi[j]);
        s.phi3[j] = phi[j] * f;
    }
    for (int k : {0, 1}) {
        const Rational f = q_checked(eta34 + s.xi[k], {3, 4, k + 1}) * p(s.g34, s.xi[k]);
        s.phi3[k] = phi[k] * f;
    }
    return s;
}

CascadeState cascade_symbols(const Quadruple& q)
{
    return cascade_symbols(q, canonical_phi());
}

Christoffel3 christoffel_form(const CoVec4q& eta, const RationalSym2& g)
{
    Christoffel3 out;
    const Rational half(1, 2);
    for (int a = 0; a < 4; ++a) {
        for (int c = 0; c < 4; ++c) {
            for (int b = 0; b < 4; ++b) {
                out[a][c][b] = half * (eta[a] * g(c, b) + eta[b] * g(a, c) - eta[c] * g(a, b));
            }
        }
    }
    return out;
}

std::string to_string(AssemblyMode m)
{
    return m == AssemblyMode::Literal ? "literal" : "derived";
}

SymbolVector interaction_symbol(const CascadeState& c, AssemblyMode mode)
{
    const auto& xi = c.xi;
    const CoVec4q eta12 = xi[0] + xi[1];
    const CoVec4q eta34 = xi[2] + xi[3];

    RationalSym2 h = p(c.g12, eta34) * c.g34 + p(c.g34, eta12) * c.g12;

    struct Term {
        std::array<int, 3> triple;
        int l;
    };
    static constexpr Term terms[4] = {{{0, 1, 2}, 3}, {{0, 1, 3}, 2}, {{2, 3, 0}, 1}, {{2, 3, 1}, 0}};
    for (const auto& t : terms) {
        const CoVec4q eta = xi[t.triple[0]] + xi[t.triple[1]] + xi[t.triple[2]];
        Rational coeff(1);
        if (mode == AssemblyMode::Derived) {
            coeff = c.phi_triple(t.triple[0], t.triple[1], t.triple[2]).dot(c.phi1[t.l]);
        }
        if (coeff.is_zero()) continue;
        h -= (Rational(2) * coeff) * sym_outer(eta, xi[t.l]);
    }

    const Christoffel3 ga = christoffel_form(eta12, c.g12);
    const Christoffel3 gb = christoffel_form(eta34, c.g34);
    // Neither ordering is symmetric in (j,k) on its own; their sum is.
    h += RationalSym2::from_matrix(Mat4q(christoffel_product(ga, gb) + christoffel_product(gb, ga)));

    // Scalar block: every partition of {1,2,3,4} into a metric factor and a
    // scalar factor. Each one carries a vanishing symbol in the cascade.
    VecXq scalar = VecXq::Zero(c.L);
    for (int m = 0; m < 4; ++m) {
        std::array<int, 3> rest{};
        int n = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != m) rest[n++] = i;
        }
        const CoVec4q eta_rest = xi[rest[0]] + xi[rest[1]] + xi[rest[2]];
        scalar += c.phi_triple(rest[0], rest[1], rest[2]) * p(c.g1(m), eta_rest);
        scalar += c.phi1[m] * p(c.g3(rest[0], rest[1], rest[2]), xi[m]);
    }
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            std::array<int, 2> other{};
            int n = 0;
            for (int i = 0; i < 4; ++i) {
                if (i != j && i != k) other[n++] = i;
            }
            scalar += c.phi2(other[0], other[1]) * p(c.g2(j, k), xi[other[0]] + xi[other[1]]);
        }
    }
    return SymbolVector{h, scalar};
}

SymbolVector interaction_symbol(const Quadruple& q, AssemblyMode mode)
{
    return interaction_symbol(cascade_symbols(q), mode);
}

}  // namespace gwi
