#ifndef GWI_SYMBOL_CASCADE_HPP
#define GWI_SYMBOL_CASCADE_HPP

// Principal symbols of the fourfold interaction of four conormal waves. The
// directions are split into the pairs {1,2} and {3,4}; only g_(12), g_(34) and
// the scalar symbols phi_(12j), phi_(34k) are nonzero.

#include "gwi/symbol/directions.hpp"
#include "gwi/tensor.hpp"

#include <array>
#include <string>

namespace gwi {

/// Element of Sym2 (+) Q^L.
struct SymbolVector {
    RationalSym2 metric;
    VecXq scalar;

    [[nodiscard]] int L() const { return static_cast<int>(scalar.size()); }
    /// 10 metric components followed by the L scalar components.
    [[nodiscard]] VecXq stacked() const;
    friend bool operator==(const SymbolVector& a, const SymbolVector& b)
    {
        return a.metric == b.metric && a.scalar == b.scalar;
    }
};

SymbolVector operator*(const Rational& s, const SymbolVector& v);

using PhiChoices = std::array<VecXq, 4>;

/// phi_(1) = phi_(2) = e_1 and phi_(3) = phi_(4) = e_2 in Q^L.
PhiChoices canonical_phi(int L = 4);

/// Indices are 0-based throughout: the pair "12" is (0,1).
class CascadeState {
public:
    int L = 4;
    std::array<CoVec4q, 4> xi;
    PhiChoices phi1;
    RationalSym2 g12, g34;
    /// phi3[j] for j in {2,3} is phi_(01j); for k in {0,1} it is phi_(23k).
    std::array<VecXq, 4> phi3;

    [[nodiscard]] RationalSym2 g1(int) const { return {}; }
    [[nodiscard]] RationalSym2 g2(int j, int k) const;
    [[nodiscard]] VecXq phi2(int, int) const { return VecXq::Zero(L); }
    [[nodiscard]] RationalSym2 g3(int, int, int) const { return {}; }
    /// Any ordering of the three indices is accepted.
    [[nodiscard]] VecXq phi_triple(int a, int b, int c) const;
};

/// Throws NullDenominator (with 1-based indices of the offending eta) when a
/// required eta is lightlike, PreconditionError when q is not valid.
CascadeState cascade_symbols(const Quadruple& q, const PhiChoices& phi);
CascadeState cascade_symbols(const Quadruple& q);

/// Christoffel form G[a][c][b] = 1/2 (eta_a g_cb + eta_b g_ac - eta_c g_ab).
using Christoffel3 = std::array<std::array<std::array<Rational, 4>, 4>, 4>;
Christoffel3 christoffel_form(const CoVec4q& eta, const RationalSym2& g);

/// Literal: the printed sum with unit prefactors on the four
/// eta_(jkl) (x)^ xi_l terms. Derived: each of those terms weighted by the
/// scalar product phi_(jkl) . phi_(l) that multiplies it when the quartic
/// interaction is expanded over its partitions.
enum class AssemblyMode { Literal, Derived };

std::string to_string(AssemblyMode m);

SymbolVector interaction_symbol(const CascadeState& c, AssemblyMode mode = AssemblyMode::Derived);
SymbolVector interaction_symbol(const Quadruple& q, AssemblyMode mode = AssemblyMode::Derived);

}  // namespace gwi

#endif  // GWI_SYMBOL_CASCADE_HPP
