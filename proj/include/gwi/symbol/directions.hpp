#ifndef GWI_SYMBOL_DIRECTIONS_HPP
#define GWI_SYMBOL_DIRECTIONS_HPP

#include "gwi/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gwi {

/// Integer null covector with b^0 > 0.
class LightDirection {
public:
    /// Throws PreconditionError unless b is nonzero, lightlike, integral and b_0 > 0.
    explicit LightDirection(CoVec4q b);
    LightDirection(long b0, long b1, long b2, long b3);

    [[nodiscard]] const CoVec4q& covector() const { return b_; }
    const Rational& operator[](int i) const { return b_[i]; }
    friend bool operator==(const LightDirection&, const LightDirection&) = default;

private:
    CoVec4q b_;
};

/// Scales a rational null covector to the primitive integer direction with
/// positive time component.
LightDirection primitive_direction(const CoVec4q& b);

/// (s^2 + m^2 + n^2, 2ms, 2ns, s^2 - m^2 - n^2), made primitive.
LightDirection pythagorean_direction(const Rational& m, const Rational& n, const Rational& s);

/// m = 1,2,3; n = 1,2; s = 1, in lexicographic (m, n) order.
std::vector<LightDirection> pythagorean_directions();

inline CoVec4q default_xi() { return CoVec4q(1, 1, 0, 0); }

struct Quadruple {
    std::array<LightDirection, 4> b;
    std::array<Rational, 4> r;
    CoVec4q xi;

    /// xi_j = r_j b_j.
    [[nodiscard]] CoVec4q xi_j(int j) const { return r[j] * b[j].covector(); }
    /// All r_j nonzero.
    [[nodiscard]] bool valid() const;
};

/// Solves xi = sum r_j b_j exactly. Throws NotABasis if the b_j are dependent.
Quadruple decompose_xi(const std::array<LightDirection, 4>& b, const CoVec4q& xi = default_xi());

enum class Rejection { None, NotABasis, ZeroCoefficient };

std::string to_string(Rejection r);

struct CandidateSubset {
    std::array<int, 4> indices;
    Rejection reason = Rejection::None;
    std::optional<Quadruple> quadruple;  // absent only for NotABasis
};

struct QuadrupleCensus {
    std::vector<LightDirection> directions;
    std::vector<CandidateSubset> candidates;
    std::vector<Quadruple> valid;
};

/// Walks every 4-element subset of `dirs` in lexicographic index order.
QuadrupleCensus quadruple_census(const std::vector<LightDirection>& dirs, const CoVec4q& xi = default_xi());
QuadrupleCensus quadruple_census();

std::vector<Quadruple> enumerate_valid_quadruples();

}  // namespace gwi

#endif  // GWI_SYMBOL_DIRECTIONS_HPP
