#ifndef GWI_GEOM_ARRANGEMENT_HPP
#define GWI_GEOM_ARRANGEMENT_HPP

// Exact analysis of four null hyperplanes {b_j . x = c_j} in Minkowski space:
// which lightlike covectors live in the conormal spans of their intersections.

#include "gwi/geom/spacetime.hpp"
#include "gwi/symbol/directions.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gwi {

/// g^{-1}(a b_i + c b_j) = 2 a c <b_i, b_j>, so for <b_i, b_j> != 0 the only
/// lightlike elements of the span are the two generating lines.
struct PairReport {
    std::array<int, 2> indices;
    Rational cross;  // <b_i, b_j>
    bool only_generators = false;
};

/// Lightlike conic in span{b_i, b_j, b_k}: a b_i + b b_j + c b_k is null iff
/// a b A_ij + a c A_ik + b c A_jk = 0.
struct TripleReport {
    std::array<int, 3> indices;
    Rational a_ij, a_ik, a_jk;
    /// Determinant of the 3x3 Gram matrix; nonzero means a smooth conic.
    Rational discriminant;
    /// Null covector in the span proportional to none of the three generators.
    std::optional<CoVec4q> witness;
    std::array<Rational, 3> witness_coefficients;
};

struct ArrangementReport {
    std::vector<LightDirection> conormals;
    std::array<Rational, 4> offsets;
    std::vector<PairReport> pairs;
    std::vector<TripleReport> triples;
    /// Rank of the four conormals; 4 means the planes meet in one point whose
    /// conormal fibre is all of T*_x and so contains the whole light cone.
    int quadruple_rank = 0;
    std::optional<Vec4q> intersection_point;
};

PairReport analyze_pair(const LightDirection& bi, const LightDirection& bj, std::array<int, 2> indices = {0, 1});
TripleReport analyze_triple(const LightDirection& bi, const LightDirection& bj, const LightDirection& bk,
                            std::array<int, 3> indices = {0, 1, 2});

/// Throws PreconditionError when two conormals are proportional.
ArrangementReport plane_arrangement_analysis(const std::array<LightDirection, 4>& b,
                                             const std::array<Rational, 4>& c = {});

/// Future-pointing null covectors in span{z_i, z_j, z_k} of three null
/// covectors, parametrized by theta in [0, pi): (b, c) = (cos, sin) and
/// a = -b c A_jk / (b A_ij + c A_ik). Returns the raised vector scaled to
/// unit time component, or nullopt near the pole of the parametrization.
std::optional<Vec4d> triple_cone_direction(const Vec4d& zi, const Vec4d& zj, const Vec4d& zk, double theta);

/// Points p + s w on the flowout of the triple-interaction line
/// K_i cap K_j cap K_k (a line through p along `axis`): for each sampled
/// axis offset and theta, the null ray with direction from the triple span.
std::vector<Vec4d> triple_flowout_samples(const Vec4d& p, const Vec4d& axis, const Vec4d& zi, const Vec4d& zj,
                                          const Vec4d& zk, int n_theta, int n_axis, int n_s, double s_max);

}  // namespace gwi

#endif  // GWI_GEOM_ARRANGEMENT_HPP
