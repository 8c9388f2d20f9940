#include "gwi/geom/arrangement.hpp"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"

#include <cmath>
#include <numbers>

namespace gwi {

namespace {

bool proportional(const CoVec4q& a, const CoVec4q& b)
{
    MatXq m(4, 2);
    m.col(0) = a.c;
    m.col(1) = b.c;
    return rank(m) < 2;
}

double pair_d(const Vec4d& a, const Vec4d& b)
{
    return -a(0) * b(0) + a.tail<3>().dot(b.tail<3>());
}

}  // namespace

PairReport analyze_pair(const LightDirection& bi, const LightDirection& bj, std::array<int, 2> indices)
{
    PairReport r{indices, mink_pair(bi.covector(), bj.covector())};
    // Both generators are null, so the form on the span is 2 a c <b_i, b_j>.
    r.only_generators = !r.cross.is_zero() && !proportional(bi.covector(), bj.covector());
    return r;
}

TripleReport analyze_triple(const LightDirection& bi, const LightDirection& bj, const LightDirection& bk,
                            std::array<int, 3> indices)
{
    TripleReport r;
    r.indices = indices;
    r.a_ij = mink_pair(bi.covector(), bj.covector());
    r.a_ik = mink_pair(bi.covector(), bk.covector());
    r.a_jk = mink_pair(bj.covector(), bk.covector());
    // Gram matrix [[0,Aij,Aik],[Aij,0,Ajk],[Aik,Ajk,0]]
    r.discriminant = Rational(2) * r.a_ij * r.a_ik * r.a_jk;

    // Lines through the conic point (1:0:0): (a : 1 : t).
    for (long t = 1; t <= 8 && !r.witness; ++t) {
        const Rational T(t);
        const Rational den = r.a_ij + T * r.a_ik;
        if (den.is_zero()) continue;
        const Rational a = -T * r.a_jk / den;
        if (a.is_zero()) continue;
        const CoVec4q w = a * bi.covector() + bj.covector() + T * bk.covector();
        if (w.is_zero() || !is_lightlike(w)) continue;
        if (proportional(w, bi.covector()) || proportional(w, bj.covector()) || proportional(w, bk.covector())) continue;
        r.witness = w;
        r.witness_coefficients = {a, Rational(1), T};
    }
    return r;
}

ArrangementReport plane_arrangement_analysis(const std::array<LightDirection, 4>& b, const std::array<Rational, 4>& c)
{
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (proportional(b[i].covector(), b[j].covector())) {
                throw PreconditionError("plane_arrangement_analysis: proportional conormals");
            }
        }
    }
    ArrangementReport rep;
    rep.conormals.assign(b.begin(), b.end());
    rep.offsets = c;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) rep.pairs.push_back(analyze_pair(b[i], b[j], {i, j}));
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) rep.triples.push_back(analyze_triple(b[i], b[j], b[k], {i, j, k}));
        }
    }
    MatXq m(4, 4);
    VecXq rhs(4);
    for (int j = 0; j < 4; ++j) {
        m.row(j) = b[j].covector().c.transpose();
        rhs(j) = c[j];
    }
    rep.quadruple_rank = rank(m);
    if (rep.quadruple_rank == 4) {
        rep.intersection_point = Vec4q(*solve(m, rhs));
    }
    return rep;
}

std::optional<Vec4d> triple_cone_direction(const Vec4d& zi, const Vec4d& zj, const Vec4d& zk, double theta)
{
    const double aij = pair_d(zi, zj), aik = pair_d(zi, zk), ajk = pair_d(zj, zk);
    const double b = std::cos(theta), c = std::sin(theta);
    const double den = b * aij + c * aik;
    const double scale = std::abs(aij) + std::abs(aik) + std::abs(ajk);
    if (std::abs(den) < 1e-9 * scale) return std::nullopt;
    const double a = -b * c * ajk / den;
    const Vec4d eta = a * zi + b * zj + c * zk;
    Vec4d w = minkowski<double>() * eta;
    if (std::abs(w(0)) < 1e-12 * std::max(1.0, w.norm())) return std::nullopt;
    return Vec4d(w / w(0));
}

std::vector<Vec4d> triple_flowout_samples(const Vec4d& p, const Vec4d& axis, const Vec4d& zi, const Vec4d& zj,
                                          const Vec4d& zk, int n_theta, int n_axis, int n_s, double s_max)
{
    std::vector<Vec4d> out;
    for (int it = 0; it < n_theta; ++it) {
        const auto w = triple_cone_direction(zi, zj, zk, std::numbers::pi * it / n_theta);
        if (!w) continue;
        for (int ia = 0; ia < n_axis; ++ia) {
            const double alpha = n_axis == 1 ? 0.0 : (2.0 * ia / (n_axis - 1) - 1.0);
            for (int is = 1; is <= n_s; ++is) {
                out.push_back(p + alpha * axis + (s_max * is / n_s) * *w);
            }
        }
    }
    return out;
}

}  // namespace gwi
