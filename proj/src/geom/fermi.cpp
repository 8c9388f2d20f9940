#include "gwi/geom/fermi.hpp"

#include "gwi/errors.hpp"

#include <cmath>

namespace gwi {

namespace {

// Position, velocity and three transported vectors.
using State = Eigen::Matrix<double, 20, 1>;

State rhs(const SpacetimeSpec& spec, const State& y, int n_vectors)
{
    State out = State::Zero();
    const Vec4d x = y.head<4>();
    const Vec4d v = y.segment<4>(4);
    out.head<4>() = v;
    if (spec.is_flat()) return out;
    const Christoffels G = christoffels(spec, x);
    for (int k = 0; k < 4; ++k) {
        out(4 + k) = -v.dot(G[k] * v);
        for (int j = 0; j < n_vectors; ++j) {
            out(8 + 4 * j + k) = -v.dot(G[k] * y.segment<4>(8 + 4 * j));
        }
    }
    return out;
}

State integrate(const SpacetimeSpec& spec, State y, double t, int steps, int n_vectors)
{
    if (t == 0.0) return y;
    const double h = t / steps;
    for (int i = 0; i < steps; ++i) {
        const State k1 = rhs(spec, y, n_vectors);
        const State k2 = rhs(spec, y + 0.5 * h * k1, n_vectors);
        const State k3 = rhs(spec, y + 0.5 * h * k2, n_vectors);
        const State k4 = rhs(spec, y + h * k3, n_vectors);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

double dot(const Mat4d& g, const Vec4d& a, const Vec4d& b)
{
    return a.dot(g * b);
}

}  // namespace

Frame orthonormal_frame(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& t)
{
    const Mat4d g = spec.metric(x);
    Frame f;
    const double tt = dot(g, t, t);
    if (!(tt < 0)) {
        throw PreconditionError("orthonormal_frame: seed vector is not timelike");
    }
    f[0] = (t(0) > 0 ? 1.0 : -1.0) * t / std::sqrt(-tt);
    int filled = 1;
    for (int axis = 1; axis < 4 && filled < 4; ++axis) {
        Vec4d e = Vec4d::Unit(axis);
        e += dot(g, e, f[0]) * f[0];  // f[0] has norm -1
        for (int j = 1; j < filled; ++j) e -= dot(g, e, f[j]) * f[j];
        const double n = dot(g, e, e);
        if (n <= 1e-14) continue;
        f[filled++] = e / std::sqrt(n);
    }
    if (filled < 4) {
        throw PreconditionError("orthonormal_frame: could not complete the frame");
    }
    return f;
}

FermiChart::FermiChart(SpacetimeSpec spec, Vec4d origin, Frame frame, FermiOptions opts)
    : spec_(std::move(spec)), origin_(std::move(origin)), frame_(std::move(frame)), opts_(opts)
{
    for (int i = 0; i < opts_.n_samples; ++i) {
        const double s = opts_.n_samples == 1 ? 0.0 : opts_.s_extent * i / (opts_.n_samples - 1);
        auto [p, f] = transport(s);
        sample_s_.push_back(s);
        worldline_.push_back(p);
        frames_.push_back(f);
    }
}

std::pair<Vec4d, Frame> FermiChart::transport(double s) const
{
    State y;
    y << origin_, frame_[0], frame_[1], frame_[2], frame_[3];
    y = integrate(spec_, y, s, opts_.steps, 3);
    Frame f{y.segment<4>(4), y.segment<4>(8), y.segment<4>(12), y.segment<4>(16)};
    return {y.head<4>(), f};
}

Vec4d FermiChart::map(const Vec4d& u) const
{
    const auto [p, f] = transport(u(0));
    State y = State::Zero();
    y.head<4>() = p;
    y.segment<4>(4) = u(1) * f[1] + u(2) * f[2] + u(3) * f[3];
    return integrate(spec_, y, 1.0, opts_.steps, 0).head<4>();
}

Mat4d FermiChart::jacobian(const Vec4d& u, double h) const
{
    Mat4d J;
    for (int a = 0; a < 4; ++a) {
        Vec4d up = u, um = u;
        up(a) += h;
        um(a) -= h;
        J.col(a) = (map(up) - map(um)) / (2.0 * h);
    }
    return J;
}

Mat4d FermiChart::pullback_metric(const Vec4d& u) const
{
    const Mat4d J = jacobian(u);
    return J.transpose() * spec_.metric(map(u)) * J;
}

Christoffels FermiChart::pullback_christoffels(const Vec4d& u, double h) const
{
    const Mat4d J = jacobian(u);
    const Vec4d p = map(u);
    const Christoffels G = christoffels(spec_, p);
    const Mat4d Jinv = J.inverse();

    // second derivatives d_b d_c Phi^k
    std::array<std::array<Vec4d, 4>, 4> D2;
    for (int b = 0; b < 4; ++b) {
        for (int c = b; c < 4; ++c) {
            Vec4d d;
            if (b == c) {
                Vec4d up = u, um = u;
                up(b) += h;
                um(b) -= h;
                d = (map(up) - 2.0 * p + map(um)) / (h * h);
            } else {
                Vec4d pp = u, pm = u, mp = u, mm = u;
                pp(b) += h, pp(c) += h;
                pm(b) += h, pm(c) -= h;
                mp(b) -= h, mp(c) += h;
                mm(b) -= h, mm(c) -= h;
                d = (map(pp) - map(pm) - map(mp) + map(mm)) / (4.0 * h * h);
            }
            D2[b][c] = d;
            D2[c][b] = d;
        }
    }
    Christoffels out;
    for (auto& m : out) m.setZero();
    for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
            Vec4d t = D2[b][c];
            for (int k = 0; k < 4; ++k) t(k) += J.col(b).dot(G[k] * J.col(c));
            const Vec4d r = Jinv * t;
            for (int a = 0; a < 4; ++a) out[a](b, c) = r(a);
        }
    }
    return out;
}

FermiChart fermi_chart(const SpacetimeSpec& spec, const Vec4d& x, const Frame& frame, const FermiOptions& opts)
{
    const Mat4d g = spec.metric(x);
    if (!(frame[0](0) > 0)) {
        throw PreconditionError("fermi_chart: X_0 is not future-pointing");
    }
    const Mat4d eta = minkowski<double>();
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (std::abs(dot(g, frame[a], frame[b]) - eta(a, b)) > opts.frame_tol) {
                throw PreconditionError("fermi_chart: frame is not orthonormal at x");
            }
        }
    }
    return FermiChart(spec, x, frame, opts);
}

}  // namespace gwi
