#include "gwi/geom/flow.hpp"

#include "gwi/errors.hpp"

#include <cmath>

namespace gwi {

namespace {

using State = Eigen::Matrix<double, 8, 1>;

State pack(const Vec4d& x, const Vec4d& xi)
{
    State y;
    y << x, xi;
    return y;
}

State rhs(const SpacetimeSpec& spec, const State& y)
{
    const Vec4d x = y.head<4>();
    const Vec4d xi = y.tail<4>();
    const Vec4d v = spec.inverse_metric(x) * xi;
    State out;
    out.head<4>() = v;
    if (spec.is_flat()) {
        out.tail<4>().setZero();
        return out;
    }
    const MetricDerivatives d = spec.metric_derivatives(x);
    for (int k = 0; k < 4; ++k) {
        out(4 + k) = 0.5 * v.dot(d[k] * v);
    }
    return out;
}

State rk4(const SpacetimeSpec& spec, const State& y, double h)
{
    const State k1 = rhs(spec, y);
    const State k2 = rhs(spec, y + 0.5 * h * k1);
    const State k3 = rhs(spec, y + 0.5 * h * k2);
    const State k4 = rhs(spec, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Restores g^{-1}(xi, xi) = 0 by solving for xi_0, keeping the root nearest
// the current value.
void reproject_null(const SpacetimeSpec& spec, State& y)
{
    const Vec4d x = y.head<4>();
    const Mat4d gi = spec.inverse_metric(x);
    const Vec3d sp = y.segment<3>(5);
    const double a = gi(0, 0);
    const double b = 2.0 * gi.block<1, 3>(0, 1).dot(sp);
    const double c = sp.dot(gi.bottomRightCorner<3, 3>() * sp);
    const double disc = b * b - 4.0 * a * c;
    if (a == 0.0 || disc < 0.0) return;
    const double r1 = (-b + std::sqrt(disc)) / (2.0 * a);
    const double r2 = (-b - std::sqrt(disc)) / (2.0 * a);
    y(4) = std::abs(r1 - y(4)) < std::abs(r2 - y(4)) ? r1 : r2;
}

template <typename Visit>
void integrate(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s_end, const FlowOptions& opts,
               Visit&& visit)
{
    if (xi.norm() == 0.0) {
        throw PreconditionError("geodesic flow: xi = 0");
    }
    State y = pack(x, xi);
    const double h0 = std::abs(hamiltonian(spec, x, xi));
    const bool null_start = h0 <= opts.tol * std::max(1.0, xi.squaredNorm());
    const double dir = s_end >= 0 ? 1.0 : -1.0;
    double s = 0.0;
    double h = std::min(opts.h_initial, opts.h_max);
    visit(s, y);
    while (dir * (s_end - s) > 0) {
        double step = std::min(h, dir * (s_end - s));
        if (step < opts.h_min) {
            if (dir * (s_end - s) < opts.h_min) break;
            throw IntegrationError("geodesic flow: step size underflow at s = " + std::to_string(s));
        }
        const State full = rk4(spec, y, dir * step);
        const State half = rk4(spec, rk4(spec, y, 0.5 * dir * step), 0.5 * dir * step);
        const double err = (half - full).cwiseAbs().maxCoeff() / 15.0;
        // error per unit parameter, so the accumulated drift over |s_end| stays below tol
        const double scale = 0.1 * step * std::max(1.0, y.cwiseAbs().maxCoeff()) / std::max(1.0, std::abs(s_end));
        if (!std::isfinite(err)) {
            throw IntegrationError("geodesic flow: non-finite state at s = " + std::to_string(s));
        }
        if (err <= opts.tol * scale) {
            y = half;
            s += dir * step;
            if (dir * (s_end - s) <= 0) s = s_end;
            if (opts.reproject && null_start) {
                const double H = hamiltonian(spec, y.head<4>(), y.tail<4>());
                if (std::abs(H) > 0.5 * opts.tol) reproject_null(spec, y);
            }
            visit(s, y);
        }
        const double factor = err == 0.0 ? 4.0 : std::clamp(0.9 * std::pow(opts.tol * scale / err, 0.2), 0.1, 4.0);
        h = std::min(opts.h_max, step * factor);
    }
}

BicharState to_state(double s, const State& y)
{
    return BicharState{s, y.head<4>(), y.tail<4>()};
}

}  // namespace

std::vector<BicharState> geodesic_flow(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s_max,
                                       const FlowOptions& opts)
{
    std::vector<BicharState> out;
    integrate(spec, x, xi, s_max, opts, [&](double s, const State& y) { out.push_back(to_state(s, y)); });
    return out;
}

BicharState flow_to(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s, const FlowOptions& opts)
{
    if (spec.is_flat()) {
        if (xi.norm() == 0.0) {
            throw PreconditionError("geodesic flow: xi = 0");
        }
        // Exact for constant coefficients; RK4 would reproduce it anyway.
        return BicharState{s, x + s * spec.inverse_metric(x) * xi, xi};
    }
    BicharState last;
    integrate(spec, x, xi, s, opts, [&](double t, const State& y) { last = to_state(t, y); });
    return last;
}

std::vector<BicharState> flow_samples(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s_max,
                                      double ds, const FlowOptions& opts)
{
    if (!(ds > 0)) {
        throw PreconditionError("flow_samples: ds must be positive");
    }
    std::vector<BicharState> out;
    const double dir = s_max >= 0 ? 1.0 : -1.0;
    const auto n = static_cast<long>(std::ceil(std::abs(s_max) / ds - 1e-12));
    BicharState cur{0.0, x, xi};
    out.push_back(cur);
    for (long i = 1; i <= n; ++i) {
        const double target = dir * std::min(std::abs(s_max), static_cast<double>(i) * ds);
        BicharState next = flow_to(spec, cur.x, cur.xi, target - cur.s, opts);
        next.s = target;
        out.push_back(next);
        cur = next;
    }
    return out;
}

Eigen::VectorXcd symbol_transport(const std::vector<BicharState>& segment, const FibreEndomorphism& c,
                                  const Eigen::VectorXcd& q0, int substeps)
{
    if (!c || segment.size() < 2) return q0;
    const std::complex<double> minus_i(0.0, -1.0);
    auto interp = [&](std::size_t i, double f) {
        const BicharState& a = segment[i];
        const BicharState& b = segment[i + 1];
        return BicharState{a.s + f * (b.s - a.s), a.x + f * (b.x - a.x), a.xi + f * (b.xi - a.xi)};
    };
    auto f = [&](std::size_t i, double frac, const Eigen::VectorXcd& q) -> Eigen::VectorXcd {
        return minus_i * (c(interp(i, frac)) * q);
    };
    Eigen::VectorXcd q = q0;
    for (std::size_t i = 0; i + 1 < segment.size(); ++i) {
        const double h = (segment[i + 1].s - segment[i].s) / substeps;
        for (int k = 0; k < substeps; ++k) {
            const double f0 = static_cast<double>(k) / substeps;
            const double fm = (k + 0.5) / substeps;
            const double f1 = static_cast<double>(k + 1) / substeps;
            const Eigen::VectorXcd k1 = f(i, f0, q);
            const Eigen::VectorXcd k2 = f(i, fm, q + 0.5 * h * k1);
            const Eigen::VectorXcd k3 = f(i, fm, q + 0.5 * h * k2);
            const Eigen::VectorXcd k4 = f(i, f1, q + h * k3);
            q += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    return q;
}

}  // namespace gwi
