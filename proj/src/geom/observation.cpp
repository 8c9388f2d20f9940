#include "gwi/geom/observation.hpp"

#include "gwi/errors.hpp"

#include <cmath>

namespace gwi {

bool Tube::contains(const SpacetimeSpec& spec, const Vec4d& p) const
{
    if (p(0) < t_min || p(0) > t_max) return false;
    const double r = spec.minimal_image(p.tail<3>() - center).norm();
    return r >= r_min && r <= r_max;
}

std::vector<Vec4d> ObservationSet::points() const
{
    std::vector<Vec4d> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.point);
    return out;
}

double chart_distance(const SpacetimeSpec& spec, const Vec4d& a, const Vec4d& b)
{
    const double dt = a(0) - b(0);
    const Vec3d dy = spec.minimal_image(a.tail<3>() - b.tail<3>());
    return std::sqrt(dt * dt + dy.squaredNorm());
}

double distance_to_cloud(const SpacetimeSpec& spec, const Vec4d& p, const std::vector<Vec4d>& cloud)
{
    double best = kInfinity;
    for (const auto& q : cloud) best = std::min(best, chart_distance(spec, p, q));
    return best;
}

double hausdorff_distance(const SpacetimeSpec& spec, const std::vector<Vec4d>& a, const std::vector<Vec4d>& b)
{
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return kInfinity;
    double h = 0.0;
    for (const auto& p : a) h = std::max(h, distance_to_cloud(spec, p, b));
    for (const auto& q : b) h = std::max(h, distance_to_cloud(spec, q, a));
    return h;
}

ObservationSet observation_set(const SpacetimeSpec& spec, const Vec4d& x, const Tube& tube,
                               const ObservationOptions& opts)
{
    ObservationSet out;
    out.source = x;
    const auto dirs = fibonacci_sphere(opts.n_dirs);
    for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
        const Vec4d xi = future_null_covector(spec, x, dirs[i]);
        const double rho = cut_value(spec, x, xi);
        out.directions.push_back(xi);
        out.cut_values.push_back(rho);
        if (x(0) > tube.t_max) continue;

        const double s_end = std::min(rho, opts.s_max);
        BicharState cur{0.0, x, xi};
        bool seen = false;
        for (long k = 0;; ++k) {
            if (k > 0) {
                const double target = std::min(s_end, static_cast<double>(k) * opts.ds);
                BicharState next = flow_to(spec, cur.x, cur.xi, target - cur.s, opts.flow);
                next.s = target;
                cur = next;
            }
            if (cur.x(0) > tube.t_max) break;
            if (tube.contains(spec, cur.x)) {
                out.samples.push_back(ObservationSample{i, cur.s, cur.x, cur.xi, !seen});
                seen = true;
            }
            if (cur.s >= s_end) break;
        }
    }
    return out;
}

namespace {

double halton(int index, int base)
{
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

// Replaces the time component so that xi is null with future-pointing raise.
Vec4d future_null_projection(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& eta)
{
    const Mat4d gi = spec.inverse_metric(x);
    const Vec3d sp = eta.tail<3>();
    const double a = gi(0, 0);
    const double b = 2.0 * gi.block<1, 3>(0, 1).dot(sp);
    const double c = sp.dot(gi.bottomRightCorner<3, 3>() * sp);
    const double disc = b * b - 4.0 * a * c;
    if (a == 0.0 || disc < 0.0 || sp.norm() == 0.0) {
        throw PreconditionError("flowout_set: cannot project covector onto the null cone");
    }
    for (double sign : {1.0, -1.0}) {
        Vec4d out = eta;
        out(0) = (-b + sign * std::sqrt(disc)) / (2.0 * a);
        if ((gi * out)(0) > 0) return out;
    }
    throw PreconditionError("flowout_set: no future-pointing projection");
}

}  // namespace

ObservationSet flowout_set(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double delta,
                           const FlowoutOptions& opts)
{
    if (!(delta > 0)) {
        throw PreconditionError("flowout_set: delta must be positive");
    }
    if (std::abs(hamiltonian(spec, x, xi)) > 1e-9 * std::max(1.0, xi.squaredNorm())) {
        throw PreconditionError("flowout_set: xi is not lightlike");
    }
    ObservationSet out;
    out.source = x;

    std::vector<Vec4d> ball{Vec4d::Zero()};
    for (int i = 1; static_cast<int>(ball.size()) < opts.n_samples; ++i) {
        Vec4d u(halton(i, 2), halton(i, 3), halton(i, 5), halton(i, 7));
        u = 2.0 * u - Vec4d::Ones();
        if (u.squaredNorm() <= 1.0) ball.push_back(u);
    }
    for (int i = 0; i < static_cast<int>(ball.size()); ++i) {
        const Vec4d eta = future_null_projection(spec, x, xi + delta * ball[i]);
        out.directions.push_back(eta);
        out.cut_values.push_back(kInfinity);
        for (double sign : {-1.0, 1.0}) {
            for (const auto& st : flow_samples(spec, x, eta, sign * opts.s_max, opts.ds, opts.flow)) {
                if (sign < 0 && st.s == 0.0) continue;
                if (causal(spec, st.x, x)) continue;  // J-(x), including x itself
                out.samples.push_back(ObservationSample{i, st.s, st.x, st.xi, false});
            }
        }
    }
    return out;
}

}  // namespace gwi
