#include "gwi/geom/causal.hpp"

#include "gwi/errors.hpp"

#include <cmath>

namespace gwi {

namespace {

// Squared-interval margin separating "on the cone" from "inside": rounding in
// dt^2 - |dy|^2 for exactly null pairs is far below this.
constexpr double kConeMargin = 1e-12;

void require_causal_oracle(const SpacetimeSpec& spec)
{
    if (spec.preset() == Preset::Custom) {
        throw Unsupported("causal relations are only available on the preset spacetimes");
    }
}

// Largest dt^2 - |dy + k L|^2 over the relevant translates.
double best_interval(const SpacetimeSpec& spec, double dt, const Vec3d& dy)
{
    if (!spec.is_torus()) return dt * dt - dy.squaredNorm();
    const Vec3d base = spec.minimal_image(dy);
    const Vec3d& L = spec.lengths();
    Eigen::Vector3i K;
    for (int i = 0; i < 3; ++i) K(i) = static_cast<int>(std::ceil(std::abs(dt) / L(i))) + 1;
    double best = -kInfinity;
    for (int a = -K(0); a <= K(0); ++a) {
        for (int b = -K(1); b <= K(1); ++b) {
            for (int c = -K(2); c <= K(2); ++c) {
                const Vec3d d = base - Vec3d(a * L(0), b * L(1), c * L(2));
                best = std::max(best, dt * dt - d.squaredNorm());
            }
        }
    }
    return best;
}

}  // namespace

double time_separation(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q)
{
    if (!spec.is_flat()) {
        throw Unsupported("time_separation: only minkowski and flat_torus have a time separation oracle");
    }
    const double dt = q(0) - p(0);
    if (dt <= 0) return 0.0;
    const double iv = best_interval(spec, dt, (q - p).tail<3>());
    return iv > kConeMargin * std::max(1.0, dt * dt) ? std::sqrt(iv) : 0.0;
}

bool chronological(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q)
{
    require_causal_oracle(spec);
    const double dt = q(0) - p(0);
    if (dt <= 0) return false;
    return best_interval(spec, dt, (q - p).tail<3>()) > kConeMargin * std::max(1.0, dt * dt);
}

bool causal(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q, double tol)
{
    require_causal_oracle(spec);
    const double dt = q(0) - p(0);
    if (dt < -tol) return false;
    if (!spec.is_torus()) return dt + tol >= (q - p).tail<3>().norm();
    const double iv = best_interval(spec, std::max(dt, 0.0) + tol, (q - p).tail<3>());
    return iv >= 0.0;
}

Chronology chronological_relation(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q)
{
    if (chronological(spec, p, q)) return Chronology::Precedes;
    if (chronological(spec, q, p)) return Chronology::Follows;
    return Chronology::Incomparable;
}

bool in_diamond(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q, const Vec4d& r)
{
    return chronological(spec, p, q) && chronological(spec, q, r);
}

double cut_value(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, const CutOptions& opts)
{
    require_causal_oracle(spec);
    const Vec4d v = raise(spec, x, xi);
    if (!(v(0) > 0)) {
        throw PreconditionError("cut_value: covector is not future-pointing");
    }
    // Minkowski and its conformal class have no cut points.
    if (spec.preset() != Preset::FlatTorus) return kInfinity;
    double s_max = opts.s_max;
    if (s_max <= 0) {
        // Past this parameter the geodesic has crossed the largest period.
        s_max = 4.0 * spec.lengths().maxCoeff() / v(0);
    }
    auto inside = [&](double s) { return chronological(spec, x, flow_to(spec, x, xi, s).x); };
    if (!inside(s_max)) return kInfinity;
    double lo = 0.0, hi = s_max;
    while (hi - lo > 0.25 * opts.tol) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace gwi
