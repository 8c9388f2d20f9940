#include "gwi/geom/spacetime.hpp"

#include "gwi/errors.hpp"

#include <cmath>
#include <numbers>

namespace gwi {

std::string to_string(Preset p)
{
    switch (p) {
    case Preset::Minkowski: return "minkowski";
    case Preset::FlatTorus: return "flat_torus";
    case Preset::ConformalMinkowski: return "conformal_minkowski";
    case Preset::Custom: return "custom";
    }
    return "unknown";
}

double ConformalFactor::value(const Vec4d& x) const
{
    const double r2 = x.tail<3>().squaredNorm();
    double v = 0.0, tp = 1.0, rp = 1.0;
    for (double a : t_coeffs) {
        v += a * tp;
        tp *= x(0);
    }
    for (double b : r2_coeffs) {
        v += b * rp;
        rp *= r2;
    }
    return v;
}

Vec4d ConformalFactor::gradient(const Vec4d& x) const
{
    const double r2 = x.tail<3>().squaredNorm();
    double dt = 0.0, dr2 = 0.0, tp = 1.0, rp = 1.0;
    for (std::size_t k = 1; k < t_coeffs.size(); ++k) {
        dt += static_cast<double>(k) * t_coeffs[k] * tp;
        tp *= x(0);
    }
    for (std::size_t k = 1; k < r2_coeffs.size(); ++k) {
        dr2 += static_cast<double>(k) * r2_coeffs[k] * rp;
        rp *= r2;
    }
    Vec4d g;
    g << dt, 2.0 * dr2 * x(1), 2.0 * dr2 * x(2), 2.0 * dr2 * x(3);
    return g;
}

SpacetimeSpec SpacetimeSpec::minkowski()
{
    return SpacetimeSpec{};
}

SpacetimeSpec SpacetimeSpec::flat_torus(double l1, double l2, double l3)
{
    if (!(l1 > 0 && l2 > 0 && l3 > 0) || !std::isfinite(l1 + l2 + l3)) {
        throw ConfigError("flat_torus: lengths must be positive and finite");
    }
    SpacetimeSpec s;
    s.preset_ = Preset::FlatTorus;
    s.name_ = "flat_torus";
    s.lengths_ = Vec3d(l1, l2, l3);
    return s;
}

SpacetimeSpec SpacetimeSpec::conformal_minkowski(ConformalFactor omega)
{
    if (omega.t_coeffs.empty() && omega.r2_coeffs.empty()) {
        throw ConfigError("conformal_minkowski: empty conformal factor");
    }
    if (!(omega.value(Vec4d::Zero()) > 0)) {
        throw ConfigError("conformal_minkowski: factor must be positive at the origin");
    }
    SpacetimeSpec s;
    s.preset_ = Preset::ConformalMinkowski;
    s.name_ = "conformal_minkowski";
    s.omega_ = std::move(omega);
    return s;
}

SpacetimeSpec SpacetimeSpec::custom(std::string name, std::function<Mat4d(const Vec4d&)> metric,
                                    std::function<MetricDerivatives(const Vec4d&)> derivatives)
{
    if (!metric) {
        throw ConfigError("custom spacetime: metric function missing");
    }
    SpacetimeSpec s;
    s.preset_ = Preset::Custom;
    s.name_ = std::move(name);
    s.custom_metric_ = std::move(metric);
    s.custom_derivatives_ = std::move(derivatives);
    return s;
}

SpacetimeSpec SpacetimeSpec::product(std::string name, std::function<double(const Vec4d&)> beta,
                                     std::function<Eigen::Matrix3d(const Vec4d&)> kappa)
{
    auto metric = [beta = std::move(beta), kappa = std::move(kappa)](const Vec4d& x) {
        Mat4d g = Mat4d::Zero();
        g(0, 0) = -beta(x);
        g.bottomRightCorner<3, 3>() = kappa(x);
        return g;
    };
    return custom(std::move(name), std::move(metric));
}

Mat4d SpacetimeSpec::metric(const Vec4d& x) const
{
    switch (preset_) {
    case Preset::Minkowski:
    case Preset::FlatTorus: return gwi::minkowski<double>();
    case Preset::ConformalMinkowski: {
        const double om = omega_.value(x);
        if (!(om > 0)) {
            throw SingularMetric("conformal factor is not positive at the evaluation point");
        }
        return om * gwi::minkowski<double>();
    }
    case Preset::Custom: return custom_metric_(x);
    }
    throw Unsupported("metric: unknown preset");
}

Mat4d SpacetimeSpec::inverse_metric(const Vec4d& x) const
{
    if (preset_ == Preset::Custom) {
        return detail::invert4(metric(x));
    }
    // The three presets are conformally flat with diagonal inverse.
    const Mat4d g = metric(x);
    return g.diagonal().cwiseInverse().asDiagonal();
}

MetricDerivatives SpacetimeSpec::metric_derivatives(const Vec4d& x) const
{
    MetricDerivatives d;
    switch (preset_) {
    case Preset::Minkowski:
    case Preset::FlatTorus:
        for (auto& m : d) m.setZero();
        return d;
    case Preset::ConformalMinkowski: {
        const Vec4d grad = omega_.gradient(x);
        for (int mu = 0; mu < 4; ++mu) d[mu] = grad(mu) * gwi::minkowski<double>();
        return d;
    }
    case Preset::Custom:
        if (custom_derivatives_) return custom_derivatives_(x);
        for (int mu = 0; mu < 4; ++mu) {
            const double h = 1e-5 * std::max(1.0, std::abs(x(mu)));
            Vec4d xp = x, xm = x;
            xp(mu) += h;
            xm(mu) -= h;
            d[mu] = (custom_metric_(xp) - custom_metric_(xm)) / (2.0 * h);
        }
        return d;
    }
    throw Unsupported("metric_derivatives: unknown preset");
}

bool SpacetimeSpec::is_lorentzian_split(const Vec4d& x) const
{
    const Mat4d g = metric(x);
    if (!(g(0, 0) < 0)) return false;
    Eigen::LLT<Eigen::Matrix3d> llt(g.bottomRightCorner<3, 3>());
    return llt.info() == Eigen::Success;
}

Vec4d SpacetimeSpec::wrap(const Vec4d& x) const
{
    if (!is_torus()) return x;
    Vec4d w = x;
    for (int i = 0; i < 3; ++i) {
        w(i + 1) = x(i + 1) - lengths_(i) * std::floor(x(i + 1) / lengths_(i));
    }
    return w;
}

Vec3d SpacetimeSpec::minimal_image(const Vec3d& dy) const
{
    if (!is_torus()) return dy;
    Vec3d out;
    for (int i = 0; i < 3; ++i) {
        out(i) = dy(i) - lengths_(i) * std::round(dy(i) / lengths_(i));
    }
    return out;
}

Christoffels christoffels(const SpacetimeSpec& spec, const Vec4d& x)
{
    Christoffels G;
    if (spec.is_flat()) {
        for (auto& m : G) m.setZero();
        return G;
    }
    const Mat4d ginv = spec.inverse_metric(x);
    const MetricDerivatives d = spec.metric_derivatives(x);
    // lowered: Gamma_{l ij} = 1/2 (d_i g_lj + d_j g_il - d_l g_ij)
    std::array<Mat4d, 4> low;
    for (int l = 0; l < 4; ++l) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                low[l](i, j) = 0.5 * (d[i](l, j) + d[j](i, l) - d[l](i, j));
            }
        }
    }
    for (int k = 0; k < 4; ++k) {
        G[k].setZero();
        for (int l = 0; l < 4; ++l) {
            if (ginv(k, l) != 0.0) G[k] += ginv(k, l) * low[l];
        }
    }
    return G;
}

Vec4d raise(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi)
{
    return spec.inverse_metric(x) * xi;
}

double hamiltonian(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi)
{
    return xi.dot(spec.inverse_metric(x) * xi);
}

Vec4d future_null_covector(const SpacetimeSpec& spec, const Vec4d& x, const Vec3d& v)
{
    if (v.norm() == 0.0) {
        throw PreconditionError("future_null_covector: zero spatial direction");
    }
    const Mat4d g = spec.metric(x);
    // w = (1, a v) null: g00 + 2 a g0i v^i + a^2 g_ij v^i v^j = 0, take a > 0.
    const double A = v.dot(g.bottomRightCorner<3, 3>() * v);
    const double B = 2.0 * g.block<1, 3>(0, 1).dot(v);
    const double C = g(0, 0);
    const double disc = B * B - 4.0 * A * C;
    if (!(A > 0) || disc < 0) {
        throw SingularMetric("future_null_covector: metric is not Lorentzian at x");
    }
    const double a = (-B + std::sqrt(disc)) / (2.0 * A);
    Vec4d w;
    w << 1.0, a * v;
    return g * w;
}

std::vector<Vec3d> fibonacci_sphere(int n)
{
    std::vector<Vec3d> out;
    if (n <= 0) return out;
    out.reserve(static_cast<std::size_t>(n));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return out;
}

}  // namespace gwi
