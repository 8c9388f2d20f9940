#ifndef GWI_GEOM_SPACETIME_HPP
#define GWI_GEOM_SPACETIME_HPP

#include "gwi/tensor.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gwi {

using Vec3d = Eigen::Vector3d;

enum class Preset { Minkowski, FlatTorus, ConformalMinkowski, Custom };

std::string to_string(Preset p);

/// Omega(t, y) = sum_k a_k t^k + sum_k b_k |y|^(2k).
struct ConformalFactor {
    std::vector<double> t_coeffs{1.0};
    std::vector<double> r2_coeffs;

    [[nodiscard]] double value(const Vec4d& x) const;
    /// d Omega / d x^mu.
    [[nodiscard]] Vec4d gradient(const Vec4d& x) const;
};

/// dg/dx^mu for mu = 0..3.
using MetricDerivatives = std::array<Mat4d, 4>;

/// Gamma[k](i, j) = Gamma^k_ij.
using Christoffels = std::array<Mat4d, 4>;

/// Immutable description of a globally hyperbolic metric on R x N.
class SpacetimeSpec {
public:
    static SpacetimeSpec minkowski();
    static SpacetimeSpec flat_torus(double l1, double l2, double l3);
    static SpacetimeSpec conformal_minkowski(ConformalFactor omega);
    /// -beta dt^2 + kappa with optional analytic derivatives; derivatives
    /// default to central differences.
    static SpacetimeSpec custom(std::string name, std::function<Mat4d(const Vec4d&)> metric,
                                std::function<MetricDerivatives(const Vec4d&)> derivatives = {});
    static SpacetimeSpec product(std::string name, std::function<double(const Vec4d&)> beta,
                                 std::function<Eigen::Matrix3d(const Vec4d&)> kappa);

    [[nodiscard]] Preset preset() const { return preset_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] bool is_torus() const { return preset_ == Preset::FlatTorus; }
    [[nodiscard]] const Vec3d& lengths() const { return lengths_; }
    [[nodiscard]] const ConformalFactor& omega() const { return omega_; }
    /// Minkowski and flat torus have a flat metric with trivial geodesics.
    [[nodiscard]] bool is_flat() const { return preset_ == Preset::Minkowski || preset_ == Preset::FlatTorus; }

    /// Throws SingularMetric if the metric degenerates at x.
    [[nodiscard]] Mat4d metric(const Vec4d& x) const;
    [[nodiscard]] Mat4d inverse_metric(const Vec4d& x) const;
    [[nodiscard]] MetricDerivatives metric_derivatives(const Vec4d& x) const;

    /// beta > 0 and kappa positive definite at x.
    [[nodiscard]] bool is_lorentzian_split(const Vec4d& x) const;

    /// Spatial coordinates reduced to [0, L_i) on the torus; identity otherwise.
    [[nodiscard]] Vec4d wrap(const Vec4d& x) const;
    /// Spatial displacement reduced to its minimal image on the torus.
    [[nodiscard]] Vec3d minimal_image(const Vec3d& dy) const;

private:
    Preset preset_ = Preset::Minkowski;
    std::string name_ = "minkowski";
    Vec3d lengths_ = Vec3d::Zero();
    ConformalFactor omega_;
    std::function<Mat4d(const Vec4d&)> custom_metric_;
    std::function<MetricDerivatives(const Vec4d&)> custom_derivatives_;
};

/// Uses analytic derivatives when available, else central differences with
/// relative step 1e-5.
Christoffels christoffels(const SpacetimeSpec& spec, const Vec4d& x);

/// Future-pointing null covector at x whose raised vector has time component 1
/// and spatial part along v (v need not be normalized).
Vec4d future_null_covector(const SpacetimeSpec& spec, const Vec4d& x, const Vec3d& v);

/// g^{-1}(xi, xi).
double hamiltonian(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi);

/// g^{-1} xi.
Vec4d raise(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi);

/// Deterministic Fibonacci points on the unit sphere.
std::vector<Vec3d> fibonacci_sphere(int n);

}  // namespace gwi

#endif  // GWI_GEOM_SPACETIME_HPP
