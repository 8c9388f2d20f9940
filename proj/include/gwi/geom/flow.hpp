#ifndef GWI_GEOM_FLOW_HPP
#define GWI_GEOM_FLOW_HPP

#include "gwi/geom/spacetime.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace gwi {

/// Point of the cotangent bundle along a bicharacteristic, x unwrapped.
struct BicharState {
    double s = 0.0;
    Vec4d x = Vec4d::Zero();
    Vec4d xi = Vec4d::Zero();
};

struct FlowOptions {
    double tol = 1e-9;      // local error per step and Hamiltonian drift budget
    double h_initial = 1e-2;
    double h_max = 0.25;
    double h_min = 1e-12;
    /// Re-project onto the null cone when |H| exceeds tol / 2. Only applied to
    /// trajectories that start null.
    bool reproject = true;
};

/// Hamiltonian flow of H = 1/2 g^{-1}(xi, xi): dx/ds = g^{-1} xi,
/// dxi_k/ds = 1/2 (g^{-1} xi)^T d_k g (g^{-1} xi). Adaptive RK4 with step
/// doubling. s_max may be negative. Returns every accepted step including
/// both endpoints. Throws IntegrationError on step underflow.
std::vector<BicharState> geodesic_flow(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s_max,
                                       const FlowOptions& opts = {});

/// Final state of the flow at parameter s.
BicharState flow_to(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s,
                    const FlowOptions& opts = {});

/// States at s = 0, ds, 2 ds, ... up to s_max (inclusive, last step clipped).
std::vector<BicharState> flow_samples(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double s_max,
                                      double ds, const FlowOptions& opts = {});

/// Fibre endomorphism c along the bicharacteristic.
using FibreEndomorphism = std::function<Eigen::MatrixXcd(const BicharState&)>;

/// Solves dq/ds = -i c q along a sampled segment (states interpolated
/// linearly between samples, RK4 with `substeps` per sample interval). An
/// empty c is the flat default c = 0. Passing the reversed segment runs the
/// transport backwards.
Eigen::VectorXcd symbol_transport(const std::vector<BicharState>& segment, const FibreEndomorphism& c,
                                  const Eigen::VectorXcd& q0, int substeps = 16);

}  // namespace gwi

#endif  // GWI_GEOM_FLOW_HPP
