#ifndef GWI_GEOM_OBSERVATION_HPP
#define GWI_GEOM_OBSERVATION_HPP

#include "gwi/geom/causal.hpp"
#include "gwi/geom/flow.hpp"

#include <vector>

namespace gwi {

/// Hollow cylinder {r_min <= |y - center| <= r_max, t_min <= t <= t_max};
/// on the torus |.| is the minimal-image distance.
struct Tube {
    Vec3d center = Vec3d::Zero();
    double r_min = 0.0;
    double r_max = kInfinity;
    double t_min = -kInfinity;
    double t_max = kInfinity;

    [[nodiscard]] bool contains(const SpacetimeSpec& spec, const Vec4d& p) const;
};

struct ObservationSample {
    int dir_index = 0;
    double s = 0.0;
    Vec4d point = Vec4d::Zero();  // unwrapped chart coordinates
    Vec4d xi = Vec4d::Zero();
    bool earliest = false;
};

struct ObservationSet {
    Vec4d source = Vec4d::Zero();
    std::vector<Vec4d> directions;  // initial covectors by dir_index
    std::vector<double> cut_values;
    std::vector<ObservationSample> samples;

    [[nodiscard]] bool empty() const { return samples.empty(); }
    [[nodiscard]] std::vector<Vec4d> points() const;
};

struct ObservationOptions {
    int n_dirs = 200;
    double ds = 0.01;
    /// Integration limit when neither the cut value nor the tube bounds it.
    double s_max = 10.0;
    FlowOptions flow;
};

/// Samples of the light cone of x, up to the cut value of each direction,
/// inside the tube. Directions come from a Fibonacci sphere; the raised
/// initial vector has time component 1.
ObservationSet observation_set(const SpacetimeSpec& spec, const Vec4d& x, const Tube& tube,
                               const ObservationOptions& opts = {});

struct FlowoutOptions {
    int n_samples = 64;  // covectors drawn from the ball
    double ds = 0.02;
    double s_max = 2.0;  // flowed in both directions
    FlowOptions flow;
};

/// pi(Lambda(B_x(xi, delta))) minus J-(x): covectors in the chart-Euclidean
/// delta-ball around xi, projected to the future null cone by solving for the
/// time component, flowed out in both directions. Deterministic.
ObservationSet flowout_set(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, double delta,
                           const FlowoutOptions& opts = {});

/// Symmetric Hausdorff distance between point clouds (Euclidean in chart
/// coordinates, minimal image on the torus).
double hausdorff_distance(const SpacetimeSpec& spec, const std::vector<Vec4d>& a, const std::vector<Vec4d>& b);

/// Distance from p to the nearest point of a cloud.
double distance_to_cloud(const SpacetimeSpec& spec, const Vec4d& p, const std::vector<Vec4d>& cloud);

/// Chart distance, minimal image on the torus.
double chart_distance(const SpacetimeSpec& spec, const Vec4d& a, const Vec4d& b);

}  // namespace gwi

#endif  // GWI_GEOM_OBSERVATION_HPP
