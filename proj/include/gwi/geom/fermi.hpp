#ifndef GWI_GEOM_FERMI_HPP
#define GWI_GEOM_FERMI_HPP

#include "gwi/geom/spacetime.hpp"

#include <array>
#include <vector>

namespace gwi {

using Frame = std::array<Vec4d, 4>;

/// Gram-Schmidt in the metric at x starting from the timelike vector t and
/// the coordinate axes. Result is future-directed and orthonormal.
Frame orthonormal_frame(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& t = Vec4d(1, 0, 0, 0));

struct FermiOptions {
    /// Fixed RK4 steps per unit of integration; a fixed count keeps the chart
    /// map smooth so finite differences of it are meaningful.
    int steps = 200;
    double frame_tol = 1e-10;
    /// Worldline samples stored for inspection, over s in [0, s_extent].
    int n_samples = 11;
    double s_extent = 1.0;
};

/// Phi(s, y) = exp_{mu(s)}(y^j Y_j(s)) with mu the timelike geodesic through
/// x with velocity X_0 and Y_j the parallel transports of X_j.
class FermiChart {
public:
    FermiChart(SpacetimeSpec spec, Vec4d origin, Frame frame, FermiOptions opts);

    [[nodiscard]] const Vec4d& origin() const { return origin_; }
    [[nodiscard]] const Frame& frame() const { return frame_; }
    [[nodiscard]] const std::vector<double>& sample_parameters() const { return sample_s_; }
    [[nodiscard]] const std::vector<Vec4d>& worldline() const { return worldline_; }
    [[nodiscard]] const std::vector<Frame>& transported_frames() const { return frames_; }

    /// Worldline point and transported frame at parameter s.
    [[nodiscard]] std::pair<Vec4d, Frame> transport(double s) const;

    /// u = (s, y1, y2, y3).
    [[nodiscard]] Vec4d map(const Vec4d& u) const;
    /// dPhi^i / du^a by central differences.
    [[nodiscard]] Mat4d jacobian(const Vec4d& u, double h = 1e-5) const;
    [[nodiscard]] Mat4d pullback_metric(const Vec4d& u) const;
    /// Christoffel symbols of the pullback metric at u, Gamma[a](b, c).
    [[nodiscard]] Christoffels pullback_christoffels(const Vec4d& u, double h = 1e-3) const;

private:
    SpacetimeSpec spec_;
    Vec4d origin_;
    Frame frame_;
    FermiOptions opts_;
    std::vector<double> sample_s_;
    std::vector<Vec4d> worldline_;
    std::vector<Frame> frames_;
};

/// Throws PreconditionError unless frame[0] is future timelike and the frame
/// is orthonormal at x to opts.frame_tol.
FermiChart fermi_chart(const SpacetimeSpec& spec, const Vec4d& x, const Frame& frame, const FermiOptions& opts = {});

}  // namespace gwi

#endif  // GWI_GEOM_FERMI_HPP
