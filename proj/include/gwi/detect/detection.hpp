#ifndef GWI_DETECT_DETECTION_HPP
#define GWI_DETECT_DETECTION_HPP

// Geometric surrogate of the four-wave detection test. Everything here works
// with the presets whose null geodesics are straight chart lines (minkowski,
// flat_torus, conformal_minkowski); custom spacetimes raise Unsupported.

#include "gwi/geom/causal.hpp"
#include "gwi/geom/observation.hpp"
#include "gwi/geom/spacetime.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gwi {

struct Tolerances {
    double eps_int = 1e-8;  // geodesic intersection and cone membership
    double eps_set = 1e-4;  // exclusion-set distance threshold
    double eps_tau = 1e-6;  // chronological precedence in earliest_points
    double eps_sep = 1e-3;  // observation-set separation in injectivity_report
};

/// Point source z with future null covector zeta.
struct Source {
    Vec4d z = Vec4d::Zero();
    Vec4d zeta = Vec4d::Zero();
};

struct SourceConfig {
    std::array<Source, 4> sources;
    Tube tube;
    Tolerances tol;

    /// Throws PreconditionError if some zeta is not future null or some
    /// z_j lies in the causal future of another z_k.
    void validate(const SpacetimeSpec& spec) const;
};

struct Intersection {
    Vec4d point = Vec4d::Zero();  // unwrapped chart coordinates along source 1
    std::array<double, 4> params{};  // line parameter of the point on each geodesic
    std::array<double, 4> cut_values{};
    double residual = 0.0;  // largest distance from the point to the four geodesics
};

/// The common point of the four geodesics at parameters inside (0, rho_j),
/// or nullopt. Throws Ambiguous on a near miss (residual in (eps, 10 eps])
/// or when two distinct common points exist.
std::optional<Intersection> four_geodesic_intersection(const SpacetimeSpec& spec, const SourceConfig& config);

/// Surface swept by null rays from `vertex` whose covectors lie in the span of
/// three of the source covectors.
struct TripleCone {
    std::array<int, 3> indices{};
    Vec4d vertex = Vec4d::Zero();
    std::array<Vec4d, 3> covectors;
};

struct Exclusion {
    bool excluded = false;
    std::string reason;  // e.g. "C+ of source 2", "geodesic 1", "triple cone 0,1,3"
    double distance = kInfinity;
};

class ExclusionSets {
public:
    ExclusionSets(const SpacetimeSpec& spec, const SourceConfig& config);

    /// Cut points gamma_j(rho_j) for the sources with finite cut value.
    [[nodiscard]] const std::vector<std::pair<int, Vec4d>>& cut_points() const { return cut_points_; }
    [[nodiscard]] const std::vector<TripleCone>& triple_cones() const { return cones_; }

    [[nodiscard]] Exclusion in_c_plus(const Vec4d& y) const;
    [[nodiscard]] Exclusion in_k0(const Vec4d& y) const;
    /// C+ first, then K0.
    [[nodiscard]] Exclusion classify(const Vec4d& y) const;

    /// Chart distance from y to the segment gamma_j((0, rho_j]).
    [[nodiscard]] double distance_to_geodesic(int j, const Vec4d& y) const;
    [[nodiscard]] double distance_to_cone(const TripleCone& cone, const Vec4d& y) const;

private:
    SpacetimeSpec spec_;
    SourceConfig config_;
    std::array<Vec4d, 4> w_;
    std::array<double, 4> rho_{};
    std::vector<std::pair<int, Vec4d>> cut_points_;
    std::vector<TripleCone> cones_;
};

ExclusionSets exclusion_sets(const SpacetimeSpec& spec, const SourceConfig& config);

/// 1 iff the four geodesics meet at x and y is reached from x by a future
/// null geodesic before its cut point, within eps_int. Throws
/// PreconditionError outside the tube and ExcludedPoint inside C+ or K0.
int detection_surrogate(const SpacetimeSpec& spec, const SourceConfig& config, const Vec4d& y);

struct QueryVerdict {
    Vec4d y = Vec4d::Zero();
    std::optional<int> verdict;  // absent when the point is not decided
    std::string status;          // "decided", "outside_tube" or "excluded"
    std::string reason;
    bool in_causal_future = false;  // J+(x) predicate, false when there is no x
};

struct DetectionReport {
    std::optional<Intersection> intersection;
    std::vector<std::pair<int, Vec4d>> cut_points;
    std::vector<TripleCone> triple_cones;
    std::vector<QueryVerdict> queries;
};

/// Evaluates every query point in order; exclusions are recorded instead of thrown.
DetectionReport detect(const SpacetimeSpec& spec, const SourceConfig& config, const std::vector<Vec4d>& queries);

/// Samples not chronologically preceded (margin eps_tau) by any other sample,
/// sorted by (dir_index, s) and flagged earliest.
std::vector<ObservationSample> earliest_points(const SpacetimeSpec& spec, const std::vector<ObservationSample>& samples,
                                               double eps_tau = Tolerances{}.eps_tau);

struct InjectivityPair {
    std::array<int, 2> indices{};
    double distance = 0.0;  // Hausdorff distance of the two observation sets
    bool separated = false;
    double tau = 0.0;       // time separation, first to second
    Chronology oracle = Chronology::Incomparable;
    /// Order from earliest arrival comparison in shared angular bins; heuristic.
    std::optional<Chronology> recovered;
    int earlier_votes = 0;
    int later_votes = 0;
};

struct InjectivityReport {
    std::vector<Vec4d> sources;
    std::vector<bool> observable;
    std::vector<int> sample_counts;
    std::vector<InjectivityPair> pairs;
};

InjectivityReport injectivity_report(const SpacetimeSpec& spec, const std::vector<Vec4d>& sources, const Tube& tube,
                                     const ObservationOptions& opts = {}, double eps_sep = Tolerances{}.eps_sep);

}  // namespace gwi

#endif  // GWI_DETECT_DETECTION_HPP
