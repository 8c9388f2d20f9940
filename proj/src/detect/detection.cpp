#include "gwi/detect/detection.hpp"

#include "gwi/errors.hpp"
#include "gwi/geom/arrangement.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gwi {

namespace {

void require_straight_lines(const SpacetimeSpec& spec)
{
    if (spec.preset() == Preset::Custom) {
        throw Unsupported("detection: only minkowski, flat_torus and conformal_minkowski are supported");
    }
}

// All three presets are conformal to the Minkowski chart, so the raised
// Minkowski vector gives the chart direction of the null geodesic. On the flat
// presets it is also the affine velocity.
Vec4d line_direction(const Vec4d& zeta)
{
    return minkowski<double>() * zeta;
}

Vec3d shift_vector(const SpacetimeSpec& spec, const Eigen::Vector3i& k)
{
    return spec.lengths().cwiseProduct(k.cast<double>());
}

// Lattice shifts k L whose spatial size can be needed to bridge `reach`,
// centred on the shift that takes `offset` to its minimal image.
std::vector<Vec3d> lattice_shifts(const SpacetimeSpec& spec, const Vec3d& offset, double reach)
{
    if (!spec.is_torus()) return {Vec3d::Zero()};
    const Vec3d& L = spec.lengths();
    Eigen::Vector3i centre, K;
    for (int i = 0; i < 3; ++i) {
        centre(i) = static_cast<int>(-std::round(offset(i) / L(i)));
        K(i) = static_cast<int>(std::ceil(reach / L(i))) + 1;
    }
    std::vector<Vec3d> out;
    for (int a = -K(0); a <= K(0); ++a) {
        for (int b = -K(1); b <= K(1); ++b) {
            for (int c = -K(2); c <= K(2); ++c) {
                out.push_back(shift_vector(spec, centre + Eigen::Vector3i(a, b, c)));
            }
        }
    }
    return out;
}

Vec4d spatial_shift(const Vec3d& s)
{
    Vec4d v;
    v << 0.0, s;
    return v;
}

struct Line {
    Vec4d z;
    Vec4d w;
    double rho;
};

double line_param(const Line& l, const Vec4d& p)
{
    return (p - l.z).dot(l.w) / l.w.squaredNorm();
}

double distance_to_line(const Line& l, const Vec4d& p)
{
    return (p - l.z - line_param(l, p) * l.w).norm();
}

bool inside_open(double s, double rho)
{
    return s > 0.0 && s < rho;
}

// Spatial reach of a geodesic segment, infinite reach only without a lattice.
double segment_reach(const Line& l)
{
    return std::isfinite(l.rho) ? l.rho * l.w.tail<3>().norm() : 0.0;
}

// Best translate of line `l` for point p, restricted to parameters in (0, rho).
struct Fit {
    Line line;
    double distance = kInfinity;
    double param = 0.0;
};

Fit best_translate(const SpacetimeSpec& spec, const Line& l, const Vec4d& p)
{
    Fit best{l};
    const Vec3d off = (l.z - p).tail<3>();
    for (const Vec3d& k : lattice_shifts(spec, off, segment_reach(l))) {
        const Line t{l.z + spatial_shift(k), l.w, l.rho};
        const double s = line_param(t, p);
        if (!inside_open(s, t.rho)) continue;
        const double d = distance_to_line(t, p);
        if (d < best.distance) best = Fit{t, d, s};
    }
    return best;
}

// Least-squares point closest to all the lines, symmetric in their order.
Vec4d consensus_point(const std::vector<Line>& lines)
{
    Mat4d A = Mat4d::Zero();
    Vec4d b = Vec4d::Zero();
    for (const Line& l : lines) {
        const Vec4d u = l.w.normalized();
        const Mat4d P = Mat4d::Identity() - u * u.transpose();
        A += P;
        b += P * l.z;
    }
    return A.ldlt().solve(b);
}

struct Meet {
    Vec4d point;
    std::vector<double> params;
    double residual;
};

// Common points of the given lines with every parameter inside (0, rho).
// Candidates come from the first two lines over lattice translates; the
// others are fitted to each candidate and the point is refined jointly.
std::vector<Meet> common_points(const SpacetimeSpec& spec, const std::vector<Line>& lines, double eps,
                                bool& near_miss)
{
    std::vector<Meet> out;
    const Line& a = lines[0];
    const Line& b = lines[1];
    const Vec3d off = (b.z - a.z).tail<3>();
    for (const Vec3d& k : lattice_shifts(spec, off, segment_reach(a) + segment_reach(b))) {
        const Line bt{b.z + spatial_shift(k), b.w, b.rho};
        Eigen::Matrix<double, 4, 2> M;
        M.col(0) = a.w;
        M.col(1) = -bt.w;
        const Vec4d rhs = bt.z - a.z;
        Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 4, 2>> qr(M);
        qr.setThreshold(1e-12);
        if (qr.rank() < 2) {
            if (distance_to_line(a, bt.z) <= eps * std::max(1.0, bt.z.norm())) {
                throw Ambiguous("detection: two source geodesics coincide");
            }
            continue;
        }
        const Eigen::Vector2d s = qr.solve(rhs);
        const Vec4d p0 = a.z + s(0) * a.w;
        const double scale = std::max(1.0, p0.norm());
        if ((M * s - rhs).norm() > 10.0 * eps * scale) continue;
        if (!inside_open(s(0), a.rho) || !inside_open(s(1), bt.rho)) continue;

        std::vector<Line> fitted{a, bt};
        bool ok = true;
        for (std::size_t j = 2; j < lines.size() && ok; ++j) {
            const Fit f = best_translate(spec, lines[j], p0);
            if (f.distance > 10.0 * eps * scale) ok = false;
            fitted.push_back(f.line);
        }
        if (!ok) continue;

        const Vec4d p = consensus_point(fitted);
        Meet m{p, {}, 0.0};
        for (const Line& l : fitted) {
            const double s_l = line_param(l, p);
            if (!inside_open(s_l, l.rho)) ok = false;
            m.params.push_back(s_l);
            m.residual = std::max(m.residual, distance_to_line(l, p));
        }
        if (!ok) continue;
        if (m.residual > eps * scale) {
            near_miss = true;
            continue;
        }
        out.push_back(m);
    }
    return out;
}

std::array<Line, 4> source_lines(const SpacetimeSpec& spec, const SourceConfig& config)
{
    std::array<Line, 4> out;
    for (int j = 0; j < 4; ++j) {
        const Source& src = config.sources[j];
        out[j] = Line{src.z, line_direction(src.zeta), cut_value(spec, src.z, src.zeta)};
    }
    return out;
}

// Points of the list that are distinct modulo the lattice.
std::vector<Meet> distinct(const SpacetimeSpec& spec, std::vector<Meet> meets, double eps)
{
    std::vector<Meet> out;
    for (Meet& m : meets) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Meet& o) {
            return chart_distance(spec, o.point, m.point) <= 10.0 * eps * std::max(1.0, m.point.norm());
        });
        if (!seen) out.push_back(std::move(m));
    }
    return out;
}

double chronology_margin(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q)
{
    require_straight_lines(spec);
    if (spec.is_flat()) return time_separation(spec, p, q);
    // Conformal rescaling keeps the causal structure; the Minkowski value
    // serves as a chart-scale margin.
    return time_separation(SpacetimeSpec::minkowski(), p, q);
}

// y reached from x along a future null geodesic at a parameter below its cut value.
bool reached_on_cone(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& y, double eps)
{
    const double dt = y(0) - x(0);
    if (dt <= 0.0) return false;
    const Vec3d off = (y - x).tail<3>();
    const double tol = eps * std::max(1.0, dt);
    for (const Vec3d& k : lattice_shifts(spec, off, dt)) {
        Vec4d d;
        d << dt, off + k;
        if (std::abs(dt - d.tail<3>().norm()) > tol) continue;
        if (!spec.is_torus()) return true;
        // d reaches y at parameter 1
        if (cut_value(spec, x, minkowski<double>() * d) > 1.0) return true;
    }
    return false;
}

}  // namespace

void SourceConfig::validate(const SpacetimeSpec& spec) const
{
    for (int j = 0; j < 4; ++j) {
        const Source& s = sources[j];
        const double h = hamiltonian(spec, s.z, s.zeta);
        if (s.zeta.norm() == 0.0 || std::abs(h) > 1e-9 * std::max(1.0, s.zeta.squaredNorm())) {
            throw PreconditionError("source " + std::to_string(j + 1) + ": zeta is not lightlike");
        }
        if (!(raise(spec, s.z, s.zeta)(0) > 0)) {
            throw PreconditionError("source " + std::to_string(j + 1) + ": zeta is not future pointing");
        }
    }
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j != k && causal(spec, sources[k].z, sources[j].z, 0.0)) {
                throw PreconditionError("sources " + std::to_string(k + 1) + " and " + std::to_string(j + 1) +
                                        " are causally related");
            }
        }
    }
}

std::optional<Intersection> four_geodesic_intersection(const SpacetimeSpec& spec, const SourceConfig& config)
{
    require_straight_lines(spec);
    config.validate(spec);
    const auto lines = source_lines(spec, config);
    bool near_miss = false;
    auto meets = distinct(spec, common_points(spec, {lines.begin(), lines.end()}, config.tol.eps_int, near_miss),
                          config.tol.eps_int);
    if (meets.size() > 1) {
        throw Ambiguous("detection: the source geodesics meet in " + std::to_string(meets.size()) + " points");
    }
    if (meets.empty()) {
        if (near_miss) throw Ambiguous("detection: the source geodesics nearly meet");
        return std::nullopt;
    }
    Intersection out;
    out.point = meets[0].point;
    out.residual = meets[0].residual;
    for (int j = 0; j < 4; ++j) {
        out.params[j] = meets[0].params[j];
        out.cut_values[j] = lines[j].rho;
    }
    return out;
}

ExclusionSets::ExclusionSets(const SpacetimeSpec& spec, const SourceConfig& config) : spec_(spec), config_(config)
{
    require_straight_lines(spec);
    config.validate(spec);
    const auto lines = source_lines(spec, config);
    for (int j = 0; j < 4; ++j) {
        w_[j] = lines[j].w;
        rho_[j] = lines[j].rho;
        if (std::isfinite(rho_[j])) cut_points_.emplace_back(j, lines[j].z + rho_[j] * lines[j].w);
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                bool near_miss = false;
                const auto meets =
                    distinct(spec, common_points(spec, {lines[i], lines[j], lines[k]}, config.tol.eps_int, near_miss),
                             config.tol.eps_int);
                for (const Meet& m : meets) {
                    cones_.push_back(TripleCone{{i, j, k},
                                                m.point,
                                                {config.sources[i].zeta, config.sources[j].zeta,
                                                 config.sources[k].zeta}});
                }
            }
        }
    }
}

double ExclusionSets::distance_to_geodesic(int j, const Vec4d& y) const
{
    const Line l{config_.sources[j].z, w_[j], rho_[j]};
    const double hi = std::isfinite(l.rho) ? l.rho : kInfinity;
    double best = kInfinity;
    for (const Vec3d& k : lattice_shifts(spec_, (l.z - y).tail<3>(), segment_reach(l))) {
        const Line t{l.z + spatial_shift(k), l.w, l.rho};
        const double s = std::clamp(line_param(t, y), 0.0, hi);
        best = std::min(best, (y - t.z - s * t.w).norm());
    }
    return best;
}

double ExclusionSets::distance_to_cone(const TripleCone& cone, const Vec4d& y) const
{
    const auto& c = cone.covectors;
    auto ray_distance = [&](const Vec4d& d, double theta) {
        const auto w = triple_cone_direction(c[0], c[1], c[2], theta);
        if (!w) return kInfinity;
        const double s = std::max(0.0, d.dot(*w) / w->squaredNorm());
        return (d - s * *w).norm();
    };
    constexpr int kGrid = 256;
    const double dt = y(0) - cone.vertex(0);
    const Vec3d off = (cone.vertex - y).tail<3>();
    double best = kInfinity;
    for (const Vec3d& k : lattice_shifts(spec_, off, std::abs(dt) + 1.0)) {
        const Vec4d d = y - cone.vertex - spatial_shift(k);
        int arg = -1;
        double grid_best = kInfinity;
        for (int n = 0; n < kGrid; ++n) {
            const double v = ray_distance(d, std::numbers::pi * n / kGrid);
            if (v < grid_best) grid_best = v, arg = n;
        }
        if (arg < 0) continue;
        // golden-section refinement around the best grid angle
        double lo = std::numbers::pi * (arg - 1) / kGrid, hi = std::numbers::pi * (arg + 1) / kGrid;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 60; ++it) {
            const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
            if (ray_distance(d, m1) < ray_distance(d, m2)) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        best = std::min({best, grid_best, ray_distance(d, 0.5 * (lo + hi))});
    }
    return best;
}

Exclusion ExclusionSets::in_c_plus(const Vec4d& y) const
{
    for (const auto& [j, c] : cut_points_) {
        if (causal(spec_, c, y, config_.tol.eps_int)) {
            return Exclusion{true, "C+ of source " + std::to_string(j + 1), 0.0};
        }
    }
    return Exclusion{};
}

Exclusion ExclusionSets::in_k0(const Vec4d& y) const
{
    Exclusion out;
    for (int j = 0; j < 4; ++j) {
        const double d = distance_to_geodesic(j, y);
        if (d < out.distance) out.distance = d, out.reason = "geodesic " + std::to_string(j + 1);
    }
    for (const TripleCone& cone : cones_) {
        const double d = distance_to_cone(cone, y);
        if (d < out.distance) {
            out.distance = d;
            out.reason = "triple cone " + std::to_string(cone.indices[0] + 1) + "," +
                         std::to_string(cone.indices[1] + 1) + "," + std::to_string(cone.indices[2] + 1);
        }
    }
    out.excluded = out.distance <= config_.tol.eps_set;
    if (!out.excluded) out.reason.clear();
    return out;
}

Exclusion ExclusionSets::classify(const Vec4d& y) const
{
    Exclusion c = in_c_plus(y);
    if (c.excluded) return c;
    return in_k0(y);
}

ExclusionSets exclusion_sets(const SpacetimeSpec& spec, const SourceConfig& config)
{
    return ExclusionSets(spec, config);
}

int detection_surrogate(const SpacetimeSpec& spec, const SourceConfig& config, const Vec4d& y)
{
    require_straight_lines(spec);
    if (!config.tube.contains(spec, y)) {
        throw PreconditionError("detection: query point is outside the observation tube");
    }
    const ExclusionSets ex(spec, config);
    const Exclusion e = ex.classify(y);
    if (e.excluded) {
        throw ExcludedPoint("detection: query point lies in " + e.reason);
    }
    const auto x = four_geodesic_intersection(spec, config);
    if (!x) return 0;
    return reached_on_cone(spec, x->point, y, config.tol.eps_int) ? 1 : 0;
}

DetectionReport detect(const SpacetimeSpec& spec, const SourceConfig& config, const std::vector<Vec4d>& queries)
{
    DetectionReport rep;
    const ExclusionSets ex(spec, config);
    rep.intersection = four_geodesic_intersection(spec, config);
    rep.cut_points = ex.cut_points();
    rep.triple_cones = ex.triple_cones();
    for (const Vec4d& y : queries) {
        QueryVerdict q;
        q.y = y;
        if (rep.intersection) q.in_causal_future = causal(spec, rep.intersection->point, y, config.tol.eps_int);
        if (!config.tube.contains(spec, y)) {
            q.status = "outside_tube";
        } else if (const Exclusion e = ex.classify(y); e.excluded) {
            q.status = "excluded";
            q.reason = e.reason;
        } else {
            q.status = "decided";
            q.verdict = rep.intersection && reached_on_cone(spec, rep.intersection->point, y, config.tol.eps_int);
        }
        rep.queries.push_back(std::move(q));
    }
    return rep;
}

std::vector<ObservationSample> earliest_points(const SpacetimeSpec& spec, const std::vector<ObservationSample>& samples,
                                               double eps_tau)
{
    std::vector<ObservationSample> out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        bool preceded = false;
        for (std::size_t j = 0; j < samples.size() && !preceded; ++j) {
            if (i != j && chronology_margin(spec, samples[j].point, samples[i].point) > eps_tau) preceded = true;
        }
        if (!preceded) {
            out.push_back(samples[i]);
            out.back().earliest = true;
        }
    }
    std::sort(out.begin(), out.end(), [](const ObservationSample& a, const ObservationSample& b) {
        return a.dir_index != b.dir_index ? a.dir_index < b.dir_index : a.s < b.s;
    });
    return out;
}

InjectivityReport injectivity_report(const SpacetimeSpec& spec, const std::vector<Vec4d>& sources, const Tube& tube,
                                     const ObservationOptions& opts, double eps_sep)
{
    require_straight_lines(spec);
    if (sources.size() < 2) {
        throw PreconditionError("injectivity_report: at least two sources are required");
    }
    const auto bins = fibonacci_sphere(48);
    auto bin_of = [&](const Vec4d& p) {
        const Vec3d u = spec.minimal_image(p.tail<3>() - tube.center);
        int arg = 0;
        double best = -kInfinity;
        for (int b = 0; b < static_cast<int>(bins.size()); ++b) {
            const double v = u.dot(bins[b]);
            if (v > best) best = v, arg = b;
        }
        return arg;
    };

    InjectivityReport rep;
    rep.sources = sources;
    std::vector<std::vector<Vec4d>> clouds;
    std::vector<std::vector<double>> arrival;
    for (const Vec4d& x : sources) {
        const ObservationSet obs = observation_set(spec, x, tube, opts);
        rep.observable.push_back(!obs.empty());
        rep.sample_counts.push_back(static_cast<int>(obs.samples.size()));
        clouds.push_back(obs.points());
        std::vector<double> first(bins.size(), kInfinity);
        for (const auto& s : obs.samples) {
            double& t = first[bin_of(s.point)];
            t = std::min(t, s.point(0));
        }
        arrival.push_back(std::move(first));
    }

    for (int i = 0; i < static_cast<int>(sources.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(sources.size()); ++j) {
            InjectivityPair p;
            p.indices = {i, j};
            p.distance = hausdorff_distance(spec, clouds[i], clouds[j]);
            p.separated = p.distance > eps_sep;
            p.oracle = chronological_relation(spec, sources[i], sources[j]);
            p.tau = chronology_margin(spec, sources[i], sources[j]);
            if (rep.observable[i] && rep.observable[j]) {
                for (std::size_t b = 0; b < bins.size(); ++b) {
                    const double ti = arrival[i][b], tj = arrival[j][b];
                    if (!std::isfinite(ti) || !std::isfinite(tj)) continue;
                    if (ti < tj - eps_sep) ++p.earlier_votes;
                    if (ti > tj + eps_sep) ++p.later_votes;
                }
                if (p.earlier_votes > 0 && p.later_votes == 0) {
                    p.recovered = Chronology::Precedes;
                } else if (p.later_votes > 0 && p.earlier_votes == 0) {
                    p.recovered = Chronology::Follows;
                } else {
                    p.recovered = Chronology::Incomparable;
                }
            }
            rep.pairs.push_back(p);
        }
    }
    return rep;
}

}  // namespace gwi
