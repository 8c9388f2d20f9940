// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "gwi/detect/detection.hpp"
#include "gwi/errors.hpp"
#include "gwi/geom/arrangement.hpp"
#include "gwi/geom/causal.hpp"
#include "gwi/geom/fermi.hpp"
#include "gwi/geom/flow.hpp"
#include "gwi/geom/observation.hpp"
#include "gwi/linalg.hpp"
#include "gwi/symbol/certificate.hpp"
#include "gwi/symbol/compat.hpp"
#include "gwi/symbol/constraint.hpp"
#include "gwi/symbol/directions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace gwi;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s [%2d] %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs,
                limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
}

std::vector<CoVec4q> constraint_test_covectors()
{
    std::vector<CoVec4q> out;
    for (const auto& b : pythagorean_directions()) out.push_back(b.covector());
    out.push_back(default_xi());
    return out;
}

Vec4d null_vec(const Vec3d& v)
{
    Vec4d w;
    w << 1.0, v.normalized();
    return w;
}

// Smallest positive s at which x + s(1, v) meets a lattice translate of the
// light cone of x: s^2 = |s v + k L|^2 gives s = -|kL|^2 / (2 v.kL).
double torus_cut_oracle(const Vec3d& L, const Vec3d& v)
{
    double best = kInfinity;
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b)
            for (int c = -6; c <= 6; ++c) {
                const Vec3d k(a * L(0), b * L(1), c * L(2));
                const double vk = v.dot(k);
                if (vk < 0) best = std::min(best, -k.squaredNorm() / (2.0 * vk));
            }
    return best;
}

// Point-to-polyline distance.
double polyline_distance(const Vec4d& p, const std::vector<Vec4d>& poly)
{
    double best = kInfinity;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const Vec4d d = poly[i + 1] - poly[i];
        const double t = std::clamp((p - poly[i]).dot(d) / d.squaredNorm(), 0.0, 1.0);
        best = std::min(best, (p - poly[i] - t * d).norm());
    }
    return best;
}

struct Focused {
    Vec4d x;
    SourceConfig config;
};

Focused random_focused(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1, 1), len(0.5, 1.5);
    const auto spec = SpacetimeSpec::minkowski();
    for (;;) {
        Focused f;
        f.x = Vec4d(u(rng), u(rng), u(rng), u(rng));
        std::array<Vec3d, 4> v;
        for (auto& d : v) {
            do d = Vec3d(u(rng), u(rng), u(rng));
            while (d.norm() < 0.2 || d.norm() > 1.0);
            d.normalize();
        }
        bool spread = true;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) spread = spread && v[i].dot(v[j]) < std::cos(0.35);
        if (!spread) continue;
        for (int j = 0; j < 4; ++j) {
            const Vec4d w = null_vec(v[j]);
            f.config.sources[j] = Source{f.x - len(rng) * w, minkowski<double>() * w};
        }
        f.config.tube = Tube{f.x.tail<3>(), 0.3, 0.8, f.x(0), f.x(0) + 1.5};
        try {
            f.config.validate(spec);
        } catch (const PreconditionError&) {
            continue;
        }
        return f;
    }
}

}  // namespace

int main()
{
    criterion(1, "quadruple census", 1, [] {
        const auto c = quadruple_census();
        const int rejected = static_cast<int>(c.candidates.size() - c.valid.size());
        std::ostringstream d;
        d << c.candidates.size() << " subsets, " << c.valid.size() << " valid, " << rejected << " rejected";
        return Outcome{c.candidates.size() == 15 && c.valid.size() == 9 && rejected == 6, d.str()};
    });

    criterion(2, "rank-6 span certificate", 5, [] {
        const auto qs = enumerate_valid_quadruples();
        const auto cert = span_rank_certificate(qs, AssemblyMode::Derived);
        std::ostringstream d;
        d << "derived rank " << cert.rank << ", scalar parts zero " << (cert.scalar_parts_zero ? "yes" : "no")
          << ", literal transcription rank " << cert.alternate_rank << ", witness rows";
        for (int w : cert.witness) d << ' ' << w;
        return Outcome{cert.rank == 6 && cert.scalar_parts_zero && cert.witness.size() == 6, d.str()};
    });

    criterion(3, "constraint fibre dimension", 1, [] {
        bool ok = true;
        int n = 0;
        for (const auto& xi : constraint_test_covectors()) {
            const auto f = constraint_fibre_basis(xi);
            ok = ok && f.dimension() == 6 && rank(f.matrix()) == 6;
            for (const auto& h : f.basis) ok = ok && constraint_membership(h, xi);
            ++n;
        }
        return Outcome{ok, std::to_string(n) + " covectors, dimension 6 each"};
    });

    criterion(4, "divergence symbol algebra", 1, [] {
        bool ok = true;
        int n = 0;
        for (const auto& xi : constraint_test_covectors()) {
            const auto p = divergence_symbol_pair(xi);
            const auto f = constraint_fibre_basis(xi);
            const auto rn = rank_nullspace(p.iota);
            // kernel equals the fibre: same dimension and the fibre is annihilated
            MatXq both(10, rn.nullspace.cols() + f.dimension());
            both << rn.nullspace, f.matrix();
            ok = ok && rn.rank == 4 && (p.iota * f.matrix()).isZero() && rank(both) == f.dimension() &&
                 rn.nullspace.cols() == f.dimension() && p.iota * p.right_inverse == MatXq::Identity(4, 4);
            ++n;
        }
        return Outcome{ok, std::to_string(n) + " covectors: rank 4, kernel = fibre, iota r = id"};
    });

    criterion(5, "compatibility maps on random frames", 1, [] {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> len(4, 8), num(-9, 9), den(1, 5);
        auto rnd = [&] { return Rational(num(rng), den(rng)); };
        int frames = 0, skipped = 0;
        bool ok = true;
        while (frames < 100) {
            const int L = len(rng);
            std::vector<CoVec4q> frame;
            for (int l = 0; l < L; ++l) frame.emplace_back(rnd(), rnd(), rnd(), rnd());
            CompatMaps m;
            try {
                m = compat_maps(frame);
            } catch (const NDViolation&) {
                ++skipped;
                continue;
            }
            ok = ok && m.frame * m.A1 == MatXq::Identity(4, 4) && (m.frame * m.A2).isZero();
            for (int n = 0; n < 5; ++n) {
                VecXq w(L);
                for (int l = 0; l < L; ++l) w(l) = rnd();
                ok = ok && VecXq(m.A1 * (m.frame * w) + m.A2 * w) == w;
            }
            ++frames;
        }
        return Outcome{ok, "100 frames (" + std::to_string(skipped) + " degenerate draws skipped), properties exact"};
    });

    criterion(6, "genericity of the rank-6 span", 60, [] {
        const auto s = genericity_sample(1, 1000);
        std::ostringstream d;
        d << "seed 1: " << s.full_rank << "/" << s.accepted << " families at rank 6 (" << s.rejected
          << " draws rejected by the filter)";
        return Outcome{s.accepted == 1000 && s.fraction() >= 0.99, d.str()};
    });

    criterion(7, "cut value on the flat torus", 10, [] {
        bool ok = true;
        std::ostringstream d;
        for (double L1 : {1.0, 2.0}) {
            const auto spec = SpacetimeSpec::flat_torus(L1, 1.0, 1.0);
            const double rho = cut_value(spec, Vec4d::Zero(), future_null_covector(spec, Vec4d::Zero(), Vec3d(1, 0, 0)));
            const double oracle = torus_cut_oracle(spec.lengths(), Vec3d(1, 0, 0));
            ok = ok && std::abs(rho - L1 / 2) <= 1e-6 && std::abs(rho - oracle) <= 1e-6;
            d << "L1=" << L1 << ": rho " << rho << " oracle " << oracle << "; ";
        }
        // oblique directions against the same oracle
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1, 1);
        const auto spec = SpacetimeSpec::flat_torus(1.0, 1.5, 2.0);
        double worst = 0;
        for (int n = 0; n < 20; ++n) {
            const Vec3d v = Vec3d(u(rng), u(rng), u(rng)).normalized();
            const double rho = cut_value(spec, Vec4d::Zero(), future_null_covector(spec, Vec4d::Zero(), v));
            worst = std::max(worst, std::abs(rho - torus_cut_oracle(spec.lengths(), v)));
        }
        ok = ok && worst <= 1e-6;
        d << "20 oblique directions, worst error " << worst;
        return Outcome{ok, d.str()};
    });

    criterion(8, "minkowski geometry suite", 30, [] {
        const auto spec = SpacetimeSpec::minkowski();
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> u(-3, 3);
        double tau_err = 0;
        for (int n = 0; n < 1000; ++n) {
            const Vec4d p(u(rng), u(rng), u(rng), u(rng)), q(u(rng), u(rng), u(rng), u(rng));
            const double dt = q(0) - p(0);
            const double iv = dt * dt - (q - p).tail<3>().squaredNorm();
            const double analytic = dt > 0 && iv > 0 ? std::sqrt(iv) : 0.0;
            tau_err = std::max(tau_err, std::abs(time_separation(spec, p, q) - analytic));
        }
        double cone_err = 0;
        std::size_t samples = 0;
        for (int n = 0; n < 5; ++n) {
            const Vec4d x(u(rng), u(rng), u(rng), u(rng));
            ObservationOptions oo;
            oo.n_dirs = 100;
            oo.ds = 0.02;
            const Tube tube{x.tail<3>() + Vec3d(0.5, 0, 0), 0.0, 1.5, -kInfinity, kInfinity};
            const auto obs = observation_set(spec, x, tube, oo);
            for (const auto& s : obs.samples) {
                cone_err = std::max(cone_err, std::abs((s.point(0) - x(0)) - (s.point - x).tail<3>().norm()));
            }
            samples += obs.samples.size();
        }
        double drift = 0;
        for (int n = 0; n < 20; ++n) {
            const Vec3d v(u(rng), u(rng), u(rng));
            Vec4d xi = future_null_covector(spec, Vec4d::Zero(), v);
            if (n % 2) xi(0) *= 1.3;  // timelike
            const double h0 = hamiltonian(spec, Vec4d::Zero(), xi);
            for (const auto& st : geodesic_flow(spec, Vec4d::Zero(), xi, 5.0)) {
                drift = std::max(drift, std::abs(hamiltonian(spec, st.x, st.xi) - h0) / std::max(1.0, st.s));
            }
        }
        std::ostringstream d;
        d << "tau error " << tau_err << " on 1000 pairs, cone error " << cone_err << " on " << samples
          << " samples, drift per unit parameter " << drift;
        return Outcome{tau_err <= 1e-9 && cone_err <= 1e-6 && samples > 0 && drift <= 1e-9, d.str()};
    });

    criterion(9, "conformal invariance of null geodesic images", 30, [] {
        const std::vector<ConformalFactor> presets{ConformalFactor{{1.0, 0.1}, {}}, ConformalFactor{{1.0}, {0.0, 0.05}},
                                                   ConformalFactor{{1.0, 0.1, 0.02}, {0.0, 0.03}}};
        double worst = 0;
        int curves = 0;
        for (const auto& om : presets) {
            const auto spec = SpacetimeSpec::conformal_minkowski(om);
            for (const Vec4d& x : {Vec4d(0, 0, 0, 0), Vec4d(0.3, -0.2, 0.4, 0.1)}) {
                for (const Vec3d& v : fibonacci_sphere(12)) {
                    const auto path = geodesic_flow(spec, x, future_null_covector(spec, x, v), 3.0);
                    std::vector<Vec4d> curve;
                    for (const auto& st : path) curve.push_back(st.x);
                    const Vec4d w = null_vec(v);
                    const double t_end = curve.back()(0) - x(0);
                    double h = 0;
                    for (const Vec4d& p : curve) {
                        const double s = std::clamp((p - x).dot(w) / w.squaredNorm(), 0.0, t_end);
                        h = std::max(h, (p - x - s * w).norm());
                    }
                    for (int k = 0; k <= 200; ++k) h = std::max(h, polyline_distance(x + (t_end * k / 200) * w, curve));
                    worst = std::max(worst, h);
                    ++curves;
                }
            }
        }
        std::ostringstream d;
        d << curves << " geodesics over 3 conformal factors, worst Hausdorff distance " << worst;
        return Outcome{worst <= 1e-6, d.str()};
    });

    criterion(10, "detection sandwich", 120, [] {
        const auto spec = SpacetimeSpec::minkowski();
        std::mt19937_64 rng(10);
        std::uniform_real_distribution<double> u(-1, 1);
        int cone_ones = 0, cone_excluded = 0, bad_hit = 0, bad_outer = 0, bad_empty = 0, decided_empty = 0;
        for (int n = 0; n < 20; ++n) {
            const Focused f = random_focused(rng);
            ObservationOptions oo;
            oo.n_dirs = 100;
            oo.ds = 0.05;
            const auto obs = observation_set(spec, f.x, f.config.tube, oo);
            std::vector<Vec4d> queries = obs.points();
            const std::size_t n_cone = queries.size();
            while (queries.size() < n_cone + 100) {
                const Vec4d y = f.x + Vec4d(1.5 * (u(rng) + 1) / 2, 0.8 * u(rng), 0.8 * u(rng), 0.8 * u(rng));
                if (f.config.tube.contains(spec, y)) queries.push_back(y);
            }

            const auto rep = detect(spec, f.config, queries);
            if (!rep.intersection || (rep.intersection->point - f.x).norm() > 1e-8) return Outcome{false, "intersection not recovered"};
            for (std::size_t i = 0; i < queries.size(); ++i) {
                const auto& q = rep.queries[i];
                if (q.verdict == 1 && !q.in_causal_future) ++bad_outer;
                if (i < n_cone) {
                    if (q.status == "excluded") ++cone_excluded;
                    else if (q.verdict == 1) ++cone_ones;
                    else ++bad_hit;
                }
            }

            // rotate one direction off target: the geodesics no longer meet
            SourceConfig miss = f.config;
            const Vec4d w = minkowski<double>() * miss.sources[1].zeta;
            const Vec3d v = w.tail<3>().normalized();
            const Vec3d axis = v.unitOrthogonal();
            const Vec3d rotated = std::cos(1e-2) * v + std::sin(1e-2) * axis;
            miss.sources[1].zeta = minkowski<double>() * null_vec(rotated);
            const auto rep0 = detect(spec, miss, queries);
            if (rep0.intersection) return Outcome{false, "perturbed configuration still intersects"};
            for (const auto& q : rep0.queries) {
                if (q.status != "decided") continue;
                ++decided_empty;
                if (q.verdict == 1) ++bad_empty;
            }
        }
        std::ostringstream d;
        d << "X nonempty: " << cone_ones << " cone samples at verdict 1, " << cone_excluded << " excluded, " << bad_hit
          << " missed, " << bad_outer << " verdict-1 points outside J+(x); X empty: " << bad_empty << "/"
          << decided_empty << " decided points at verdict 1";
        return Outcome{cone_ones > 0 && bad_hit == 0 && bad_outer == 0 && bad_empty == 0 && decided_empty > 0, d.str()};
    });

    criterion(11, "pairwise interaction nullity and triple witnesses", 1, [] {
        const auto B = pythagorean_directions();
        int pairs = 0, good_pairs = 0;
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j) {
                ++pairs;
                if (analyze_pair(B[i], B[j]).only_generators) ++good_pairs;
            }
        int triples = 0, witnessed = 0;
        for (const auto& q : enumerate_valid_quadruples()) {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int k = j + 1; k < 4; ++k) {
                        ++triples;
                        const auto t = analyze_triple(q.b[i], q.b[j], q.b[k]);
                        if (!t.witness) continue;
                        const CoVec4q& w = *t.witness;
                        bool fresh = mink_pair(w, w).is_zero() && !w.is_zero();
                        for (const auto* g : {&q.b[i], &q.b[j], &q.b[k]}) {
                            MatXq m(2, 4);
                            for (int c = 0; c < 4; ++c) m(0, c) = w[c], m(1, c) = g->covector()[c];
                            fresh = fresh && rank(m) == 2;
                        }
                        if (fresh) ++witnessed;
                    }
        }
        std::ostringstream d;
        d << good_pairs << "/" << pairs << " pairs carry only their generators, " << witnessed << "/" << triples
          << " triples have a new lightlike direction";
        return Outcome{pairs == 15 && good_pairs == 15 && triples == 36 && witnessed == 36, d.str()};
    });

    criterion(12, "fermi chart axis property", 10, [] {
        const std::vector<SpacetimeSpec> presets{
            SpacetimeSpec::minkowski(),
            SpacetimeSpec::flat_torus(1, 1, 1),
            SpacetimeSpec::flat_torus(2, 1, 1),
            SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0, 0.1}, {}}),
            SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0}, {0.0, 0.05}}),
            SpacetimeSpec::conformal_minkowski(ConformalFactor{{1.0, 0.1, 0.02}, {0.0, 0.03}}),
        };
        double metric_err = 0, gamma = 0;
        for (const auto& spec : presets) {
            const Vec4d x(0.1, 0.2, -0.3, 0.4);
            const auto chart = fermi_chart(spec, x, orthonormal_frame(spec, x, Vec4d(1, 0.2, -0.1, 0.3)));
            for (double s : chart.sample_parameters()) {
                const Vec4d u(s, 0, 0, 0);
                metric_err = std::max(metric_err, (chart.pullback_metric(u) - minkowski<double>()).cwiseAbs().maxCoeff());
                for (const auto& G : chart.pullback_christoffels(u)) gamma = std::max(gamma, G.cwiseAbs().maxCoeff());
            }
        }
        std::ostringstream d;
        d << presets.size() << " presets, metric error " << metric_err << ", Christoffel max " << gamma;
        return Outcome{metric_err <= 1e-8 && gamma <= 1e-6, d.str()};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
