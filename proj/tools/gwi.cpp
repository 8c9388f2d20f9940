// gwi: command-line front end. Every subcommand writes one JSON artifact
// (stdout unless --out is given) that embeds the parsed options and the
// library version; point clouds optionally go to --csv.

#include "gwi/detect/detection.hpp"
#include "gwi/errors.hpp"
#include "gwi/geom/causal.hpp"
#include "gwi/geom/fermi.hpp"
#include "gwi/geom/flow.hpp"
#include "gwi/geom/observation.hpp"
#include "gwi/io/json.hpp"
#include "gwi/linalg.hpp"
#include "gwi/symbol/cascade.hpp"
#include "gwi/symbol/certificate.hpp"
#include "gwi/symbol/constraint.hpp"
#include "gwi/symbol/directions.hpp"
#include "gwi/symbol/fluid.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using gwi::io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMath = 3;

struct Options {
    std::string spec_path;
    std::string out;
    std::string csv;
    bool json = true;
    std::uint64_t seed = 1;
    int dirs = 200;
    gwi::Tolerances tol;
    double tol_flow = 1e-9;
    double tol_cut = 1e-6;

    std::string x = "0,0,0,0";
    std::string xi;
    std::string dir;
    double s_max = 1.0;  // geodesic
    double ds = 0.05;
    double obs_s_max = 10.0;  // observe and injectivity
    double obs_ds = 0.01;
    double flow_s_max = 2.0;  // flowout
    double flow_ds = 0.02;

    std::string tube_center = "0,0,0";
    double r_min = 0.0;
    double r_max = gwi::kInfinity;
    double t_min = -gwi::kInfinity;
    double t_max = gwi::kInfinity;

    std::string mode = "derived";
    int assert_rank = -1;
    std::string kernel_xi = "1,1,0,0";
    int count = 1000;
    double delta = 0.05;
    int samples = 64;
    int fermi_samples = 11;
    std::string timelike = "1,0,0,0";
    double s_extent = 1.0;
    std::string config_path;
    std::string queries_path;
    std::string sources_path;
    std::string tensor;
    std::string directions_path;
};

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<double> parse_doubles(const std::string& s, std::size_t n, const char* what)
{
    const auto parts = split(s);
    if (parts.size() != n) {
        throw gwi::ConfigError(std::string(what) + ": expected " + std::to_string(n) + " comma-separated values");
    }
    std::vector<double> out;
    for (const auto& p : parts) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw gwi::ConfigError(std::string(what) + ": bad number '" + p + "'");
        }
    }
    return out;
}

gwi::Vec4d parse_point(const std::string& s, const char* what)
{
    const auto v = parse_doubles(s, 4, what);
    return gwi::Vec4d(v[0], v[1], v[2], v[3]);
}

gwi::Vec3d parse_direction(const std::string& s)
{
    if (s.size() == 2 && s[0] == 'e' && s[1] >= '1' && s[1] <= '3') {
        gwi::Vec3d v = gwi::Vec3d::Zero();
        v(s[1] - '1') = 1.0;
        return v;
    }
    const auto v = parse_doubles(s, 3, "--dir");
    return gwi::Vec3d(v[0], v[1], v[2]);
}

std::vector<gwi::Rational> parse_rationals(const std::string& s, std::size_t n, const char* what)
{
    const auto parts = split(s);
    if (parts.size() != n) {
        throw gwi::ConfigError(std::string(what) + ": expected " + std::to_string(n) + " comma-separated rationals");
    }
    std::vector<gwi::Rational> out;
    for (const auto& p : parts) {
        try {
            out.push_back(gwi::Rational::parse(p));
        } catch (const std::invalid_argument& e) {
            throw gwi::ConfigError(std::string(what) + ": " + e.what());
        }
    }
    return out;
}

gwi::SpacetimeSpec load_spec(const Options& o)
{
    return o.spec_path.empty() ? gwi::SpacetimeSpec::minkowski() : gwi::io::load_spacetime(o.spec_path);
}

gwi::Tube tube_of(const Options& o)
{
    const auto c = parse_doubles(o.tube_center, 3, "--tube-center");
    gwi::io::Json j{{"center", {c[0], c[1], c[2]}},
                {"r_min", gwi::io::number(o.r_min)},
                {"r_max", gwi::io::number(o.r_max)},
                {"t_min", gwi::io::number(o.t_min)},
                {"t_max", gwi::io::number(o.t_max)}};
    return gwi::io::tube_from_json(j);
}

gwi::FlowOptions flow_of(const Options& o)
{
    gwi::FlowOptions f;
    f.tol = o.tol_flow;
    return f;
}

// The initial covector from --xi, or the future null covector over --dir.
gwi::Vec4d covector_of(const Options& o, const gwi::SpacetimeSpec& spec, const gwi::Vec4d& x)
{
    if (!o.xi.empty()) return parse_point(o.xi, "--xi");
    if (!o.dir.empty()) return gwi::future_null_covector(spec, x, parse_direction(o.dir));
    throw gwi::ConfigError("give --xi or --dir");
}

Json run_config(const CLI::App& app, const CLI::App& sub)
{
    Json cfg;
    cfg["subcommand"] = sub.get_name();
    auto record = [&](const CLI::App& a) {
        for (const CLI::Option* opt : a.get_options()) {
            const std::string name = opt->get_single_name();
            if (name == "help" || name == "version") continue;
            if (opt->count() > 0) {
                const auto r = opt->reduced_results();
                cfg["options"][name] = r.size() == 1 ? Json(r[0]) : Json(r);
            } else {
                cfg["options"][name] = opt->get_default_str();
            }
        }
    };
    record(app);
    record(sub);
    return cfg;
}

Json census_json(const gwi::QuadrupleCensus& census)
{
    Json dirs = Json::array();
    for (const auto& d : census.directions) dirs.push_back(gwi::io::exact_covector(d.covector()));
    Json cands = Json::array();
    for (const auto& c : census.candidates) {
        Json e{{"indices", c.indices}, {"reason", gwi::to_string(c.reason)}};
        if (c.quadruple) {
            Json r = Json::array();
            for (const auto& v : c.quadruple->r) r.push_back(gwi::io::exact(v));
            e["r"] = r;
        }
        cands.push_back(std::move(e));
    }
    return Json{{"directions", dirs},
                {"candidates", cands},
                {"candidate_count", census.candidates.size()},
                {"valid_count", census.valid.size()},
                {"rejected_count", census.candidates.size() - census.valid.size()}};
}

std::vector<std::array<int, 4>> valid_indices(const gwi::QuadrupleCensus& census)
{
    std::vector<std::array<int, 4>> out;
    for (const auto& c : census.candidates) {
        if (c.reason == gwi::Rejection::None) out.push_back(c.indices);
    }
    return out;
}

int cmd_verify_span(const Options& o, Json& result)
{
    gwi::AssemblyMode mode;
    if (o.mode == "derived") {
        mode = gwi::AssemblyMode::Derived;
    } else if (o.mode == "literal") {
        mode = gwi::AssemblyMode::Literal;
    } else {
        throw gwi::ConfigError("--mode must be derived or literal");
    }
    const auto census = gwi::quadruple_census();
    const auto cert = gwi::span_rank_certificate(census.valid, mode);
    const auto idx = valid_indices(census);
    Json symbols = Json::array();
    for (std::size_t i = 0; i < cert.symbols.size(); ++i) {
        symbols.push_back(Json{{"row", i}, {"subset", idx[i]}, {"stacked", gwi::io::exact_vector(cert.symbols[i].stacked())}});
    }
    Json witness = Json::array();
    for (int w : cert.witness) witness.push_back(Json{{"row", w}, {"subset", idx[static_cast<std::size_t>(w)]}});
    const auto other = mode == gwi::AssemblyMode::Derived ? gwi::AssemblyMode::Literal : gwi::AssemblyMode::Derived;
    result = Json{{"census", census_json(census)},
                  {"mode", gwi::to_string(mode)},
                  {"rank", cert.rank},
                  {"alternate_mode", gwi::to_string(other)},
                  {"alternate_rank", cert.alternate_rank},
                  {"scalar_parts_zero", cert.scalar_parts_zero},
                  {"symbols", symbols},
                  {"matrix", gwi::io::exact_array(cert.matrix)},
                  {"witness", witness}};
    if (o.assert_rank >= 0) {
        result["assert_rank"] = o.assert_rank;
        result["assertion_passed"] = cert.rank == o.assert_rank;
        if (cert.rank != o.assert_rank) return kExitAssert;
    }
    return kExitOk;
}

int cmd_quadruples(const Options&, Json& result)
{
    const auto census = gwi::quadruple_census();
    result = census_json(census);
    Json valid = Json::array();
    const auto idx = valid_indices(census);
    for (std::size_t i = 0; i < census.valid.size(); ++i) {
        const auto& q = census.valid[i];
        Json b = Json::array(), r = Json::array();
        for (int j = 0; j < 4; ++j) {
            b.push_back(gwi::io::exact_covector(q.b[j].covector()));
            r.push_back(gwi::io::exact(q.r[j]));
        }
        valid.push_back(Json{{"subset", idx[i]}, {"b", b}, {"r", r}, {"admissible", gwi::admissible(q)}});
    }
    result["valid"] = valid;
    return kExitOk;
}

int cmd_kernel_basis(const Options& o, Json& result)
{
    const auto v = parse_rationals(o.kernel_xi, 4, "xi");
    const gwi::CoVec4q xi(v[0], v[1], v[2], v[3]);
    const auto fibre = gwi::constraint_fibre_basis(xi);
    const auto pair = gwi::divergence_symbol_pair(xi);
    Json basis = Json::array();
    for (const auto& h : fibre.basis) basis.push_back(gwi::io::exact_sym2(h));
    result = Json{{"xi", gwi::io::exact_covector(xi)},
                  {"dimension", fibre.dimension()},
                  {"basis", basis},
                  {"iota", gwi::io::exact_array(pair.iota)},
                  {"iota_rank", gwi::rank(pair.iota)},
                  {"right_inverse", gwi::io::exact_array(pair.right_inverse)}};
    return kExitOk;
}

int cmd_genericity(const Options& o, Json& result)
{
    if (o.count <= 0) throw gwi::ConfigError("--count must be positive");
    const auto s = gwi::genericity_sample(o.seed, o.count);
    result = Json{{"seed", s.seed},
                  {"requested", s.requested},
                  {"accepted", s.accepted},
                  {"rejected", s.rejected},
                  {"full_rank", s.full_rank},
                  {"fraction", s.fraction()},
                  {"rank_histogram", s.rank_histogram}};
    return kExitOk;
}

int cmd_geodesic(const Options& o, Json& result, std::string& csv)
{
    const auto spec = load_spec(o);
    const auto x = parse_point(o.x, "--x");
    const auto xi = covector_of(o, spec, x);
    const auto path = gwi::flow_samples(spec, x, xi, o.s_max, o.ds, flow_of(o));
    const double h0 = gwi::hamiltonian(spec, x, xi);
    Json samples = Json::array();
    double drift = 0.0;
    std::ostringstream os;
    os << "s,t,y1,y2,y3\n";
    for (const auto& st : path) {
        const double h = gwi::hamiltonian(spec, st.x, st.xi);
        drift = std::max(drift, std::abs(h - h0));
        samples.push_back(Json{{"s", st.s}, {"x", gwi::io::array(st.x)}, {"xi", gwi::io::array(st.xi)}, {"hamiltonian", h}});
        os << gwi::io::format_double(st.s);
        for (int i = 0; i < 4; ++i) os << ',' << gwi::io::format_double(st.x(i));
        os << '\n';
    }
    csv = os.str();
    result = Json{{"spacetime", gwi::io::spacetime_to_json(spec)},
                  {"x", gwi::io::array(x)},
                  {"xi", gwi::io::array(xi)},
                  {"samples", samples},
                  {"max_hamiltonian_drift", drift}};
    return kExitOk;
}

int cmd_cut_locus(const Options& o, Json& result)
{
    const auto spec = load_spec(o);
    const auto x = parse_point(o.x, "--x");
    const auto xi = covector_of(o, spec, x);
    gwi::CutOptions co;
    co.tol = o.tol_cut;
    const double rho = gwi::cut_value(spec, x, xi, co);
    result = Json{{"spacetime", gwi::io::spacetime_to_json(spec)},
                  {"x", gwi::io::array(x)},
                  {"xi", gwi::io::array(xi)},
                  {"rho", gwi::io::number(rho)}};
    if (std::isfinite(rho)) result["cut_point"] = gwi::io::array(gwi::flow_to(spec, x, xi, rho, flow_of(o)).x);
    return kExitOk;
}

int cmd_observe(const Options& o, Json& result, std::string& csv)
{
    const auto spec = load_spec(o);
    const auto x = parse_point(o.x, "--x");
    gwi::ObservationOptions oo;
    oo.n_dirs = o.dirs;
    oo.ds = o.obs_ds;
    oo.s_max = o.obs_s_max;
    oo.flow = flow_of(o);
    const auto tube = tube_of(o);
    const auto obs = gwi::observation_set(spec, x, tube, oo);
    const auto earliest = gwi::earliest_points(spec, obs.samples, o.tol.eps_tau);
    result = Json{{"spacetime", gwi::io::spacetime_to_json(spec)},
                  {"tube", gwi::io::tube_to_json(tube)},
                  {"observation", gwi::io::observation_to_json(obs)},
                  {"earliest_count", earliest.size()}};
    csv = gwi::io::observation_csv(obs);
    return kExitOk;
}

int cmd_flowout(const Options& o, Json& result, std::string& csv)
{
    const auto spec = load_spec(o);
    const auto x = parse_point(o.x, "--x");
    const auto xi = covector_of(o, spec, x);
    gwi::FlowoutOptions fo;
    fo.n_samples = o.samples;
    fo.ds = o.flow_ds;
    fo.s_max = o.flow_s_max;
    fo.flow = flow_of(o);
    const auto set = gwi::flowout_set(spec, x, xi, o.delta, fo);
    result = Json{{"spacetime", gwi::io::spacetime_to_json(spec)},
                  {"delta", o.delta},
                  {"flowout", gwi::io::observation_to_json(set)}};
    csv = gwi::io::observation_csv(set);
    return kExitOk;
}

int cmd_fermi(const Options& o, Json& result)
{
    const auto spec = load_spec(o);
    const auto x = parse_point(o.x, "--x");
    const auto frame = gwi::orthonormal_frame(spec, x, parse_point(o.timelike, "--t"));
    gwi::FermiOptions fo;
    fo.n_samples = o.fermi_samples;
    fo.s_extent = o.s_extent;
    const auto chart = gwi::fermi_chart(spec, x, frame, fo);
    Json frame_json = Json::array();
    for (const auto& v : frame) frame_json.push_back(gwi::io::array(v));
    Json axis = Json::array();
    double metric_err = 0.0, gamma_err = 0.0;
    for (std::size_t i = 0; i < chart.sample_parameters().size(); ++i) {
        const double s = chart.sample_parameters()[i];
        const gwi::Vec4d u(s, 0, 0, 0);
        const double me = (chart.pullback_metric(u) - gwi::minkowski<double>()).cwiseAbs().maxCoeff();
        double ge = 0.0;
        for (const auto& G : chart.pullback_christoffels(u)) ge = std::max(ge, G.cwiseAbs().maxCoeff());
        metric_err = std::max(metric_err, me);
        gamma_err = std::max(gamma_err, ge);
        axis.push_back(Json{{"s", s}, {"point", gwi::io::array(chart.worldline()[i])}, {"metric_error", me}, {"christoffel_max", ge}});
    }
    result = Json{{"spacetime", gwi::io::spacetime_to_json(spec)},
                  {"origin", gwi::io::array(x)},
                  {"frame", frame_json},
                  {"axis", axis},
                  {"max_metric_error", metric_err},
                  {"max_christoffel", gamma_err}};
    return kExitOk;
}

int cmd_detect(const Options& o, Json& result)
{
    const auto spec = load_spec(o);
    if (o.config_path.empty()) throw gwi::ConfigError("detect: --config is required");
    const auto config = gwi::io::source_config_from_json(gwi::io::read_file(o.config_path), o.tol);
    std::vector<gwi::Vec4d> queries;
    if (!o.queries_path.empty()) {
        Json q = gwi::io::read_file(o.queries_path);
        if (q.is_object() && q.contains("points")) q = q["points"];
        if (!q.is_array()) throw gwi::ConfigError("detect: queries must be a list of points");
        for (const auto& p : q) queries.push_back(gwi::io::parse_vec4(p));
    }
    const auto rep = gwi::detect(spec, config, queries);
    result = gwi::io::detection_to_json(rep);
    result["spacetime"] = gwi::io::spacetime_to_json(spec);
    result["config"] = gwi::io::source_config_to_json(config);
    return kExitOk;
}

int cmd_injectivity(const Options& o, Json& result)
{
    const auto spec = load_spec(o);
    if (o.sources_path.empty()) throw gwi::ConfigError("injectivity: --sources is required");
    Json s = gwi::io::read_file(o.sources_path);
    if (s.is_object() && s.contains("sources")) s = s["sources"];
    if (!s.is_array()) throw gwi::ConfigError("injectivity: sources must be a list of points");
    std::vector<gwi::Vec4d> sources;
    for (const auto& p : s) sources.push_back(gwi::io::parse_vec4(p));
    gwi::ObservationOptions oo;
    oo.n_dirs = o.dirs;
    oo.ds = o.obs_ds;
    oo.s_max = o.obs_s_max;
    oo.flow = flow_of(o);
    const auto tube = tube_of(o);
    const auto rep = gwi::injectivity_report(spec, sources, tube, oo, o.tol.eps_sep);
    result = gwi::io::injectivity_to_json(rep);
    result["spacetime"] = gwi::io::spacetime_to_json(spec);
    result["tube"] = gwi::io::tube_to_json(tube);
    return kExitOk;
}

int cmd_fluid(const Options& o, Json& result)
{
    if (o.tensor.empty()) throw gwi::ConfigError("fluid-decompose: --tensor is required");
    const auto comps = parse_rationals(o.tensor, 10, "--tensor");
    gwi::Vec10<gwi::Rational> v;
    for (int k = 0; k < 10; ++k) v(k) = comps[static_cast<std::size_t>(k)];
    const auto P = gwi::RationalSym2::from_components(v);
    std::vector<gwi::CoVec4q> dirs = gwi::default_fluid_directions();
    if (!o.directions_path.empty()) {
        dirs.clear();
        for (const auto& d : gwi::io::read_file(o.directions_path)) {
            if (!d.is_array() || d.size() != 4) throw gwi::ConfigError("directions: expected 4-component entries");
            dirs.emplace_back(gwi::io::parse_rational(d[0]), gwi::io::parse_rational(d[1]), gwi::io::parse_rational(d[2]),
                              gwi::io::parse_rational(d[3]));
        }
    }
    const auto mu = gwi::fluid_decompose(P, dirs);
    Json dj = Json::array();
    for (const auto& d : dirs) dj.push_back(gwi::io::exact_covector(d));
    result = Json{{"tensor", gwi::io::exact_sym2(P)}, {"directions", dj}, {"coefficients", gwi::io::exact_vector(mu)}};
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact interaction symbols and causal geometry for four-wave interactions", "gwi"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", GWI_VERSION);

    Options o;
    app.add_option("--spec", o.spec_path, "Spacetime spec file (JSON); minkowski when omitted");
    app.add_option("--out", o.out, "Write the JSON artifact here instead of stdout");
    app.add_option("--csv", o.csv, "Also write the point cloud as CSV");
    app.add_flag("--json,!--no-json", o.json, "Emit the JSON artifact");
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--dirs", o.dirs, "Number of observation directions")->check(CLI::PositiveNumber);
    app.add_option("--tol-int", o.tol.eps_int, "Intersection and cone tolerance");
    app.add_option("--tol-set", o.tol.eps_set, "Exclusion-set distance threshold");
    app.add_option("--tol-tau", o.tol.eps_tau, "Chronological precedence margin");
    app.add_option("--tol-sep", o.tol.eps_sep, "Observation-set separation threshold");
    app.add_option("--tol-flow", o.tol_flow, "Geodesic integrator tolerance");
    app.add_option("--tol-cut", o.tol_cut, "Cut value bisection tolerance");

    auto* verify = app.add_subcommand("verify-span", "Rank certificate of the interaction symbols");
    verify->add_option("--mode", o.mode, "Symbol assembly: derived or literal");
    verify->add_option("--assert-rank", o.assert_rank, "Exit 1 unless the rank equals N");

    auto* quads = app.add_subcommand("quadruples", "Census of the four-element direction subsets");

    auto* kernel = app.add_subcommand("kernel-basis", "Constraint fibre and divergence symbol at xi");
    kernel->add_option("xi", o.kernel_xi, "Covector as four comma-separated rationals");

    auto* gen = app.add_subcommand("genericity", "Span rank of random quadruple families");
    gen->add_option("--count", o.count, "Accepted families to draw");

    auto add_point_flags = [&](CLI::App* sub, bool covector) {
        sub->add_option("--x", o.x, "Base point t,y1,y2,y3");
        if (covector) {
            sub->add_option("--xi", o.xi, "Initial covector");
            sub->add_option("--dir", o.dir, "Spatial direction (e1, e2, e3 or a,b,c) of a future null covector");
        }
    };
    auto add_tube_flags = [&](CLI::App* sub) {
        sub->add_option("--tube-center", o.tube_center, "Spatial centre of the observation tube");
        sub->add_option("--r-min", o.r_min, "Inner radius");
        sub->add_option("--r-max", o.r_max, "Outer radius");
        sub->add_option("--t-min", o.t_min, "Earliest time");
        sub->add_option("--t-max", o.t_max, "Latest time");
    };

    auto* geo = app.add_subcommand("geodesic", "Integrate a bicharacteristic");
    add_point_flags(geo, true);
    geo->add_option("--s-max", o.s_max, "Final parameter");
    geo->add_option("--ds", o.ds, "Sample spacing")->check(CLI::PositiveNumber);

    auto* cut = app.add_subcommand("cut-locus", "Cut value along a null geodesic");
    add_point_flags(cut, true);

    auto* obs = app.add_subcommand("observe", "Earliest light observation set in a tube");
    add_point_flags(obs, false);
    add_tube_flags(obs);
    obs->add_option("--ds", o.obs_ds, "Sample spacing")->check(CLI::PositiveNumber);
    obs->add_option("--s-max", o.obs_s_max, "Integration limit");

    auto* flow = app.add_subcommand("flowout", "Flowout of a covector ball");
    add_point_flags(flow, true);
    flow->add_option("--delta", o.delta, "Ball radius")->check(CLI::PositiveNumber);
    flow->add_option("--samples", o.samples, "Covectors drawn from the ball")->check(CLI::PositiveNumber);
    flow->add_option("--ds", o.flow_ds, "Sample spacing")->check(CLI::PositiveNumber);
    flow->add_option("--s-max", o.flow_s_max, "Flow length in each direction");

    auto* fermi = app.add_subcommand("fermi", "Fermi chart along a timelike geodesic");
    add_point_flags(fermi, false);
    fermi->add_option("--t", o.timelike, "Timelike direction of the worldline");
    fermi->add_option("--s-extent", o.s_extent, "Worldline length sampled");
    fermi->add_option("--samples", o.fermi_samples, "Axis samples")->check(CLI::PositiveNumber);

    auto* det = app.add_subcommand("detect", "Detection verdicts for query points");
    det->add_option("--config", o.config_path, "Source configuration (JSON)");
    det->add_option("--queries", o.queries_path, "Query points (JSON list)");

    auto* inj = app.add_subcommand("injectivity", "Separation of observation sets of several sources");
    inj->add_option("--sources", o.sources_path, "Source points (JSON list)");
    add_tube_flags(inj);
    inj->add_option("--ds", o.obs_ds, "Sample spacing")->check(CLI::PositiveNumber);
    inj->add_option("--s-max", o.obs_s_max, "Integration limit");

    auto* fluid = app.add_subcommand("fluid-decompose", "Write a symmetric tensor as a sum of squares of timelike covectors");
    fluid->add_option("--tensor", o.tensor, "Ten rational components in the order 00,01,02,03,11,12,13,22,23,33");
    fluid->add_option("--directions", o.directions_path, "Covectors (JSON list); defaults to the built-in ten");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    CLI::App* sub = app.get_subcommands().front();
    Json result;
    std::string csv;
    int rc = kExitOk;
    try {
        if (sub == verify) rc = cmd_verify_span(o, result);
        else if (sub == quads) rc = cmd_quadruples(o, result);
        else if (sub == kernel) rc = cmd_kernel_basis(o, result);
        else if (sub == gen) rc = cmd_genericity(o, result);
        else if (sub == geo) rc = cmd_geodesic(o, result, csv);
        else if (sub == cut) rc = cmd_cut_locus(o, result);
        else if (sub == obs) rc = cmd_observe(o, result, csv);
        else if (sub == flow) rc = cmd_flowout(o, result, csv);
        else if (sub == fermi) rc = cmd_fermi(o, result);
        else if (sub == det) rc = cmd_detect(o, result);
        else if (sub == inj) rc = cmd_injectivity(o, result);
        else if (sub == fluid) rc = cmd_fluid(o, result);

        const Json artifact{{"version", GWI_VERSION}, {"config", run_config(app, *sub)}, {"result", result}};
        if (o.json) {
            const std::string text = gwi::io::dump(artifact);
            if (o.out.empty()) {
                std::cout << text;
            } else {
                gwi::io::write_file(o.out, text);
            }
        }
        if (!o.csv.empty()) {
            if (csv.empty()) throw gwi::ConfigError("--csv: this subcommand has no point cloud");
            gwi::io::write_file(o.csv, csv);
        }
    } catch (const gwi::ConfigError& e) {
        std::cerr << "gwi: configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const gwi::MathError& e) {
        std::cerr << "gwi: " << e.what() << '\n';
        return kExitMath;
    }
    return rc;
}
