#include "gwi/io/json.hpp"

#include "gwi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gwi::io {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // keep a marker that the value is floating point
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace {

void dump_to(std::ostringstream& os, const Json& j, int indent, int depth)
{
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << '{' << nl;
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
            if (!first) os << ',' << nl;
            first = false;
            os << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
            dump_to(os, it.value(), indent, depth + 1);
        }
        os << nl << close_pad << '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        // arrays of scalars stay on one line
        const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
        os << '[';
        bool first = true;
        for (const auto& e : j) {
            if (!first) os << (flat ? ", " : ",");
            if (!flat) os << nl << pad;
            first = false;
            dump_to(os, e, indent, depth + 1);
        }
        if (!flat) os << nl << close_pad;
        os << ']';
        return;
    }
    case Json::value_t::number_float: os << format_double(j.get<double>()); return;
    default: os << j.dump(); return;
    }
}

double read_number(const Json& j, const char* what)
{
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return kInfinity;
        if (s == "-inf") return -kInfinity;
    }
    throw ConfigError(std::string("expected a number for ") + what);
}

}  // namespace

std::string dump(const Json& j, int indent)
{
    std::ostringstream os;
    dump_to(os, j, indent, 0);
    os << '\n';
    return os.str();
}

Json number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

Json exact(const Rational& q)
{
    return q.str();
}

Json exact_array(const MatXq& m)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(exact(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

Json exact_vector(const VecXq& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(exact(v(i)));
    return out;
}

Json exact_sym2(const RationalSym2& h)
{
    return exact_vector(h.components());
}

Json exact_covector(const CoVec4q& v)
{
    return exact_vector(v.c);
}

Rational parse_rational(const Json& j)
{
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("expected an integer or a \"num/den\" string");
}

Vec4d parse_vec4(const Json& j)
{
    if (!j.is_array() || j.size() != 4) throw ConfigError("expected an array of 4 numbers");
    Vec4d v;
    for (int i = 0; i < 4; ++i) v(i) = read_number(j[i], "vector component");
    return v;
}

Vec3d parse_vec3(const Json& j)
{
    if (!j.is_array() || j.size() != 3) throw ConfigError("expected an array of 3 numbers");
    Vec3d v;
    for (int i = 0; i < 3; ++i) v(i) = read_number(j[i], "vector component");
    return v;
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
}

SpacetimeSpec spacetime_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ConfigError("spacetime spec: missing \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "minkowski") return SpacetimeSpec::minkowski();
    if (type == "flat_torus") {
        const Vec3d L = j.contains("lengths") ? parse_vec3(j["lengths"]) : Vec3d::Ones();
        return SpacetimeSpec::flat_torus(L(0), L(1), L(2));
    }
    if (type == "conformal_minkowski") {
        ConformalFactor om;
        try {
            if (j.contains("t_coeffs")) om.t_coeffs = j["t_coeffs"].get<std::vector<double>>();
            if (j.contains("r2_coeffs")) om.r2_coeffs = j["r2_coeffs"].get<std::vector<double>>();
        } catch (const Json::exception& e) {
            throw ConfigError(std::string("conformal_minkowski: ") + e.what());
        }
        return SpacetimeSpec::conformal_minkowski(om);
    }
    throw ConfigError("spacetime spec: unknown type \"" + type + "\"");
}

Json spacetime_to_json(const SpacetimeSpec& spec)
{
    Json j;
    j["type"] = to_string(spec.preset());
    if (spec.is_torus()) j["lengths"] = array(spec.lengths());
    if (spec.preset() == Preset::ConformalMinkowski) {
        j["t_coeffs"] = spec.omega().t_coeffs;
        j["r2_coeffs"] = spec.omega().r2_coeffs;
    }
    if (spec.preset() == Preset::Custom) j["name"] = spec.name();
    return j;
}

SpacetimeSpec load_spacetime(const std::string& path)
{
    return spacetime_from_json(read_file(path));
}

Tube tube_from_json(const Json& j)
{
    if (!j.is_object()) throw ConfigError("tube: expected an object");
    Tube t;
    if (j.contains("center")) t.center = parse_vec3(j["center"]);
    if (j.contains("r_min")) t.r_min = read_number(j["r_min"], "r_min");
    if (j.contains("r_max")) t.r_max = read_number(j["r_max"], "r_max");
    if (j.contains("t_min")) t.t_min = read_number(j["t_min"], "t_min");
    if (j.contains("t_max")) t.t_max = read_number(j["t_max"], "t_max");
    if (!(t.r_min >= 0) || !(t.r_max > t.r_min) || !(t.t_max > t.t_min)) {
        throw ConfigError("tube: empty or inverted bounds");
    }
    return t;
}

Json tube_to_json(const Tube& t)
{
    return Json{{"center", array(t.center)},
                {"r_min", number(t.r_min)},
                {"r_max", number(t.r_max)},
                {"t_min", number(t.t_min)},
                {"t_max", number(t.t_max)}};
}

SourceConfig source_config_from_json(const Json& j, const Tolerances& tol)
{
    if (!j.is_object() || !j.contains("sources") || !j["sources"].is_array() || j["sources"].size() != 4) {
        throw ConfigError("source config: expected \"sources\" with four entries");
    }
    SourceConfig c;
    for (int k = 0; k < 4; ++k) {
        const Json& s = j["sources"][k];
        if (!s.contains("z") || !s.contains("zeta")) throw ConfigError("source config: each source needs z and zeta");
        c.sources[k] = Source{parse_vec4(s["z"]), parse_vec4(s["zeta"])};
    }
    if (j.contains("tube")) c.tube = tube_from_json(j["tube"]);
    c.tol = tol;
    return c;
}

Json source_config_to_json(const SourceConfig& c)
{
    Json sources = Json::array();
    for (const auto& s : c.sources) sources.push_back(Json{{"z", array(s.z)}, {"zeta", array(s.zeta)}});
    return Json{{"sources", sources},
                {"tube", tube_to_json(c.tube)},
                {"tolerances",
                 {{"eps_int", c.tol.eps_int},
                  {"eps_set", c.tol.eps_set},
                  {"eps_tau", c.tol.eps_tau},
                  {"eps_sep", c.tol.eps_sep}}}};
}

Json observation_to_json(const ObservationSet& obs)
{
    Json dirs = Json::array();
    for (std::size_t i = 0; i < obs.directions.size(); ++i) {
        dirs.push_back(Json{{"index", i}, {"xi", array(obs.directions[i])}, {"cut_value", number(obs.cut_values[i])}});
    }
    Json samples = Json::array();
    for (const auto& s : obs.samples) {
        samples.push_back(Json{{"dir_index", s.dir_index},
                               {"s", number(s.s)},
                               {"point", array(s.point)},
                               {"xi", array(s.xi)},
                               {"earliest", s.earliest}});
    }
    return Json{{"source", array(obs.source)}, {"directions", dirs}, {"samples", samples}};
}

std::string observation_csv(const ObservationSet& obs)
{
    std::ostringstream os;
    os << "dir_index,s,t,y1,y2,y3,earliest\n";
    for (const auto& s : obs.samples) {
        os << s.dir_index << ',' << format_double(s.s);
        for (int i = 0; i < 4; ++i) os << ',' << format_double(s.point(i));
        os << ',' << (s.earliest ? 1 : 0) << '\n';
    }
    return os.str();
}

Json detection_to_json(const DetectionReport& rep)
{
    Json j;
    if (rep.intersection) {
        const auto& x = *rep.intersection;
        Json params = Json::array(), cuts = Json::array();
        for (int k = 0; k < 4; ++k) {
            params.push_back(number(x.params[k]));
            cuts.push_back(number(x.cut_values[k]));
        }
        j["intersection"] = Json{{"point", array(x.point)},
                                 {"params", params},
                                 {"cut_values", cuts},
                                 {"residual", number(x.residual)}};
    } else {
        j["intersection"] = nullptr;
    }
    Json cuts = Json::array();
    for (const auto& [k, p] : rep.cut_points) cuts.push_back(Json{{"source", k + 1}, {"point", array(p)}});
    j["cut_points"] = cuts;
    Json cones = Json::array();
    for (const auto& c : rep.triple_cones) {
        cones.push_back(Json{{"sources", {c.indices[0] + 1, c.indices[1] + 1, c.indices[2] + 1}},
                             {"vertex", array(c.vertex)}});
    }
    j["triple_cones"] = cones;
    Json qs = Json::array();
    for (const auto& q : rep.queries) {
        Json e{{"y", array(q.y)}, {"status", q.status}, {"in_causal_future", q.in_causal_future}};
        e["verdict"] = q.verdict ? Json(*q.verdict) : Json(nullptr);
        if (!q.reason.empty()) e["reason"] = q.reason;
        qs.push_back(std::move(e));
    }
    j["queries"] = qs;
    return j;
}

Json injectivity_to_json(const InjectivityReport& rep)
{
    auto chron = [](Chronology c) {
        switch (c) {
        case Chronology::Precedes: return "precedes";
        case Chronology::Follows: return "follows";
        case Chronology::Incomparable: break;
        }
        return "incomparable";
    };
    Json sources = Json::array();
    for (std::size_t i = 0; i < rep.sources.size(); ++i) {
        sources.push_back(Json{{"point", array(rep.sources[i])},
                               {"observable", static_cast<bool>(rep.observable[i])},
                               {"samples", rep.sample_counts[i]}});
    }
    Json pairs = Json::array();
    for (const auto& p : rep.pairs) {
        Json e{{"indices", {p.indices[0], p.indices[1]}},
               {"distance", number(p.distance)},
               {"separated", p.separated},
               {"tau", number(p.tau)},
               {"oracle", chron(p.oracle)},
               {"earlier_votes", p.earlier_votes},
               {"later_votes", p.later_votes},
               {"heuristic", true}};
        e["recovered"] = p.recovered ? Json(chron(*p.recovered)) : Json(nullptr);
        if (p.distance == 0.0) e["note"] = "identical observation sets: non-injective input";
        pairs.push_back(std::move(e));
    }
    return Json{{"sources", sources}, {"pairs", pairs}};
}

}  // namespace gwi::io
