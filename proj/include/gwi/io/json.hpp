#ifndef GWI_IO_JSON_HPP
#define GWI_IO_JSON_HPP

// Artifact serialization. Objects keep sorted keys, doubles print with 17
// significant digits, non-finite doubles become the strings "inf", "-inf"
// and "nan", and exact rationals are "num/den" strings.

#include "gwi/detect/detection.hpp"
#include "gwi/geom/observation.hpp"
#include "gwi/geom/spacetime.hpp"
#include "gwi/rational.hpp"
#include "gwi/tensor.hpp"

#include <json.hpp>

#include <string>

namespace gwi::io {

using Json = nlohmann::json;

std::string dump(const Json& j, int indent = 2);
/// %.17g, with a trailing ".0" on integral values.
std::string format_double(double v);

Json number(double v);
Json exact(const Rational& q);

template <typename Derived>
Json array(const Eigen::MatrixBase<Derived>& v)
{
    Json out = Json::array();
    if constexpr (Derived::ColsAtCompileTime == 1) {
        for (Eigen::Index i = 0; i < v.rows(); ++i) out.push_back(number(static_cast<double>(v(i))));
    } else {
        for (Eigen::Index i = 0; i < v.rows(); ++i) out.push_back(array(Eigen::VectorXd(v.row(i).transpose().template cast<double>())));
    }
    return out;
}

/// Rational vectors and matrices; a matrix becomes a list of rows.
Json exact_array(const MatXq& m);
Json exact_vector(const VecXq& v);
Json exact_sym2(const RationalSym2& h);
Json exact_covector(const CoVec4q& v);

/// Number or "num/den" string.
Rational parse_rational(const Json& j);
Vec4d parse_vec4(const Json& j);
Vec3d parse_vec3(const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// {"type": "minkowski"}, {"type": "flat_torus", "lengths": [L1, L2, L3]} or
/// {"type": "conformal_minkowski", "t_coeffs": [...], "r2_coeffs": [...]}.
SpacetimeSpec spacetime_from_json(const Json& j);
Json spacetime_to_json(const SpacetimeSpec& spec);
SpacetimeSpec load_spacetime(const std::string& path);

/// {"center": [..], "r_min", "r_max", "t_min", "t_max"}; missing bounds are open.
Tube tube_from_json(const Json& j);
Json tube_to_json(const Tube& t);

/// {"sources": [{"z": [...], "zeta": [...]} x4], "tube": {...}}
SourceConfig source_config_from_json(const Json& j, const Tolerances& tol = {});
Json source_config_to_json(const SourceConfig& c);

Json observation_to_json(const ObservationSet& obs);
/// Header dir_index,s,t,y1,y2,y3,earliest.
std::string observation_csv(const ObservationSet& obs);

Json detection_to_json(const DetectionReport& rep);
Json injectivity_to_json(const InjectivityReport& rep);

}  // namespace gwi::io

#endif  // GWI_IO_JSON_HPP
