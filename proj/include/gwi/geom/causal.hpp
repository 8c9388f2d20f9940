#ifndef GWI_GEOM_CAUSAL_HPP
#define GWI_GEOM_CAUSAL_HPP

#include "gwi/geom/flow.hpp"
#include "gwi/geom/spacetime.hpp"

#include <limits>

namespace gwi {

/// Time separation. Minkowski: sqrt(dt^2 - |dy|^2) for dt > |dy|, else 0.
/// Flat torus: maximum of that over lattice translates of dy. Other presets
/// throw Unsupported.
double time_separation(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q);

/// p << q. Conformally invariant, so conformal_minkowski uses the Minkowski
/// relation. Custom specs throw Unsupported.
bool chronological(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q);

/// p <= q (q in J+(p)), with slack `tol` on the light cone.
bool causal(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q, double tol = 1e-9);

enum class Chronology { Precedes, Follows, Incomparable };

Chronology chronological_relation(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q);

/// q in I(p, r) = I+(p) cap I-(r).
bool in_diamond(const SpacetimeSpec& spec, const Vec4d& p, const Vec4d& q, const Vec4d& r);

struct CutOptions {
    double s_max = 0.0;  // 0 selects a preset default
    double tol = 1e-6;
};

/// rho(x, xi) = sup{s : tau(x, gamma(s)) = 0}, or +inf when gamma(s_max) is
/// still not in I+(x). Bisection on the monotone predicate.
double cut_value(const SpacetimeSpec& spec, const Vec4d& x, const Vec4d& xi, const CutOptions& opts = {});

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace gwi

#endif  // GWI_GEOM_CAUSAL_HPP
