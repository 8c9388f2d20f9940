#ifndef GWI_TENSOR_HPP
#define GWI_TENSOR_HPP

// Covectors and symmetric 2-tensors on a 4-dimensional Lorentzian fibre,
// templated on the scalar so the same code serves exact (Rational) and
// floating-point (double) callers. Signature is (-,+,+,+) throughout.

#include "gwi/errors.hpp"
#include "gwi/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <type_traits>
#include <utility>

namespace gwi {

template <typename Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec10 = Eigen::Matrix<Scalar, 10, 1>;

using Vec4d = Vec4<double>;
using Mat4d = Mat4<double>;
using Vec4q = Vec4<Rational>;
using Mat4q = Mat4<Rational>;
using VecXq = VecX<Rational>;
using MatXq = MatX<Rational>;

template <typename Scalar>
inline bool is_exact_zero(const Scalar& s)
{
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return s.is_zero();
    } else {
        return s == Scalar(0);
    }
}

/// The Minkowski matrix diag(-1, 1, 1, 1). It is its own inverse.
template <typename Scalar>
Mat4<Scalar> minkowski()
{
    Mat4<Scalar> m = Mat4<Scalar>::Zero();
    m(0, 0) = Scalar(-1);
    m(1, 1) = Scalar(1);
    m(2, 2) = Scalar(1);
    m(3, 3) = Scalar(1);
    return m;
}

enum class Variance { Covector, Vector };

/// Four components plus an index-position flag. Lower-index objects pair
/// through the inverse metric, upper-index objects through the metric.
template <typename Scalar>
struct CoVec4 {
    Vec4<Scalar> c = Vec4<Scalar>::Zero();
    Variance variance = Variance::Covector;

    CoVec4() = default;
    explicit CoVec4(Vec4<Scalar> comps, Variance v = Variance::Covector)
        : c(std::move(comps)), variance(v)
    {
    }
    CoVec4(Scalar a, Scalar b, Scalar d, Scalar e, Variance v = Variance::Covector) : variance(v)
    {
        c << a, b, d, e;
    }

    const Scalar& operator[](int i) const { return c(i); }
    Scalar& operator[](int i) { return c(i); }

    [[nodiscard]] bool is_zero() const
    {
        for (int i = 0; i < 4; ++i) {
            if (!is_exact_zero(c(i))) return false;
        }
        return true;
    }

    CoVec4& operator+=(const CoVec4& o)
    {
        c += o.c;
        return *this;
    }
    CoVec4& operator-=(const CoVec4& o)
    {
        c -= o.c;
        return *this;
    }
    friend CoVec4 operator+(CoVec4 a, const CoVec4& b) { return a += b; }
    friend CoVec4 operator-(CoVec4 a, const CoVec4& b) { return a -= b; }
    friend CoVec4 operator-(const CoVec4& a) { return CoVec4(Vec4<Scalar>(-a.c), a.variance); }
    friend CoVec4 operator*(const Scalar& s, const CoVec4& a) { return CoVec4(Vec4<Scalar>(a.c * s), a.variance); }
    friend CoVec4 operator*(const CoVec4& a, const Scalar& s) { return s * a; }
    friend bool operator==(const CoVec4& a, const CoVec4& b)
    {
        return a.variance == b.variance && a.c == b.c;
    }
};

using CoVec4q = CoVec4<Rational>;
using CoVec4d = CoVec4<double>;

/// Index raising with the Minkowski metric: xi_*^j = g^{jk} xi_k.
template <typename Scalar>
CoVec4<Scalar> raise(const CoVec4<Scalar>& u)
{
    if (u.variance != Variance::Covector) {
        throw PreconditionError("raise: argument is already a vector");
    }
    return CoVec4<Scalar>(Vec4<Scalar>(minkowski<Scalar>() * u.c), Variance::Vector);
}

template <typename Scalar>
CoVec4<Scalar> lower(const CoVec4<Scalar>& v)
{
    if (v.variance != Variance::Vector) {
        throw PreconditionError("lower: argument is already a covector");
    }
    return CoVec4<Scalar>(Vec4<Scalar>(minkowski<Scalar>() * v.c), Variance::Covector);
}

/// Minkowski pairing. Two covectors pair with g^{-1}, two vectors with g, and
/// mixed arguments use the natural contraction u_i v^i.
template <typename Scalar>
Scalar mink_pair(const CoVec4<Scalar>& u, const CoVec4<Scalar>& v)
{
    if (u.variance != v.variance) {
        return u.c.dot(v.c);
    }
    Scalar s = -(u.c(0) * v.c(0));
    for (int i = 1; i < 4; ++i) {
        s += u.c(i) * v.c(i);
    }
    return s;
}

template <typename Scalar>
bool is_lightlike(const CoVec4<Scalar>& u)
{
    return is_exact_zero(mink_pair(u, u));
}

/// q(eta) = 1 / g^{-1}(eta, eta). Throws NullDenominator when eta is lightlike.
template <typename Scalar>
Scalar q_factor(const CoVec4<Scalar>& eta)
{
    const Scalar d = mink_pair(eta, eta);
    if (is_exact_zero(d)) {
        throw NullDenominator("q_factor: covector is lightlike");
    }
    return Scalar(1) / d;
}

/// Symmetric 2-tensor on the 4-dimensional fibre. The component order
/// (00,01,02,03,11,12,13,22,23,33) is the serialization contract.
template <typename Scalar>
class Sym2 {
public:
    static constexpr std::array<std::pair<int, int>, 10> kOrder{
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

    Sym2() : m_(Mat4<Scalar>::Zero()) {}

    static Sym2 from_components(const Vec10<Scalar>& comps)
    {
        Sym2 s;
        for (int k = 0; k < 10; ++k) {
            s.set(kOrder[k].first, kOrder[k].second, comps(k));
        }
        return s;
    }

    template <typename Derived>
    static Sym2 from_components(const Eigen::MatrixBase<Derived>& comps)
    {
        if (comps.size() != 10) {
            throw PreconditionError("Sym2: expected 10 components");
        }
        Vec10<Scalar> v;
        for (int k = 0; k < 10; ++k) v(k) = comps(k);
        return from_components(v);
    }

    /// Symmetric part is not taken: a non-symmetric matrix is rejected.
    static Sym2 from_matrix(const Mat4<Scalar>& m)
    {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (!(m(i, j) == m(j, i))) {
                    throw PreconditionError("Sym2: matrix is not symmetric");
                }
            }
        }
        Sym2 s;
        s.m_ = m;
        return s;
    }

    /// Unit tensor for component k of the fixed order (both off-diagonal slots set).
    static Sym2 unit(int k)
    {
        Sym2 s;
        s.set(kOrder[k].first, kOrder[k].second, Scalar(1));
        return s;
    }

    [[nodiscard]] Vec10<Scalar> components() const
    {
        Vec10<Scalar> v;
        for (int k = 0; k < 10; ++k) {
            v(k) = m_(kOrder[k].first, kOrder[k].second);
        }
        return v;
    }

    const Scalar& operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, const Scalar& v)
    {
        m_(i, j) = v;
        m_(j, i) = v;
    }

    [[nodiscard]] const Mat4<Scalar>& matrix() const { return m_; }

    [[nodiscard]] bool is_zero() const
    {
        for (int k = 0; k < 10; ++k) {
            if (!is_exact_zero(m_(kOrder[k].first, kOrder[k].second))) return false;
        }
        return true;
    }

    /// h(u, v) for two vectors, or the raised form for two covectors.
    [[nodiscard]] Scalar apply(const CoVec4<Scalar>& u, const CoVec4<Scalar>& v) const
    {
        const Vec4<Scalar> uu = u.variance == Variance::Vector ? u.c : Vec4<Scalar>(minkowski<Scalar>() * u.c);
        const Vec4<Scalar> vv = v.variance == Variance::Vector ? v.c : Vec4<Scalar>(minkowski<Scalar>() * v.c);
        return uu.dot(m_ * vv);
    }

    Sym2& operator+=(const Sym2& o)
    {
        m_ += o.m_;
        return *this;
    }
    Sym2& operator-=(const Sym2& o)
    {
        m_ -= o.m_;
        return *this;
    }
    friend Sym2 operator+(Sym2 a, const Sym2& b) { return a += b; }
    friend Sym2 operator-(Sym2 a, const Sym2& b) { return a -= b; }
    friend Sym2 operator-(const Sym2& a)
    {
        Sym2 r;
        r.m_ = -a.m_;
        return r;
    }
    friend Sym2 operator*(const Scalar& s, const Sym2& a)
    {
        Sym2 r;
        r.m_ = a.m_ * s;
        return r;
    }
    friend Sym2 operator*(const Sym2& a, const Scalar& s) { return s * a; }
    friend bool operator==(const Sym2& a, const Sym2& b) { return a.m_ == b.m_; }

private:
    Mat4<Scalar> m_;
};

using RationalSym2 = Sym2<Rational>;
using Sym2d = Sym2<double>;

namespace detail {

// Gauss-Jordan inverse. Exact scalars pivot on the first nonzero entry,
// floating scalars on the largest magnitude.
template <typename Scalar>
Mat4<Scalar> invert4(const Mat4<Scalar>& g)
{
    Mat4<Scalar> a = g;
    Mat4<Scalar> inv = Mat4<Scalar>::Identity();
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        if constexpr (std::is_floating_point_v<Scalar>) {
            Scalar best = 0;
            for (int r = col; r < 4; ++r) {
                if (std::abs(a(r, col)) > best) {
                    best = std::abs(a(r, col));
                    piv = r;
                }
            }
            const Scalar scale = g.cwiseAbs().maxCoeff();
            if (piv < 0 || best <= Scalar(1e-14) * scale) piv = -1;
        } else {
            for (int r = col; r < 4; ++r) {
                if (!is_exact_zero(a(r, col))) {
                    piv = r;
                    break;
                }
            }
        }
        if (piv < 0) {
            throw SingularMetric("metric is singular");
        }
        a.row(col).swap(a.row(piv));
        inv.row(col).swap(inv.row(piv));
        const Scalar p = a(col, col);
        a.row(col) /= p;
        inv.row(col) /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col || is_exact_zero(a(r, col))) continue;
            const Scalar f = a(r, col);
            a.row(r) -= f * a.row(col);
            inv.row(r) -= f * inv.row(col);
        }
    }
    return inv;
}

}  // namespace detail

/// tr_g h = g^{jk} h_{jk}.
template <typename Scalar>
Scalar trace(const Sym2<Scalar>& h, const Mat4<Scalar>& g_inverse)
{
    return g_inverse.cwiseProduct(h.matrix()).sum();
}

template <typename Scalar>
Scalar trace(const Sym2<Scalar>& h)
{
    return trace(h, minkowski<Scalar>());
}

/// Trace reversal I_g h = h - (tr_g h / 2) g. It is an involution in four dimensions.
template <typename Scalar>
Sym2<Scalar> involution(const Sym2<Scalar>& h, const Sym2<Scalar>& g)
{
    const Mat4<Scalar> ginv = detail::invert4(g.matrix());
    const Scalar half_tr = trace(h, ginv) / Scalar(2);
    return h - half_tr * g;
}

template <typename Scalar>
Sym2<Scalar> involution(const Sym2<Scalar>& h)
{
    const Sym2<Scalar> g = Sym2<Scalar>::from_matrix(minkowski<Scalar>());
    return h - (trace(h) / Scalar(2)) * g;
}

/// xi (x)^ eta = xi (x) eta + eta (x) xi.
template <typename Scalar>
Sym2<Scalar> sym_outer(const CoVec4<Scalar>& xi, const CoVec4<Scalar>& eta)
{
    const Mat4<Scalar> m = xi.c * eta.c.transpose() + eta.c * xi.c.transpose();
    return Sym2<Scalar>::from_matrix(m);
}

template <typename Scalar>
Sym2<Scalar> outer(const CoVec4<Scalar>& xi)
{
    return Sym2<Scalar>::from_matrix(Mat4<Scalar>(xi.c * xi.c.transpose()));
}

/// (g^{-1} h g^{-1})(eta, eta) for a covector eta: the scalar symbol of
/// g^{-1} h g^{-1}(D, D).
template <typename Scalar>
Scalar raised_quadratic(const Sym2<Scalar>& h, const CoVec4<Scalar>& eta)
{
    return h.apply(eta, eta);
}

}  // namespace gwi

#endif  // GWI_TENSOR_HPP
