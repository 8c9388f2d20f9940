#include "gwi/linalg.hpp"

#include "gwi/errors.hpp"

#include <gmpxx.h>

#include <utility>

namespace gwi {

namespace {

using IntMat = std::vector<std::vector<mpz_class>>;

IntMat integer_rows(const MatXq& m)
{
    IntMat a(static_cast<std::size_t>(m.rows()), std::vector<mpz_class>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        }
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).raw();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return a;
}

struct Reduced {
    IntMat a;
    std::vector<int> pivots;  // pivot column of row i
    mpz_class det = 1;        // common value of every pivot entry
};

// Fraction-free Gauss-Jordan. After the sweep every pivot entry equals det and
// all other entries of pivot columns are zero.
Reduced bareiss(IntMat a, int cols)
{
    Reduced out;
    const int rows = static_cast<int>(a.size());
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const mpz_class piv = a[r][c];
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const mpz_class f = a[i][c];
            for (int j = 0; j < cols; ++j) {
                if (j == c) continue;
                mpz_class v = piv * a[i][j] - f * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        out.pivots.push_back(c);
        prev = piv;
        ++r;
    }
    out.det = prev;
    out.a = std::move(a);
    return out;
}

}  // namespace

RankNullspace rank_nullspace(const MatXq& m)
{
    const int cols = static_cast<int>(m.cols());
    Reduced red = bareiss(integer_rows(m), cols);

    RankNullspace out;
    out.rank = static_cast<int>(red.pivots.size());
    out.pivot_columns = red.pivots;

    std::vector<bool> is_pivot(cols, false);
    for (int c : red.pivots) is_pivot[c] = true;

    out.nullspace = MatXq::Zero(cols, cols - out.rank);
    int k = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        out.nullspace(f, k) = Rational(1);
        for (int i = 0; i < out.rank; ++i) {
            out.nullspace(red.pivots[i], k) = -Rational(red.a[i][f], red.det);
        }
        ++k;
    }
    return out;
}

int rank(const MatXq& m)
{
    return static_cast<int>(bareiss(integer_rows(m), static_cast<int>(m.cols())).pivots.size());
}

std::optional<VecXq> solve(const MatXq& m, const VecXq& b)
{
    if (b.size() != m.rows()) {
        throw PreconditionError("solve: dimension mismatch");
    }
    const int n = static_cast<int>(m.cols());
    MatXq aug(m.rows(), n + 1);
    aug.leftCols(n) = m;
    aug.col(n) = b;
    Reduced red = bareiss(integer_rows(aug), n + 1);
    if (!red.pivots.empty() && red.pivots.back() == n) {
        return std::nullopt;
    }
    VecXq x = VecXq::Zero(n);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        x(red.pivots[i]) = Rational(red.a[i][n], red.det);
    }
    return x;
}

MatXq inverse(const MatXq& m)
{
    if (m.rows() != m.cols()) {
        throw PreconditionError("inverse: matrix is not square");
    }
    const int n = static_cast<int>(m.rows());
    MatXq aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = MatXq::Identity(n, n);
    Reduced red = bareiss(integer_rows(aug), 2 * n);
    if (static_cast<int>(red.pivots.size()) < n || red.pivots[n - 1] >= n) {
        throw NotABasis("inverse: matrix is singular");
    }
    MatXq out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(red.pivots[i], j) = Rational(red.a[i][n + j], red.det);
        }
    }
    return out;
}

MatXq to_rational(const Eigen::MatrixXi& m)
{
    MatXq out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = Rational(m(i, j));
        }
    }
    return out;
}

Eigen::MatrixXd to_double(const MatXq& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j).to_double();
        }
    }
    return out;
}

}  // namespace gwi
