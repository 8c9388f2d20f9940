#ifndef GWI_LINALG_HPP
#define GWI_LINALG_HPP

// Exact linear algebra over Q. Elimination is fraction-free: each row is
// scaled to integers and the Bareiss update keeps every intermediate entry a
// determinant minor, so entries grow polynomially instead of exponentially.

#include "gwi/rational.hpp"
#include "gwi/tensor.hpp"

#include <optional>
#include <vector>

namespace gwi {

struct RankNullspace {
    int rank = 0;
    std::vector<int> pivot_columns;
    /// Columns are nullspace vectors, one per free column in increasing order.
    MatXq nullspace;
};

/// Pivot choice is deterministic: for each column in turn, the first row at or
/// below the current one with a nonzero entry.
RankNullspace rank_nullspace(const MatXq& m);

int rank(const MatXq& m);

/// Basic solution of m x = b (free variables set to zero), or nullopt if the
/// system is inconsistent.
std::optional<VecXq> solve(const MatXq& m, const VecXq& b);

/// Throws NotABasis for a singular square matrix.
MatXq inverse(const MatXq& m);

/// Lift to exact rationals and back.
MatXq to_rational(const Eigen::MatrixXi& m);
Eigen::MatrixXd to_double(const MatXq& m);

}  // namespace gwi

#endif  // GWI_LINALG_HPP
