#ifndef GWI_SYMBOL_CERTIFICATE_HPP
#define GWI_SYMBOL_CERTIFICATE_HPP

#include "gwi/symbol/cascade.hpp"
#include "gwi/symbol/directions.hpp"

#include <cstdint>
#include <vector>

namespace gwi {

struct SpanCertificate {
    AssemblyMode mode = AssemblyMode::Derived;
    std::vector<Quadruple> quadruples;
    std::vector<SymbolVector> symbols;
    MatXq matrix;  // one stacked symbol per row
    int rank = 0;
    /// Rank of the same rows assembled with the other mode, for comparison.
    int alternate_rank = 0;
    bool scalar_parts_zero = true;
    /// Row indices of an independent subset of size rank (first pivots).
    std::vector<int> witness;
};

SpanCertificate span_rank_certificate(const std::vector<Quadruple>& quadruples,
                                      AssemblyMode mode = AssemblyMode::Derived);

/// Exact rank of the stacked symbols.
int symbol_span_rank(const std::vector<SymbolVector>& symbols);

/// Six quadruples whose interaction symbols are compared for full span.
using QuadrupleFamily = std::array<Quadruple, 6>;

/// Checks the quadruple is valid and that no eta used by the cascade is lightlike.
bool admissible(const Quadruple& q);

struct GenericityStats {
    std::uint64_t seed = 0;
    int requested = 0;
    int accepted = 0;
    /// Families discarded because some quadruple failed the basis, nonzero
    /// coefficient or non-lightlike eta filter.
    int rejected = 0;
    int full_rank = 0;  // accepted families with span rank 6
    std::array<int, 7> rank_histogram{};
    [[nodiscard]] double fraction() const { return accepted == 0 ? 0.0 : double(full_rank) / accepted; }
};

/// Draws direction quadruples with random rational (m, n, s) in the
/// Pythagorean parametrization until `count` families pass the filters.
/// Deterministic for a given seed, including when ranks are computed on
/// several threads.
GenericityStats genericity_sample(std::uint64_t seed, int count, int max_attempts_factor = 20);

/// Rank of the span of the six derived symbols of a family.
int family_rank(const QuadrupleFamily& family);

}  // namespace gwi

#endif  // GWI_SYMBOL_CERTIFICATE_HPP
