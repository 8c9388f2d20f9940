#include "gwi/symbol/certificate.hpp"

#include "gwi/errors.hpp"
#include "gwi/linalg.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

namespace gwi {

namespace {

MatXq stack(const std::vector<SymbolVector>& symbols)
{
    if (symbols.empty()) return MatXq(0, 14);
    const int width = 10 + symbols.front().L();
    MatXq m(static_cast<Eigen::Index>(symbols.size()), width);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        m.row(static_cast<Eigen::Index>(i)) = symbols[i].stacked().transpose();
    }
    return m;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

std::optional<Quadruple> draw_quadruple(std::mt19937_64& rng)
{
    std::array<std::optional<LightDirection>, 4> dirs;
    for (auto& d : dirs) {
        const Rational m = random_rational(rng), n = random_rational(rng), s = random_rational(rng);
        if (m.is_zero() && n.is_zero() && s.is_zero()) return std::nullopt;
        d = pythagorean_direction(m, n, s);
    }
    try {
        Quadruple q = decompose_xi({*dirs[0], *dirs[1], *dirs[2], *dirs[3]});
        if (!admissible(q)) return std::nullopt;
        return q;
    } catch (const NotABasis&) {
        return std::nullopt;
    }
}

}  // namespace

int symbol_span_rank(const std::vector<SymbolVector>& symbols)
{
    return symbols.empty() ? 0 : rank(stack(symbols));
}

SpanCertificate span_rank_certificate(const std::vector<Quadruple>& quadruples, AssemblyMode mode)
{
    SpanCertificate cert;
    cert.mode = mode;
    cert.quadruples = quadruples;
    const AssemblyMode other = mode == AssemblyMode::Derived ? AssemblyMode::Literal : AssemblyMode::Derived;
    std::vector<SymbolVector> alternate;
    for (const auto& q : quadruples) {
        const CascadeState c = cascade_symbols(q);
        cert.symbols.push_back(interaction_symbol(c, mode));
        alternate.push_back(interaction_symbol(c, other));
        cert.scalar_parts_zero = cert.scalar_parts_zero && cert.symbols.back().scalar.isZero();
    }
    cert.matrix = stack(cert.symbols);
    if (quadruples.empty()) return cert;

    // Pivot columns of the transpose are the first independent rows.
    const RankNullspace rn = rank_nullspace(MatXq(cert.matrix.transpose()));
    cert.rank = rn.rank;
    cert.witness = rn.pivot_columns;
    cert.alternate_rank = symbol_span_rank(alternate);
    return cert;
}

bool admissible(const Quadruple& q)
{
    if (!q.valid()) return false;
    std::array<CoVec4q, 4> x;
    for (int j = 0; j < 4; ++j) x[j] = q.xi_j(j);
    const CoVec4q eta12 = x[0] + x[1], eta34 = x[2] + x[3];
    for (const CoVec4q& eta : {eta12, eta34, eta12 + x[2], eta12 + x[3], eta34 + x[0], eta34 + x[1]}) {
        if (is_lightlike(eta)) return false;
    }
    return true;
}

int family_rank(const QuadrupleFamily& family)
{
    std::vector<SymbolVector> symbols;
    for (const auto& q : family) symbols.push_back(interaction_symbol(q));
    return symbol_span_rank(symbols);
}

GenericityStats genericity_sample(std::uint64_t seed, int count, int max_attempts_factor)
{
    if (count < 1) {
        throw PreconditionError("genericity_sample: count must be positive");
    }
    GenericityStats stats;
    stats.seed = seed;
    stats.requested = count;

    // Drawing is sequential so the accepted families depend only on the seed.
    std::mt19937_64 rng(seed);
    std::vector<QuadrupleFamily> families;
    const long max_attempts = static_cast<long>(count) * max_attempts_factor;
    for (long attempt = 0; attempt < max_attempts && static_cast<int>(families.size()) < count; ++attempt) {
        std::array<std::optional<Quadruple>, 6> drawn;
        bool ok = true;
        for (auto& d : drawn) {
            d = draw_quadruple(rng);
            ok = ok && d.has_value();
        }
        if (!ok) {
            ++stats.rejected;
            continue;
        }
        families.push_back({*drawn[0], *drawn[1], *drawn[2], *drawn[3], *drawn[4], *drawn[5]});
    }
    stats.accepted = static_cast<int>(families.size());

    std::vector<int> ranks(families.size(), 0);
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < families.size(); i += workers) {
                ranks[i] = family_rank(families[i]);
            }
        }));
    }
    for (auto& j : jobs) j.get();

    for (int r : ranks) {
        ++stats.rank_histogram[static_cast<std::size_t>(std::clamp(r, 0, 6))];
        if (r == 6) ++stats.full_rank;
    }
    return stats;
}

}  // namespace gwi
