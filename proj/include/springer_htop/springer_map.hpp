#ifndef SPRINGER_HTOP_SPRINGER_MAP_HPP
#define SPRINGER_HTOP_SPRINGER_MAP_HPP

// Combinatorial type-C Springer correspondence rho = (lambda, mu) -> A_rho.
//
// The interleaved sequence nu has nu_{2i-1} = mu_i, nu_{2i} = lambda_i and
// zeros elsewhere. A left-to-right scan at position i compares nu_i with
// nu_{i+1}:
//   nu_i == nu_{i+1} - 1   ->  a_i = a_{i+1} = 2 nu_i + 1,             i += 2
//   nu_i <= nu_{i+1} - 2   ->  a_i = 2 nu_{i+1} - 2, a_{i+1} = 2 nu_i + 2, i += 2
//   nu_i >= nu_{i+1}       ->  a_i = 2 nu_i,                          i += 1
// The last position compares against 0. Parts are sorted afterwards.

#include <springer_htop/errors.hpp>
#include <springer_htop/partitions.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace htop {

/// nu_1, nu_2, ... stored 0-based.
struct NuSequence {
    std::vector<int> values;

    int total() const { return std::accumulate(values.begin(), values.end(), 0); }
    friend bool operator==(const NuSequence&, const NuSequence&) = default;
};

inline int default_nu_length(const Bipartition& rho) { return 2 * (rho.first.length() + rho.second.length()) + 2; }

inline NuSequence nu_sequence(const Bipartition& rho, int length)
{
    const int needed = 2 * std::max(rho.first.length(), rho.second.length()) + 2;
    if (length < needed)
        throw InputError("nu_sequence: length " + std::to_string(length) + " too short for " + rho.to_string()
                         + " (need " + std::to_string(needed) + ")");
    NuSequence nu{std::vector<int>(static_cast<std::size_t>(length), 0)};
    for (int i = 0; i < rho.second.length(); ++i)
        nu.values[static_cast<std::size_t>(2 * i)] = rho.second[static_cast<std::size_t>(i)];
    for (int i = 0; i < rho.first.length(); ++i)
        nu.values[static_cast<std::size_t>(2 * i + 1)] = rho.first[static_cast<std::size_t>(i)];
    return nu;
}

struct SpringerTrace {
    NuSequence nu;
    std::vector<int> raw;  // a_1, a_2, ... in scan order, zeros included
    TypeCPartition orbit;
    bool reordered = false;  // sorting changed the emitted order
};

inline SpringerTrace springer_trace(const Bipartition& rho, int length)
{
    SpringerTrace t;
    t.nu = nu_sequence(rho, length);
    const auto& nu = t.nu.values;
    const std::size_t len = nu.size();
    t.raw.assign(len, 0);
    std::size_t i = 0;
    while (i < len) {
        const int cur = nu[i];
        const int next = i + 1 < len ? nu[i + 1] : 0;
        if (i + 1 < len && cur == next - 1) {
            t.raw[i] = 2 * cur + 1;
            t.raw[i + 1] = 2 * cur + 1;
            i += 2;
        } else if (i + 1 < len && cur <= next - 2) {
            t.raw[i] = 2 * next - 2;
            t.raw[i + 1] = 2 * cur + 2;
            i += 2;
        } else {
            t.raw[i] = 2 * cur;
            i += 1;
        }
    }

    std::vector<int> nonzero;
    for (int v : t.raw)
        if (v != 0)
            nonzero.push_back(v);
    t.reordered = !std::is_sorted(nonzero.begin(), nonzero.end(), std::greater<>());
    const Partition sorted = Partition::from_unsorted(t.raw);
    if (sorted.size() != 2 * rho.size() || !is_type_c(sorted)) {
        std::string dump = "springer_orbit: rule scan produced an invalid diagram for " + rho.to_string() + "; nu = ("
            + detail::join_ints(nu) + "), a = (" + detail::join_ints(t.raw) + ")";
        throw ConsistencyError(dump);
    }
    t.orbit = TypeCPartition(sorted);
    return t;
}

inline SpringerTrace springer_trace(const Bipartition& rho) { return springer_trace(rho, default_nu_length(rho)); }

inline TypeCPartition springer_orbit(const Bipartition& rho) { return springer_trace(rho).orbit; }

/// All bipartitions of d whose Springer orbit is a, in enumeration order.
inline std::vector<Bipartition> orbit_fiber(const TypeCPartition& a, int d)
{
    if (a.size() != 2 * d)
        throw InputError("orbit_fiber: orbit " + a.to_string() + " is not a partition of " + std::to_string(2 * d));
    std::vector<Bipartition> out;
    for (const auto& rho : enumerate_bipartitions(d))
        if (springer_orbit(rho) == a)
            out.push_back(rho);
    return out;
}

inline std::map<TypeCPartition, std::vector<Bipartition>> springer_image(int d)
{
    std::map<TypeCPartition, std::vector<Bipartition>> out;
    for (const auto& rho : enumerate_bipartitions(d))
        out[springer_orbit(rho)].push_back(rho);
    return out;
}

/// Type-C orbits of 2d hit by the map, and those missed.
struct SpringerCoverage {
    int d = 0;
    std::vector<TypeCPartition> hit;
    std::vector<TypeCPartition> missed;
    int reordered = 0;
};

inline SpringerCoverage springer_coverage(int d)
{
    SpringerCoverage c;
    c.d = d;
    const auto image = springer_image(d);
    for (const auto& a : enumerate_type_c(2 * d))
        (image.contains(a) ? c.hit : c.missed).push_back(a);
    for (const auto& rho : enumerate_bipartitions(d))
        if (springer_trace(rho).reordered)
            ++c.reordered;
    return c;
}

} // namespace htop

#endif // SPRINGER_HTOP_SPRINGER_MAP_HPP
