#ifndef SPRINGER_HTOP_PARTITIONS_HPP
#define SPRINGER_HTOP_PARTITIONS_HPP

// Integer partitions, bipartitions, type-C partitions and the symmetric
// compositions d = (d_1, ..., d_N) with d_i = d_{N+1-i} that index isotropic
// partial flag varieties.
//
// Text formats (shared by the CLI and every golden file):
//   partition     "2,1,1"       empty partition "-" ("0" is accepted on input)
//   bipartition   "2,1|1"       either side may be "-"
//   composition   "1,1,0,1,1"

#include <springer_htop/errors.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace htop {

using Count = std::int64_t;

namespace detail {

inline Count to_count(const mpz_class& z)
{
    if (!z.fits_slong_p())
        throw BoundError("integer result does not fit in 64 bits: " + z.get_str());
    return static_cast<Count>(z.get_si());
}

inline std::string join_ints(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (token.empty() || token.size() > 6
            || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("malformed integer list: '" + std::string(text) + "'");
        out.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

/// A weakly decreasing sequence of positive integers. Zero parts are
/// stripped on construction so equal diagrams compare equal.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw InputError("partition parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw InputError("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into weakly decreasing order and drops zeros.
    static Partition from_unsorted(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    static Partition parse(std::string_view text)
    {
        if (text == "-" || text == "0")
            return {};
        return Partition(detail::parse_int_list(text));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Part k (0-based); zero past the end.
    int operator[](std::size_t k) const noexcept { return k < parts_.size() ? parts_[k] : 0; }

    /// Number of parts equal to v.
    int multiplicity(int v) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    std::string to_string() const { return parts_.empty() ? "-" : detail::join_ints(parts_); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Ordered pair of partitions. Which side carries the sign-flip twist is a
/// property of the consumer (see hyperoctahedral.hpp and tensor_rep.hpp).
struct Bipartition {
    Partition first;
    Partition second;

    int size() const noexcept { return first.size() + second.size(); }

    std::string to_string() const { return first.to_string() + "|" + second.to_string(); }

    static Bipartition parse(std::string_view text)
    {
        const auto bar = text.find('|');
        if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
            throw InputError("bipartition must have the form 'a|b': '" + std::string(text) + "'");
        return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
    }

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Transposed Young diagram.
inline Partition dual(const Partition& p)
{
    std::vector<int> cols(p.empty() ? 0 : p[0], 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c)
            ++cols[c];
    return Partition(std::move(cols));
}

inline Bipartition dual(const Bipartition& rho) { return {dual(rho.first), dual(rho.second)}; }

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of n in lexicographically descending order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw InputError("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

/// All bipartitions of total size d. Ordered by |first| descending, then
/// each side in enumerate_partitions order:
/// d=2 gives (2|-), (1,1|-), (1|1), (-|2), (-|1,1).
inline std::vector<Bipartition> enumerate_bipartitions(int d)
{
    if (d < 0)
        throw InputError("enumerate_bipartitions: d must be nonnegative");
    std::vector<Bipartition> out;
    for (int a = d; a >= 0; --a)
        for (const auto& first : enumerate_partitions(a))
            for (const auto& second : enumerate_partitions(d - a))
                out.push_back({first, second});
    return out;
}

/// Even size, and every odd part occurs with even multiplicity.
inline bool is_type_c(const Partition& p)
{
    if (p.size() % 2 != 0)
        return false;
    for (int v : p.parts())
        if (v % 2 == 1 && p.multiplicity(v) % 2 != 0)
            return false;
    return true;
}

/// A partition of 2d labelling a nilpotent orbit of sp_{2d}.
class TypeCPartition {
public:
    TypeCPartition() = default;

    explicit TypeCPartition(Partition p) : p_(std::move(p))
    {
        if (!is_type_c(p_))
            throw InputError("not a type-C partition: " + p_.to_string());
    }

    static TypeCPartition parse(std::string_view text) { return TypeCPartition(Partition::parse(text)); }

    const Partition& partition() const noexcept { return p_; }
    int size() const noexcept { return p_.size(); }
    std::string to_string() const { return p_.to_string(); }

    friend auto operator<=>(const TypeCPartition&, const TypeCPartition&) = default;
    friend bool operator==(const TypeCPartition&, const TypeCPartition&) = default;

private:
    Partition p_;
};

/// Type-C partitions of two_d in enumerate_partitions order.
inline std::vector<TypeCPartition> enumerate_type_c(int two_d)
{
    if (two_d < 0 || two_d % 2 != 0)
        throw InputError("enumerate_type_c: size must be even and nonnegative");
    std::vector<TypeCPartition> out;
    for (auto& p : enumerate_partitions(two_d))
        if (is_type_c(p))
            out.emplace_back(std::move(p));
    return out;
}

/// d = (d_1, ..., d_N), N = 2n+1, with d_i = d_{N+1-i} and even total D.
class SymComposition {
public:
    SymComposition() = default;

    explicit SymComposition(std::vector<int> entries) : entries_(std::move(entries))
    {
        if (entries_.size() % 2 != 1)
            throw InputError("composition must have odd length N = 2n+1");
        const std::size_t len = entries_.size();
        for (std::size_t i = 0; i < len; ++i) {
            if (entries_[i] < 0)
                throw InputError("composition entries must be nonnegative");
            if (entries_[i] != entries_[len - 1 - i])
                throw InputError("composition must satisfy d_i = d_{N+1-i}: " + detail::join_ints(entries_));
        }
        if (total() % 2 != 0)
            throw InputError("composition total must be even");
    }

    static SymComposition parse(std::string_view text) { return SymComposition(detail::parse_int_list(text)); }

    const std::vector<int>& entries() const noexcept { return entries_; }
    int big_n() const noexcept { return static_cast<int>(entries_.size()); }
    int n_param() const noexcept { return (big_n() - 1) / 2; }
    int total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    /// 1-based access, d_i.
    int at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    int middle() const { return entries_[static_cast<std::size_t>(n_param())]; }

    std::string to_string() const { return detail::join_ints(entries_); }

    friend auto operator<=>(const SymComposition&, const SymComposition&) = default;
    friend bool operator==(const SymComposition&, const SymComposition&) = default;

private:
    std::vector<int> entries_;
};

/// Q_{N,D} with N = 2n+1, in lexicographically descending order of entries.
inline std::vector<SymComposition> enumerate_q(int n_param, int big_d)
{
    if (n_param < 0)
        throw InputError("enumerate_q: n must be nonnegative");
    if (big_d < 0 || big_d % 2 != 0)
        throw InputError("enumerate_q: D must be even and nonnegative");
    // Choose d_1..d_n freely, then the middle entry is forced.
    std::vector<SymComposition> out;
    std::vector<int> half(static_cast<std::size_t>(n_param), 0);
    auto emit = [&](int middle) {
        std::vector<int> entries(half);
        entries.push_back(middle);
        entries.insert(entries.end(), half.rbegin(), half.rend());
        out.emplace_back(std::move(entries));
    };
    auto rec = [&](auto&& self, int pos, int remaining_half) -> void {
        if (pos == n_param) {
            emit(2 * remaining_half);
            return;
        }
        for (int v = remaining_half; v >= 0; --v) {
            half[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining_half - v);
        }
    };
    rec(rec, 0, big_d / 2);
    return out;
}

/// Hook length of each cell, row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& p)
{
    const Partition conj = dual(p);
    std::vector<std::vector<int>> hooks;
    for (int i = 0; i < p.length(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            row.push_back((p[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1);
        hooks.push_back(std::move(row));
    }
    return hooks;
}

/// f^p, via the hook length formula.
inline Count num_standard_tableaux(const Partition& p)
{
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.size()));
    mpz_class den = 1;
    for (const auto& row : hook_lengths(p))
        for (int h : row)
            den *= h;
    return detail::to_count(num / den);
}

/// Dimension of the irreducible gl_m-module with highest weight p
/// (hook-content formula). Zero when p has more than m rows.
inline Count gl_dim(const Partition& p, int m)
{
    if (p.length() > m)
        return 0;
    mpz_class num = 1;
    mpz_class den = 1;
    const auto hooks = hook_lengths(p);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j) {
            num *= m + j - i;
            den *= hooks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    return detail::to_count(num / den);
}

/// Dominance order: every prefix sum of a is at most that of b.
inline bool dominance_leq(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        throw InputError("dominance_leq: partitions of different sizes");
    int sa = 0;
    int sb = 0;
    const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
    for (std::size_t k = 0; k < len; ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb)
            return false;
    }
    return true;
}

/// The dominance-largest type-C partition below p. Repeatedly takes the
/// largest odd part q of odd multiplicity, lowers its last occurrence to
/// q-1 and raises the first later part r < q-1 to r+1.
inline TypeCPartition type_c_collapse(const Partition& p)
{
    if (p.size() % 2 != 0)
        throw InputError("type_c_collapse: size must be even, got " + p.to_string());
    std::vector<int> parts = p.parts();
    for (;;) {
        const Partition cur(parts);
        std::optional<int> bad;
        for (int v : cur.parts())
            if (v % 2 == 1 && cur.multiplicity(v) % 2 != 0 && (!bad || v > *bad))
                bad = v;
        if (!bad)
            return TypeCPartition(cur);
        parts = cur.parts();
        parts.push_back(0);
        const int q = *bad;
        const auto last = static_cast<std::size_t>(std::find(parts.rbegin(), parts.rend(), q).base() - parts.begin() - 1);
        parts[last] = q - 1;
        for (std::size_t k = last + 1; k < parts.size(); ++k)
            if (parts[k] < q - 1) {
                ++parts[k];
                break;
            }
    }
}

} // namespace htop

#endif // SPRINGER_HTOP_PARTITIONS_HPP
