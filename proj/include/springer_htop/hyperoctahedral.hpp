#ifndef SPRINGER_HTOP_HYPEROCTAHEDRAL_HPP
#define SPRINGER_HTOP_HYPEROCTAHEDRAL_HPP

// The hyperoctahedral group W_d = S_d ⋉ (Z/2)^d as signed permutations,
// its conjugacy classes and its integer character table.
//
// Irreducible characters are labelled by bipartitions rho = (first, second):
//
//   chi_rho = Ind_{W_a x W_b}^{W_d} ( (chi^first ∘ pi) · delta  ⊠  chi^second ∘ pi )
//
// with a = |first|, b = |second|, pi the underlying permutation and
// delta(w) = (-1)^{#sign flips}. With this placement of the twist the four
// linear characters of W_2 are
//   trivial  = (-|2)     total sign = (1,1|-)
//   s_1 -> -1, s_2 -> 1  = (2|-)      s_1 -> 1, s_2 -> -1 = (-|1,1)

#include <springer_htop/errors.hpp>
#include <springer_htop/partitions.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace htop {

inline constexpr int kDefaultMaxCharacterDegree = 6;

/// w(k) = sign(k) * perm(k) on the signed letters ±1..±d (stored 0-based).
class SignedPermutation {
public:
    SignedPermutation() = default;

    SignedPermutation(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs))
    {
        if (perm_.size() != signs_.size())
            throw InputError("signed permutation: perm and signs differ in length");
        std::vector<char> seen(perm_.size(), 0);
        for (std::size_t k = 0; k < perm_.size(); ++k) {
            const int p = perm_[k];
            if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[static_cast<std::size_t>(p)])
                throw InputError("signed permutation: not a bijection");
            seen[static_cast<std::size_t>(p)] = 1;
            if (signs_[k] != 1 && signs_[k] != -1)
                throw InputError("signed permutation: signs must be +1 or -1");
        }
    }

    static SignedPermutation identity(int d)
    {
        std::vector<int> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        return {std::move(perm), std::vector<int>(static_cast<std::size_t>(d), 1)};
    }

    int degree() const noexcept { return static_cast<int>(perm_.size()); }
    /// Target position of position k (0-based).
    int image(int k) const { return perm_[static_cast<std::size_t>(k)]; }
    /// Sign attached to position k.
    int sign(int k) const { return signs_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& perm() const noexcept { return perm_; }
    const std::vector<int>& signs() const noexcept { return signs_; }

    bool is_identity() const
    {
        for (int k = 0; k < degree(); ++k)
            if (image(k) != k || sign(k) != 1)
                return false;
        return true;
    }

    SignedPermutation inverse() const
    {
        std::vector<int> perm(perm_.size());
        std::vector<int> signs(perm_.size());
        for (std::size_t k = 0; k < perm_.size(); ++k) {
            perm[static_cast<std::size_t>(perm_[k])] = static_cast<int>(k);
            signs[static_cast<std::size_t>(perm_[k])] = signs_[k];
        }
        return {std::move(perm), std::move(signs)};
    }

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Composition a·b = "apply b, then a".
inline SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b)
{
    if (a.degree() != b.degree())
        throw InputError("multiply: signed permutations of different degree");
    const int d = a.degree();
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::vector<int> signs(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const int mid = b.image(k);
        perm[static_cast<std::size_t>(k)] = a.image(mid);
        signs[static_cast<std::size_t>(k)] = b.sign(k) * a.sign(mid);
    }
    return {std::move(perm), std::move(signs)};
}

inline SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) { return multiply(a, b); }

inline SignedPermutation power(const SignedPermutation& w, int e)
{
    auto out = SignedPermutation::identity(w.degree());
    for (int i = 0; i < e; ++i)
        out = out * w;
    return out;
}

/// s_1 flips the sign of position 1; s_k (k >= 2) swaps positions k-1, k.
inline std::vector<SignedPermutation> generators(int d)
{
    if (d < 1)
        throw InputError("generators: d must be at least 1");
    std::vector<SignedPermutation> gens;
    auto flip = SignedPermutation::identity(d);
    {
        auto signs = flip.signs();
        signs[0] = -1;
        gens.emplace_back(flip.perm(), std::move(signs));
    }
    for (int k = 2; k <= d; ++k) {
        auto perm = flip.perm();
        std::swap(perm[static_cast<std::size_t>(k - 2)], perm[static_cast<std::size_t>(k - 1)]);
        gens.emplace_back(std::move(perm), flip.signs());
    }
    return gens;
}

inline mpz_class group_order(int d)
{
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    return fact << static_cast<mp_bitcnt_t>(d);
}

/// Every element of W_d: permutations in lexicographic order, and for each
/// the 2^d sign patterns.
inline std::vector<SignedPermutation> all_elements(int d, int max_degree = kDefaultMaxCharacterDegree)
{
    if (d < 0)
        throw InputError("all_elements: d must be nonnegative");
    if (d > max_degree)
        throw BoundError("W_" + std::to_string(d) + " exceeds the element-enumeration bound " + std::to_string(max_degree));
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<int> signs(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k)
                signs[static_cast<std::size_t>(k)] = (mask >> k) & 1u ? -1 : 1;
            out.emplace_back(perm, std::move(signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Signed cycle type: cycles whose sign product is +1 go to pos_cycles.
struct ConjClassLabel {
    Partition pos_cycles;
    Partition neg_cycles;

    int degree() const noexcept { return pos_cycles.size() + neg_cycles.size(); }
    std::string to_string() const { return pos_cycles.to_string() + "|" + neg_cycles.to_string(); }

    friend auto operator<=>(const ConjClassLabel&, const ConjClassLabel&) = default;
    friend bool operator==(const ConjClassLabel&, const ConjClassLabel&) = default;
};

using ClassFunction = std::map<ConjClassLabel, Count>;

inline ConjClassLabel cycle_type(const SignedPermutation& w)
{
    const int d = w.degree();
    std::vector<char> seen(static_cast<std::size_t>(d), 0);
    std::vector<int> pos;
    std::vector<int> neg;
    for (int start = 0; start < d; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        int len = 0;
        int sign = 1;
        for (int k = start; !seen[static_cast<std::size_t>(k)]; k = w.image(k)) {
            seen[static_cast<std::size_t>(k)] = 1;
            sign *= w.sign(k);
            ++len;
        }
        (sign == 1 ? pos : neg).push_back(len);
    }
    return {Partition::from_unsorted(std::move(pos)), Partition::from_unsorted(std::move(neg))};
}

/// All class labels of W_d in lexicographic order on (pos, neg).
inline std::vector<ConjClassLabel> class_labels(int d)
{
    std::vector<ConjClassLabel> out;
    for (const auto& rho : enumerate_bipartitions(d))
        out.push_back({rho.first, rho.second});
    std::sort(out.begin(), out.end());
    return out;
}

/// Consecutive cycles, positive ones first; a negative cycle carries its
/// single sign flip on its first position.
inline SignedPermutation class_representative(const ConjClassLabel& cls)
{
    const int d = cls.degree();
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::vector<int> signs(static_cast<std::size_t>(d), 1);
    int start = 0;
    auto place = [&](int len, int sign) {
        for (int k = 0; k < len; ++k)
            perm[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
        signs[static_cast<std::size_t>(start)] = sign;
        start += len;
    };
    for (int len : cls.pos_cycles.parts())
        place(len, 1);
    for (int len : cls.neg_cycles.parts())
        place(len, -1);
    return {std::move(perm), std::move(signs)};
}

/// |W_d| / |centralizer|, with centralizer order prod_i (2i)^{m_i} m_i!
/// taken over both cycle partitions.
inline Count class_size(const ConjClassLabel& cls)
{
    mpz_class centralizer = 1;
    for (const Partition* p : {&cls.pos_cycles, &cls.neg_cycles})
        for (int len : std::set<int>(p->parts().begin(), p->parts().end())) {
            const int m = p->multiplicity(len);
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
            mpz_class base = 2 * len;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
            centralizer *= pw * fact;
        }
    return detail::to_count(group_order(cls.degree()) / centralizer);
}

/// Irreducible character of S_n at cycle type `cycles` (Murnaghan–Nakayama,
/// rim hooks removed on the beta-set of lambda).
inline Count sn_character(const Partition& lambda, std::vector<int> cycles)
{
    if (lambda.size() != std::accumulate(cycles.begin(), cycles.end(), 0))
        throw InputError("sn_character: size mismatch");
    if (cycles.empty())
        return 1;
    const int r = cycles.back();
    cycles.pop_back();
    const int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
    Count total = 0;
    for (int i = 0; i < l; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int x : beta)
            if (x > target && x < b)
                ++between;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(static_cast<std::size_t>(l));
        for (int k = 0; k < l; ++k)
            parts[static_cast<std::size_t>(k)] = moved[static_cast<std::size_t>(k)] - (l - 1 - k);
        const Count sub = sn_character(Partition(std::move(parts)), cycles);
        total += between % 2 == 0 ? sub : -sub;
    }
    return total;
}

/// binomial(d, |first|) · f^first · f^second.
inline Count irr_dim(const Bipartition& rho)
{
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(rho.size()), static_cast<unsigned long>(rho.first.size()));
    return detail::to_count(binom * num_standard_tableaux(rho.first) * num_standard_tableaux(rho.second));
}

/// chi_rho evaluated on an arbitrary element: the induced-character sum
/// over the |first|-subsets S of positions that w stabilises.
inline Count character_of(const Bipartition& rho, const SignedPermutation& w)
{
    const int d = w.degree();
    if (rho.size() != d)
        throw InputError("character: bipartition " + rho.to_string() + " does not have size " + std::to_string(d));
    const int a = rho.first.size();

    // Cycles of the underlying permutation with their sign products; a
    // stable subset is a union of whole cycles.
    std::vector<std::pair<int, int>> cycles;
    std::vector<char> seen(static_cast<std::size_t>(d), 0);
    for (int start = 0; start < d; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        int len = 0;
        int sign = 1;
        for (int k = start; !seen[static_cast<std::size_t>(k)]; k = w.image(k)) {
            seen[static_cast<std::size_t>(k)] = 1;
            sign *= w.sign(k);
            ++len;
        }
        cycles.emplace_back(len, sign);
    }

    Count total = 0;
    const std::size_t c = cycles.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        std::vector<int> inside;
        std::vector<int> outside;
        int twist = 1;
        for (std::size_t k = 0; k < c; ++k) {
            if ((mask >> k) & 1u) {
                inside.push_back(cycles[k].first);
                twist *= cycles[k].second;
            } else {
                outside.push_back(cycles[k].first);
            }
        }
        if (std::accumulate(inside.begin(), inside.end(), 0) != a)
            continue;
        // delta on the first block is the product of all signs inside it,
        // which equals the product of the cycle sign products.
        total += twist * sn_character(rho.first, inside) * sn_character(rho.second, outside);
    }
    return total;
}

inline Count character(const Bipartition& rho, const ConjClassLabel& cls)
{
    if (rho.size() != cls.degree())
        throw InputError("character: bipartition " + rho.to_string() + " and class " + cls.to_string() + " differ in size");
    return character_of(rho, class_representative(cls));
}

struct CharacterTable {
    int d = 0;
    std::vector<Bipartition> rows;
    std::vector<ConjClassLabel> cols;
    std::vector<std::vector<Count>> values;
    std::vector<Count> class_sizes;
    Count order = 1;

    std::size_t row_index(const Bipartition& rho) const
    {
        const auto it = std::find(rows.begin(), rows.end(), rho);
        if (it == rows.end())
            throw InputError("character table has no row " + rho.to_string());
        return static_cast<std::size_t>(it - rows.begin());
    }

    std::size_t col_index(const ConjClassLabel& cls) const
    {
        const auto it = std::lower_bound(cols.begin(), cols.end(), cls);
        if (it == cols.end() || *it != cls)
            throw InputError("character table has no class " + cls.to_string());
        return static_cast<std::size_t>(it - cols.begin());
    }

    Count value(const Bipartition& rho, const ConjClassLabel& cls) const { return values[row_index(rho)][col_index(cls)]; }

    ClassFunction row(const Bipartition& rho) const
    {
        ClassFunction out;
        const auto r = row_index(rho);
        for (std::size_t c = 0; c < cols.size(); ++c)
            out[cols[c]] = values[r][c];
        return out;
    }
};

/// Rows in enumerate_bipartitions order, columns in class_labels order.
inline CharacterTable character_table(int d, int max_degree = kDefaultMaxCharacterDegree)
{
    if (d < 0)
        throw InputError("character_table: d must be nonnegative");
    if (d > max_degree)
        throw BoundError("character table of W_" + std::to_string(d) + " exceeds the bound " + std::to_string(max_degree));
    CharacterTable t;
    t.d = d;
    t.rows = enumerate_bipartitions(d);
    t.cols = class_labels(d);
    t.order = detail::to_count(group_order(d));
    for (const auto& cls : t.cols)
        t.class_sizes.push_back(class_size(cls));
    for (const auto& rho : t.rows) {
        std::vector<Count> row;
        for (const auto& cls : t.cols)
            row.push_back(character(rho, cls));
        t.values.push_back(std::move(row));
    }
    return t;
}

/// Membership in the Young-type subgroup
///   W_d = S_{d_1} × ... × S_{d_n} × (S_m ⋉ (Z/2)^m),  m = d_{n+1}/2,
/// embedded on consecutive position blocks of sizes d_1, ..., d_n, m.
inline bool in_flag_stabilizer(const SymComposition& dcomp, const SignedPermutation& w)
{
    int start = 0;
    for (int i = 1; i <= dcomp.n_param() + 1; ++i) {
        const bool middle = i == dcomp.n_param() + 1;
        const int len = middle ? dcomp.middle() / 2 : dcomp.at(i);
        for (int k = start; k < start + len; ++k) {
            if (w.image(k) < start || w.image(k) >= start + len)
                return false;
            if (!middle && w.sign(k) != 1)
                return false;
        }
        start += len;
    }
    return true;
}

inline Count flag_stabilizer_order(const SymComposition& dcomp)
{
    mpz_class order = 1;
    for (int i = 1; i <= dcomp.n_param(); ++i) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(dcomp.at(i)));
        order *= f;
    }
    const int m = dcomp.middle() / 2;
    order *= group_order(m);
    return detail::to_count(order);
}

/// Permutation character of W_d on the cosets of the flag stabilizer:
/// the number of cosets xH fixed by a class representative, counted as
/// #{x : x^{-1} g x ∈ H} / |H| over the whole group.
inline ClassFunction perm_character_on_cosets(const SymComposition& dcomp, int max_degree = kDefaultMaxCharacterDegree)
{
    if (dcomp.total() % 2 != 0)
        throw InputError("perm_character_on_cosets: total must be even");
    const int d = dcomp.total() / 2;
    const auto elements = all_elements(d, max_degree);
    const Count h = flag_stabilizer_order(dcomp);
    ClassFunction out;
    for (const auto& cls : class_labels(d)) {
        const auto g = class_representative(cls);
        Count hits = 0;
        for (const auto& x : elements)
            if (in_flag_stabilizer(dcomp, x.inverse() * g * x))
                ++hits;
        if (hits % h != 0)
            throw ConsistencyError("coset fixed-point count is not an integer for " + dcomp.to_string());
        out[cls] = hits / h;
    }
    return out;
}

/// Multiplicities <values, chi_rho> for every irreducible. Characters of
/// W_d are real, so no conjugation is needed.
inline std::map<Bipartition, Count> decompose_character(const ClassFunction& values, const CharacterTable& table)
{
    std::map<Bipartition, Count> out;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        mpz_class acc = 0;
        for (std::size_t c = 0; c < table.cols.size(); ++c) {
            const auto it = values.find(table.cols[c]);
            if (it == values.end())
                throw InputError("decompose_character: missing class " + table.cols[c].to_string());
            acc += mpz_class(static_cast<long>(table.class_sizes[c])) * static_cast<long>(it->second)
                * static_cast<long>(table.values[r][c]);
        }
        if (acc % table.order != 0)
            throw ConsistencyError("non-integral multiplicity for " + table.rows[r].to_string() + ": not a character");
        const Count mult = detail::to_count(acc / table.order);
        if (mult < 0)
            throw ConsistencyError("negative multiplicity for " + table.rows[r].to_string() + ": not a character");
        out[table.rows[r]] = mult;
    }
    for (std::size_t c = 0; c < table.cols.size(); ++c) {
        Count rebuilt = 0;
        for (std::size_t r = 0; r < table.rows.size(); ++r)
            rebuilt += out[table.rows[r]] * table.values[r][c];
        if (rebuilt != values.at(table.cols[c]))
            throw ConsistencyError("decompose_character: reconstruction mismatch at class " + table.cols[c].to_string());
    }
    return out;
}

} // namespace htop

#endif // SPRINGER_HTOP_HYPEROCTAHEDRAL_HPP
