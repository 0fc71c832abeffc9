#ifndef SPRINGER_HTOP_TENSOR_REP_HPP
#define SPRINGER_HTOP_TENSOR_REP_HPP

// The tensor space E^{⊗d}, E = C^N with N = 2n+1, as a bimodule for the
// hyperoctahedral group W_d and for gl_{n+1} ⊕ gl_n ≅ sl_N^θ.
//
// Two realisations of the W_d action are provided:
//
//   swap  the natural basis f_1..f_N; a sign flip in slot k sends
//         f_i -> f_{N+1-i} there. Monomial tensors of a fixed grading
//         span a permutation module C[Θ_d] ≅ C[W_d / W_{\mathbf d}].
//   sign  the basis u_1^+..u_n^+, f_{n+1}, u_1^-..u_n^-, with
//         u_i^± = f_i ± f_{N+1-i}. The first n+1 vectors form the gl_{n+1}
//         block, the last n the gl_n block, and a sign flip in slot k
//         multiplies by -1 exactly when slot k holds a gl_n vector.
//
// change_of_basis() conjugates one into the other.
//
// Labelling. A Schur–Weyl label rho = (lambda, mu) means lambda is read on
// the gl_{n+1} block and mu on the gl_n block, so that
//     E^{⊗d} = ⊕_rho Z_rho ⊗ V_lambda(gl_{n+1}) ⊗ V_mu(gl_n).
// The twisted side of Z_rho is mu, so its character is the character-table
// entry (mu, lambda); see schur_weyl_character_label().

#include <springer_htop/errors.hpp>
#include <springer_htop/exact_matrix.hpp>
#include <springer_htop/hyperoctahedral.hpp>
#include <springer_htop/partitions.hpp>

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace htop {

inline constexpr std::size_t kDefaultMaxCells = 20000;

struct TensorSpace {
    int n = 0;
    int d = 0;
    int big_n = 1;
    std::size_t dim = 1;
};

/// Validates n, d and the cost ceiling N^d <= max_cells.
inline TensorSpace make_tensor_space(int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    if (n < 0 || d < 0)
        throw InputError("tensor space: n and d must be nonnegative");
    TensorSpace s{n, d, 2 * n + 1, 1};
    for (int k = 0; k < d; ++k) {
        s.dim *= static_cast<std::size_t>(s.big_n);
        if (s.dim > max_cells)
            throw BoundError("N^d = " + std::to_string(s.big_n) + "^" + std::to_string(d) + " exceeds the cell ceiling "
                             + std::to_string(max_cells));
    }
    return s;
}

/// (i_1, ..., i_d), each in 1..N.
struct TensorBasisIndex {
    std::vector<int> slots;

    std::string to_string() const { return "(" + detail::join_ints(slots) + ")"; }
    friend auto operator<=>(const TensorBasisIndex&, const TensorBasisIndex&) = default;
    friend bool operator==(const TensorBasisIndex&, const TensorBasisIndex&) = default;
};

/// Slot 1 is the most significant digit.
inline std::size_t to_linear(const TensorBasisIndex& idx, int big_n)
{
    std::size_t k = 0;
    for (int i : idx.slots) {
        if (i < 1 || i > big_n)
            throw InputError("tensor index " + idx.to_string() + " out of range 1.." + std::to_string(big_n));
        k = k * static_cast<std::size_t>(big_n) + static_cast<std::size_t>(i - 1);
    }
    return k;
}

inline TensorBasisIndex from_linear(std::size_t k, int big_n, int d)
{
    TensorBasisIndex idx{std::vector<int>(static_cast<std::size_t>(d))};
    for (int s = d - 1; s >= 0; --s) {
        idx.slots[static_cast<std::size_t>(s)] = static_cast<int>(k % static_cast<std::size_t>(big_n)) + 1;
        k /= static_cast<std::size_t>(big_n);
    }
    return idx;
}

/// d_i = #{k : i_k = i} + #{k : i_k = N+1-i}; the middle index counts twice.
inline SymComposition grading(const TensorBasisIndex& idx, int n)
{
    const int big_n = 2 * n + 1;
    std::vector<int> entries(static_cast<std::size_t>(big_n), 0);
    for (int i : idx.slots) {
        if (i < 1 || i > big_n)
            throw InputError("grading: index " + idx.to_string() + " out of range");
        ++entries[static_cast<std::size_t>(i - 1)];
        ++entries[static_cast<std::size_t>(big_n - i)];
    }
    return SymComposition(std::move(entries));
}

/// N x D matrix over {0,1}: column sums 1, a_{ij} = a_{N+1-i, D+1-j}.
class ThetaMatrix {
public:
    ThetaMatrix(int big_n, int big_d, std::vector<int> entries) : big_n_(big_n), big_d_(big_d), entries_(std::move(entries))
    {
        if (big_n < 1 || big_n % 2 != 1 || big_d < 0 || big_d % 2 != 0
            || entries_.size() != static_cast<std::size_t>(big_n) * static_cast<std::size_t>(big_d))
            throw InputError("theta matrix: bad shape");
        for (int j = 1; j <= big_d; ++j) {
            int col = 0;
            for (int i = 1; i <= big_n; ++i) {
                const int v = at(i, j);
                if (v != 0 && v != 1)
                    throw InputError("theta matrix: entries must be 0 or 1");
                if (v != at(big_n + 1 - i, big_d + 1 - j))
                    throw InputError("theta matrix: not centro-symmetric");
                col += v;
            }
            if (col != 1)
                throw InputError("theta matrix: every column must sum to 1");
        }
    }

    int big_n() const noexcept { return big_n_; }
    int big_d() const noexcept { return big_d_; }
    /// 1-based a_{ij}.
    int at(int i, int j) const
    {
        return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(big_d_) + static_cast<std::size_t>(j - 1)];
    }

    std::vector<int> row_sums() const
    {
        std::vector<int> sums(static_cast<std::size_t>(big_n_), 0);
        for (int i = 1; i <= big_n_; ++i)
            for (int j = 1; j <= big_d_; ++j)
                sums[static_cast<std::size_t>(i - 1)] += at(i, j);
        return sums;
    }

    friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;

private:
    int big_n_;
    int big_d_;
    std::vector<int> entries_;
};

/// Inverse of theta_chi: column k (k <= d) has its 1 in row i_k, column
/// D+1-k in row N+1-i_k.
inline ThetaMatrix theta_from_index(const TensorBasisIndex& idx, int n)
{
    const int big_n = 2 * n + 1;
    const int d = static_cast<int>(idx.slots.size());
    const int big_d = 2 * d;
    std::vector<int> entries(static_cast<std::size_t>(big_n) * static_cast<std::size_t>(big_d), 0);
    for (int k = 1; k <= d; ++k) {
        const int i = idx.slots[static_cast<std::size_t>(k - 1)];
        if (i < 1 || i > big_n)
            throw InputError("theta_from_index: index out of range");
        entries[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(big_d) + static_cast<std::size_t>(k - 1)] = 1;
        entries[static_cast<std::size_t>(big_n - i) * static_cast<std::size_t>(big_d) + static_cast<std::size_t>(big_d - k)] = 1;
    }
    return ThetaMatrix(big_n, big_d, std::move(entries));
}

/// i_k is the row holding the 1 of column k, for the first d columns.
inline TensorBasisIndex theta_chi(const ThetaMatrix& m)
{
    TensorBasisIndex idx;
    for (int k = 1; k <= m.big_d() / 2; ++k)
        for (int i = 1; i <= m.big_n(); ++i)
            if (m.at(i, k) == 1)
                idx.slots.push_back(i);
    return idx;
}

/// Θ (all of it) or Θ_dcomp, in linear tensor-index order.
inline std::vector<ThetaMatrix> theta_enumerate(int n, int d, const std::optional<SymComposition>& dcomp = std::nullopt,
                                                std::size_t max_cells = kDefaultMaxCells)
{
    const auto space = make_tensor_space(n, d, max_cells);
    if (dcomp && (dcomp->big_n() != space.big_n || dcomp->total() != 2 * d))
        throw InputError("theta_enumerate: component " + dcomp->to_string() + " is not in Q_{" + std::to_string(space.big_n)
                         + "," + std::to_string(2 * d) + "}");
    std::vector<ThetaMatrix> out;
    for (std::size_t k = 0; k < space.dim; ++k) {
        const auto idx = from_linear(k, space.big_n, d);
        if (dcomp && grading(idx, n) != *dcomp)
            continue;
        out.push_back(theta_from_index(idx, n));
    }
    return out;
}

enum class ActionConvention { swap, sign };

inline ActionConvention parse_convention(std::string_view name)
{
    if (name == "swap")
        return ActionConvention::swap;
    if (name == "sign")
        return ActionConvention::sign;
    throw InputError("unknown action convention '" + std::string(name) + "' (expected swap or sign)");
}

inline std::string to_string(ActionConvention c) { return c == ActionConvention::swap ? "swap" : "sign"; }

/// Image of a basis tensor under w: slot k moves to slot w.image(k), and a
/// sign at k acts on that factor. Returns (target linear index, coefficient).
inline std::pair<std::size_t, int> act_on_basis(const SignedPermutation& w, const TensorBasisIndex& idx, int n,
                                                ActionConvention conv)
{
    const int big_n = 2 * n + 1;
    const int d = w.degree();
    if (static_cast<int>(idx.slots.size()) != d)
        throw InputError("act_on_basis: degree mismatch");
    TensorBasisIndex out{std::vector<int>(static_cast<std::size_t>(d))};
    int coeff = 1;
    for (int k = 0; k < d; ++k) {
        int i = idx.slots[static_cast<std::size_t>(k)];
        if (w.sign(k) == -1) {
            if (conv == ActionConvention::swap)
                i = big_n + 1 - i;
            else if (i > n + 1)
                coeff = -coeff;
        }
        out.slots[static_cast<std::size_t>(w.image(k))] = i;
    }
    return {to_linear(out, big_n), coeff};
}

inline ExactMatrix w_action_matrix(const SignedPermutation& w, int n, int d, ActionConvention conv,
                                   std::size_t max_cells = kDefaultMaxCells)
{
    const auto space = make_tensor_space(n, d, max_cells);
    if (w.degree() != d)
        throw InputError("w_action_matrix: element of W_" + std::to_string(w.degree()) + " acting on degree " + std::to_string(d));
    ExactMatrix m(space.dim, space.dim);
    for (std::size_t k = 0; k < space.dim; ++k) {
        const auto [target, coeff] = act_on_basis(w, from_linear(k, space.big_n, d), n, conv);
        m(target, k) = coeff;
    }
    return m;
}

/// Single-factor change of basis: columns u_1^+..u_n^+, f_{n+1}, u_1^-..u_n^-.
inline ExactMatrix single_factor_change_of_basis(int n)
{
    const auto big_n = static_cast<std::size_t>(2 * n + 1);
    ExactMatrix c(big_n, big_n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const std::size_t mirror = big_n - 1 - i;
        c(i, i) = 1;
        c(mirror, i) = 1;
        c(i, static_cast<std::size_t>(n) + 1 + i) = 1;
        c(mirror, static_cast<std::size_t>(n) + 1 + i) = -1;
    }
    c(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) = 1;
    return c;
}

inline ExactMatrix tensor_power(const ExactMatrix& single, int d)
{
    ExactMatrix out = ExactMatrix::identity(1);
    for (int k = 0; k < d; ++k)
        out = kronecker(out, single);
    return out;
}

/// C with C^{-1} · swap(w) · C = sign(w); checked on every generator.
inline ExactMatrix change_of_basis(int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    make_tensor_space(n, d, max_cells);
    const ExactMatrix c = tensor_power(single_factor_change_of_basis(n), d);
    if (d == 0)
        return c;
    const ExactMatrix c_inv = c.inverse();
    for (const auto& g : generators(d))
        if (c_inv * w_action_matrix(g, n, d, ActionConvention::swap, max_cells) * c
            != w_action_matrix(g, n, d, ActionConvention::sign, max_cells))
            throw ConsistencyError("change_of_basis: conjugation identity fails at n=" + std::to_string(n)
                                   + ", d=" + std::to_string(d));
    return c;
}

/// Sum over tensor slots of 1 ⊗ ... ⊗ X ⊗ ... ⊗ 1 for an N x N matrix X.
inline ExactMatrix leibniz_extension(const ExactMatrix& x, int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    const auto space = make_tensor_space(n, d, max_cells);
    if (x.rows() != static_cast<std::size_t>(space.big_n) || x.cols() != static_cast<std::size_t>(space.big_n))
        throw InputError("leibniz_extension: single-factor matrix must be N x N");
    ExactMatrix out(space.dim, space.dim);
    for (std::size_t col = 0; col < space.dim; ++col) {
        const auto idx = from_linear(col, space.big_n, d);
        for (int k = 0; k < d; ++k) {
            const auto src = static_cast<std::size_t>(idx.slots[static_cast<std::size_t>(k)] - 1);
            for (std::size_t a = 0; a < x.rows(); ++a) {
                if (sgn(x(a, src)) == 0)
                    continue;
                auto target = idx;
                target.slots[static_cast<std::size_t>(k)] = static_cast<int>(a) + 1;
                out(to_linear(target, space.big_n), col) += x(a, src);
            }
        }
    }
    return out;
}

enum class GlBlock { upper = 1, lower = 2 };  // gl_{n+1}, gl_n

/// Matrix unit E_{row,col} of the chosen block (1-based inside the block),
/// acting on E^{⊗d} in the sign-convention basis.
inline ExactMatrix g_action_matrix(GlBlock block, int row, int col, int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    const int size = block == GlBlock::upper ? n + 1 : n;
    if (row < 1 || row > size || col < 1 || col > size)
        throw InputError("g_action_matrix: index out of range for gl_" + std::to_string(size));
    const int offset = block == GlBlock::upper ? 0 : n + 1;
    const auto big_n = static_cast<std::size_t>(2 * n + 1);
    ExactMatrix unit(big_n, big_n);
    unit(static_cast<std::size_t>(offset + row - 1), static_cast<std::size_t>(offset + col - 1)) = 1;
    return leibniz_extension(unit, n, d, max_cells);
}

enum class IthetaKind { E, F, H };

/// Single-factor sl_N^θ generator (i = 1..2n):
///   E_i = e_i + f_{N-i},  F_i = f_i + e_{N-i},  H_i = h_i - h_{N-i}.
inline ExactMatrix itheta_single(IthetaKind kind, int i, int n)
{
    const int big_n = 2 * n + 1;
    if (n < 1)
        throw InputError("itheta generators need n >= 1");
    if (i < 1 || i > 2 * n)
        throw InputError("itheta generator index must lie in 1.." + std::to_string(2 * n));
    ExactMatrix m(static_cast<std::size_t>(big_n), static_cast<std::size_t>(big_n));
    auto unit = [&](int r, int c, int v) { m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) += v; };
    const int j = big_n - i;
    switch (kind) {
    case IthetaKind::E:
        unit(i, i + 1, 1);
        unit(j + 1, j, 1);
        break;
    case IthetaKind::F:
        unit(i + 1, i, 1);
        unit(j, j + 1, 1);
        break;
    case IthetaKind::H:
        unit(i, i, 1);
        unit(i + 1, i + 1, -1);
        unit(j, j, -1);
        unit(j + 1, j + 1, 1);
        break;
    }
    return m;
}

inline ExactMatrix itheta_generator(IthetaKind kind, int i, int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    return leibniz_extension(itheta_single(kind, i, n), n, d, max_cells);
}

/// E_1..E_n, F_1..F_n, H_1..H_n. Indices n+1..2n add nothing new:
/// E_{N-i} = F_i and H_{N-i} = -H_i.
inline std::vector<ExactMatrix> itheta_generator_matrices(int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    if (n < 1)
        throw InputError("itheta generators need n >= 1");
    std::vector<ExactMatrix> out;
    for (auto kind : {IthetaKind::E, IthetaKind::F, IthetaKind::H})
        for (int i = 1; i <= n; ++i)
            out.push_back(itheta_generator(kind, i, n, d, max_cells));
    return out;
}

/// Character-table label of the Schur–Weyl module Z_rho.
inline Bipartition schur_weyl_character_label(const Bipartition& rho) { return {rho.second, rho.first}; }

namespace detail {

/// chi(w^{-1}) for every group element, for the Schur–Weyl label rho.
inline std::vector<Count> projector_weights(const Bipartition& rho, const std::vector<SignedPermutation>& elements)
{
    const auto label = schur_weyl_character_label(rho);
    std::map<ConjClassLabel, Count> by_class;
    std::vector<Count> weights;
    weights.reserve(elements.size());
    for (const auto& w : elements) {
        const auto cls = cycle_type(w.inverse());
        auto it = by_class.find(cls);
        if (it == by_class.end())
            it = by_class.emplace(cls, character(label, cls)).first;
        weights.push_back(it->second);
    }
    return weights;
}

/// (dim rho / |W|) Σ_w chi(w^{-1}) action(w), restricted to the given basis
/// indices. The span of `basis` must be W-stable.
inline ExactMatrix projector_on(const Bipartition& rho, const TensorSpace& space, ActionConvention conv,
                                const std::vector<std::size_t>& basis)
{
    const auto elements = all_elements(space.d);
    const auto weights = projector_weights(rho, elements);
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < basis.size(); ++k)
        local[basis[k]] = k;
    ExactMatrix p(basis.size(), basis.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
        if (weights[e] == 0)
            continue;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const auto [target, coeff] = act_on_basis(elements[e], from_linear(basis[k], space.big_n, space.d), space.n, conv);
            const auto it = local.find(target);
            if (it == local.end())
                throw ConsistencyError("projector_on: basis subset is not W-stable");
            p(it->second, k) += coeff * weights[e];
        }
    }
    mpq_class scale(static_cast<long>(irr_dim(rho)), static_cast<long>(detail::to_count(group_order(space.d))));
    scale.canonicalize();
    p *= scale;
    return p;
}

inline Count exact_ratio(std::size_t rank, Count dim, const std::string& what)
{
    if (static_cast<Count>(rank) % dim != 0)
        throw ConsistencyError(what + ": rank " + std::to_string(rank) + " is not a multiple of dim " + std::to_string(dim));
    return static_cast<Count>(rank) / dim;
}

} // namespace detail

/// Isotypic projector onto the Z_rho-component (rho a Schur–Weyl label).
inline ExactMatrix isotypic_projector(const Bipartition& rho, int n, int d, ActionConvention conv,
                                      std::size_t max_cells = kDefaultMaxCells)
{
    const auto space = make_tensor_space(n, d, max_cells);
    if (rho.size() != d)
        throw InputError("isotypic_projector: " + rho.to_string() + " is not a bipartition of " + std::to_string(d));
    std::vector<std::size_t> all(space.dim);
    std::iota(all.begin(), all.end(), std::size_t{0});
    auto p = detail::projector_on(rho, space, conv, all);
    if (p * p != p)
        throw ConsistencyError("isotypic_projector: not idempotent for " + rho.to_string());
    return p;
}

/// Multiplicity of Z_rho in E^{⊗d}, from projector ranks.
inline std::map<Bipartition, Count> schur_weyl_decompose(int n, int d, ActionConvention conv = ActionConvention::swap,
                                                         std::size_t max_cells = kDefaultMaxCells)
{
    std::map<Bipartition, Count> out;
    for (const auto& rho : enumerate_bipartitions(d)) {
        const auto rank = isotypic_projector(rho, n, d, conv, max_cells).rank();
        out[rho] = detail::exact_ratio(rank, irr_dim(rho), "schur_weyl_decompose " + rho.to_string());
    }
    return out;
}

/// Closed form of the same multiplicity.
inline Count schur_weyl_multiplicity_formula(const Bipartition& rho, int n)
{
    return gl_dim(rho.first, n + 1) * gl_dim(rho.second, n);
}

struct GradedDecomposition {
    std::map<SymComposition, Count> per_weight;
    Count total = 0;
};

/// Basis indices of E^{⊗d} with the given grading, in linear order.
inline std::vector<std::size_t> graded_basis(const TensorSpace& space, const SymComposition& dcomp)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < space.dim; ++k)
        if (grading(from_linear(k, space.big_n, space.d), space.n) == dcomp)
            out.push_back(k);
    return out;
}

/// Multiplicity of Z_rho inside each graded piece C[Θ_dcomp] of the swap
/// realisation. The swap action preserves the grading, so the projector is
/// block diagonal and each block is built on its own.
inline GradedDecomposition graded_multiplicity(const Bipartition& rho, int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    const auto space = make_tensor_space(n, d, max_cells);
    if (rho.size() != d)
        throw InputError("graded_multiplicity: " + rho.to_string() + " is not a bipartition of " + std::to_string(d));
    GradedDecomposition g;
    for (const auto& dcomp : enumerate_q(n, 2 * d)) {
        const auto basis = graded_basis(space, dcomp);
        const auto block = detail::projector_on(rho, space, ActionConvention::swap, basis);
        const Count mult = detail::exact_ratio(block.rank(), irr_dim(rho), "graded_multiplicity " + rho.to_string() + " at " + dcomp.to_string());
        g.per_weight[dcomp] = mult;
        g.total += mult;
    }
    return g;
}

/// Number of elements of Θ_dcomp fixed by w (swap realisation, via chi).
inline Count theta_fixed_points(const SignedPermutation& w, int n, const SymComposition& dcomp,
                                std::size_t max_cells = kDefaultMaxCells)
{
    const int d = w.degree();
    const auto space = make_tensor_space(n, d, max_cells);
    Count fixed = 0;
    for (const auto& m : theta_enumerate(n, d, dcomp, max_cells)) {
        const auto idx = theta_chi(m);
        const auto [target, coeff] = act_on_basis(w, idx, n, ActionConvention::swap);
        if (coeff != 1)
            throw ConsistencyError("swap action is not a permutation action");
        if (theta_from_index(from_linear(target, space.big_n, d), n) == m)
            ++fixed;
    }
    return fixed;
}

} // namespace htop

#endif // SPRINGER_HTOP_TENSOR_REP_HPP
