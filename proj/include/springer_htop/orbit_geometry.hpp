#ifndef SPRINGER_HTOP_ORBIT_GEOMETRY_HPP
#define SPRINGER_HTOP_ORBIT_GEOMETRY_HPP

// Dimension bookkeeping for nilpotent orbits of sp_{2d} and the isotropic
// partial flag varieties F_d, and the top Borel–Moore homology tables of the
// partial Springer fibers predicted by
//
//     H_top(pi^{-1}(a)) = ⊕_{rho : A_rho = A} V_{rho-check}.
//
// Degrees: on a component F_d whose image closure contains O_A, the top
// degree is 2c with c = (dim N^d - dim O_A) / 2 the semismall bound on the
// complex fiber dimension.

#include <springer_htop/errors.hpp>
#include <springer_htop/partitions.hpp>
#include <springer_htop/springer_map.hpp>
#include <springer_htop/tensor_rep.hpp>

#include <optional>
#include <string>
#include <vector>

namespace htop {

/// dim sp_{2d} - dim Z(x), dim Z(x) = (Σ (dual a)_i^2 + #odd parts) / 2.
inline int orbit_dim(const TypeCPartition& a)
{
    const int d = a.size() / 2;
    const Partition conj = dual(a.partition());
    int squares = 0;
    for (int c : conj.parts())
        squares += c * c;
    int odd = 0;
    for (int part : a.partition().parts())
        odd += part % 2;
    return d * (2 * d + 1) - (squares + odd) / 2;
}

/// dim Sp_{2d}/P = (dim Sp_{2d} - dim L) / 2 with Levi
/// L = GL_{d_1} × ... × GL_{d_n} × Sp_{d_{n+1}}.
inline int flag_dim(const SymComposition& dcomp)
{
    const int d = dcomp.total() / 2;
    const int m = dcomp.middle() / 2;
    int levi = m * (2 * m + 1);
    for (int i = 1; i <= dcomp.n_param(); ++i)
        levi += dcomp.at(i) * dcomp.at(i);
    return (d * (2 * d + 1) - levi) / 2;
}

/// Dense orbit in the image of T^*F_d: the type-C collapse of the dual of
/// the sorted entries. Checked against orbit_dim = 2 · flag_dim.
inline TypeCPartition richardson(const SymComposition& dcomp)
{
    const auto a = type_c_collapse(dual(Partition::from_unsorted(dcomp.entries())));
    if (orbit_dim(a) != 2 * flag_dim(dcomp))
        throw ConsistencyError("richardson: orbit " + a.to_string() + " has dimension " + std::to_string(orbit_dim(a))
                               + " but 2 * dim F_d = " + std::to_string(2 * flag_dim(dcomp)) + " for d = " + dcomp.to_string());
    return a;
}

struct ComponentGeometry {
    SymComposition dcomp;
    int flag_dim = 0;
    int image_dim = 0;
    TypeCPartition richardson;
};

inline ComponentGeometry component_geometry(const SymComposition& dcomp)
{
    const int f = flag_dim(dcomp);
    return {dcomp, f, 2 * f, richardson(dcomp)};
}

inline bool component_nonempty(const TypeCPartition& a, const SymComposition& dcomp)
{
    if (a.size() != dcomp.total())
        throw InputError("component_nonempty: orbit " + a.to_string() + " and component " + dcomp.to_string()
                         + " live in different sp_{2d}");
    return dominance_leq(a.partition(), richardson(dcomp).partition());
}

/// Real Borel–Moore degree 2c of the top homology on a nonempty component.
inline int top_degree(const TypeCPartition& a, const SymComposition& dcomp)
{
    if (!component_nonempty(a, dcomp))
        throw InputError("top_degree: orbit " + a.to_string() + " does not meet the image of component " + dcomp.to_string());
    const int degree = 2 * flag_dim(dcomp) - orbit_dim(a);
    if (degree < 0 || degree % 2 != 0)
        throw ConsistencyError("top_degree: odd or negative degree for " + a.to_string() + " on " + dcomp.to_string());
    return degree;
}

struct HtopContribution {
    Bipartition rho;       // Springer label, A_rho = orbit
    Bipartition rho_dual;  // Schur–Weyl label of the gl_{n+1} ⊕ gl_n module
    Count dim = 0;
};

struct HtopComponent {
    SymComposition dcomp;
    std::optional<int> degree;  // empty when the orbit misses the component image
    Count htop = 0;
};

struct HtopReport {
    TypeCPartition orbit;
    int n = 0;
    int d = 0;
    std::vector<HtopContribution> contributing;
    std::vector<HtopComponent> components;  // enumerate_q order
    Count total = 0;

    Count per_component(const SymComposition& dcomp) const
    {
        for (const auto& c : components)
            if (c.dcomp == dcomp)
                return c.htop;
        throw InputError("HtopReport: no component " + dcomp.to_string());
    }
};

inline HtopReport htop_report(const TypeCPartition& a, int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    if (a.size() != 2 * d)
        throw InputError("htop_report: orbit " + a.to_string() + " is not a partition of " + std::to_string(2 * d));
    make_tensor_space(n, d, max_cells);

    HtopReport r;
    r.orbit = a;
    r.n = n;
    r.d = d;
    for (const auto& dcomp : enumerate_q(n, 2 * d)) {
        HtopComponent c{dcomp, std::nullopt, 0};
        if (component_nonempty(a, dcomp))
            c.degree = top_degree(a, dcomp);
        r.components.push_back(std::move(c));
    }

    Count formula_total = 0;
    for (const auto& rho : orbit_fiber(a, d)) {
        HtopContribution contrib{rho, dual(rho), schur_weyl_multiplicity_formula(dual(rho), n)};
        formula_total += contrib.dim;
        const auto graded = graded_multiplicity(contrib.rho_dual, n, d, max_cells);
        for (auto& c : r.components)
            c.htop += graded.per_weight.at(c.dcomp);
        r.contributing.push_back(std::move(contrib));
    }
    for (const auto& c : r.components)
        r.total += c.htop;
    if (r.total != formula_total)
        throw ConsistencyError("htop_report: graded total " + std::to_string(r.total) + " disagrees with closed formula "
                               + std::to_string(formula_total) + " for orbit " + a.to_string());
    return r;
}

/// One report per type-C orbit of 2d, in enumerate_type_c order.
inline std::vector<HtopReport> htop_reports(int n, int d, std::size_t max_cells = kDefaultMaxCells)
{
    std::vector<HtopReport> out;
    for (const auto& a : enumerate_type_c(2 * d))
        out.push_back(htop_report(a, n, d, max_cells));
    return out;
}

} // namespace htop

#endif // SPRINGER_HTOP_ORBIT_GEOMETRY_HPP
