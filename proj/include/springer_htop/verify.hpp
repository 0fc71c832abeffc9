#ifndef SPRINGER_HTOP_VERIFY_HPP
#define SPRINGER_HTOP_VERIFY_HPP

// Invariant suites run by `htop verify <suite>`.

#include <springer_htop/errors.hpp>
#include <springer_htop/hyperoctahedral.hpp>
#include <springer_htop/orbit_geometry.hpp>
#include <springer_htop/partitions.hpp>
#include <springer_htop/springer_map.hpp>
#include <springer_htop/tensor_rep.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace htop {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

/// Runs a check body; exceptions become failures carrying their message.
inline CheckResult run_check(const std::string& name, const std::function<bool(std::ostringstream&)>& body)
{
    std::ostringstream detail;
    try {
        const bool ok = body(detail);
        return {name, ok, detail.str()};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

inline std::vector<CheckResult> verify_characters()
{
    std::vector<CheckResult> out;
    for (int d = 1; d <= 4; ++d) {
        const auto t = character_table(d);
        out.push_back(run_check("characters.row_orthogonality.d=" + std::to_string(d), [&](auto& msg) {
            for (std::size_t a = 0; a < t.rows.size(); ++a)
                for (std::size_t b = 0; b < t.rows.size(); ++b) {
                    Count s = 0;
                    for (std::size_t c = 0; c < t.cols.size(); ++c)
                        s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
                    if (s != (a == b ? t.order : 0)) {
                        msg << "<" << t.rows[a].to_string() << "," << t.rows[b].to_string() << "> = " << s;
                        return false;
                    }
                }
            msg << t.rows.size() << " rows, |W| = " << t.order;
            return true;
        }));
        out.push_back(run_check("characters.column_orthogonality.d=" + std::to_string(d), [&](auto& msg) {
            for (std::size_t c1 = 0; c1 < t.cols.size(); ++c1)
                for (std::size_t c2 = 0; c2 < t.cols.size(); ++c2) {
                    Count s = 0;
                    for (std::size_t r = 0; r < t.rows.size(); ++r)
                        s += t.values[r][c1] * t.values[r][c2];
                    const Count expected = c1 == c2 ? t.order / t.class_sizes[c1] : 0;
                    if (s != expected) {
                        msg << "classes " << t.cols[c1].to_string() << ", " << t.cols[c2].to_string() << ": " << s
                            << " != " << expected;
                        return false;
                    }
                }
            msg << t.cols.size() << " classes";
            return true;
        }));
        out.push_back(run_check("characters.dimensions.d=" + std::to_string(d), [&](auto& msg) {
            const auto id = t.col_index({Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), {}});
            Count sum = 0;
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                if (t.values[r][id] != irr_dim(t.rows[r])) {
                    msg << "chi(1) != irr_dim for " << t.rows[r].to_string();
                    return false;
                }
                sum += t.values[r][id] * t.values[r][id];
            }
            msg << "sum dim^2 = " << sum;
            return sum == t.order;
        }));
        out.push_back(run_check("characters.class_equation.d=" + std::to_string(d), [&](auto& msg) {
            Count sum = 0;
            for (auto s : t.class_sizes)
                sum += s;
            msg << "sum of class sizes = " << sum << ", classes = " << t.cols.size();
            return sum == t.order && t.cols.size() == enumerate_bipartitions(d).size();
        }));
    }
    out.push_back(run_check("characters.linear_labels.d=2", [&](auto& msg) {
        const auto gens = generators(2);
        auto values = [&](const char* label) {
            const auto rho = Bipartition::parse(label);
            return std::pair{character_of(rho, gens[0]), character_of(rho, gens[1])};
        };
        const bool ok = values("-|2") == std::pair<Count, Count>{1, 1} && values("1,1|-") == std::pair<Count, Count>{-1, -1}
            && values("-|1,1") == std::pair<Count, Count>{1, -1} && values("2|-") == std::pair<Count, Count>{-1, 1};
        msg << "triv=-|2 Sign=1,1|- Ssign=-|1,1 Lsign=2|-";
        return ok;
    }));
    return out;
}

inline std::vector<CheckResult> verify_springer()
{
    std::vector<CheckResult> out;
    out.push_back(run_check("springer.type_c_output.d<=5", [](auto& msg) {
        int count = 0;
        for (int d = 0; d <= 5; ++d)
            for (const auto& rho : enumerate_bipartitions(d)) {
                const auto a = springer_orbit(rho);
                if (a.size() != 2 * d)
                    return false;
                ++count;
            }
        msg << count << " bipartitions map to type-C partitions of 2d";
        return true;
    }));
    out.push_back(run_check("springer.example_table.d=2", [](auto& msg) {
        const std::map<std::string, std::string> expected{
            {"1,1|-", "1,1,1,1"}, {"-|1,1", "2,1,1"}, {"2|-", "2,2"}, {"1|1", "2,2"}, {"-|2", "4"}};
        for (const auto& [rho, orbit] : expected) {
            const auto got = springer_orbit(Bipartition::parse(rho)).to_string();
            if (got != orbit) {
                msg << rho << " -> " << got << ", expected " << orbit;
                return false;
            }
        }
        msg << "5 rows match";
        return true;
    }));
    out.push_back(run_check("springer.padding_stability.d<=5", [](auto& msg) {
        for (int d = 0; d <= 5; ++d)
            for (const auto& rho : enumerate_bipartitions(d))
                for (int extra = 1; extra <= 6; ++extra)
                    if (springer_trace(rho, default_nu_length(rho) + extra).orbit != springer_orbit(rho)) {
                        msg << rho.to_string() << " changes with padding +" << extra;
                        return false;
                    }
        msg << "stable under padding +1..+6";
        return true;
    }));
    for (int d = 1; d <= 4; ++d)
        out.push_back(run_check("springer.coverage.d=" + std::to_string(d), [d](auto& msg) {
            const auto cov = springer_coverage(d);
            msg << "hit " << cov.hit.size() << "/" << cov.hit.size() + cov.missed.size() << " type-C orbits";
            if (!cov.missed.empty()) {
                msg << "; missed";
                for (const auto& a : cov.missed)
                    msg << " " << a.to_string();
            }
            msg << "; sorting reordered " << cov.reordered << " outputs";
            return true;  // reported, not asserted
        }));
    return out;
}

inline std::vector<CheckResult> verify_sw(std::size_t max_cells)
{
    std::vector<CheckResult> out;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
        out.push_back(run_check("sw.decomposition.n=" + std::to_string(n) + ".d=" + std::to_string(d), [&, n = n, d = d](auto& msg) {
            const auto dec = schur_weyl_decompose(n, d, ActionConvention::swap, max_cells);
            Count dim = 0;
            for (const auto& [rho, mult] : dec) {
                if (mult != schur_weyl_multiplicity_formula(rho, n)) {
                    msg << rho.to_string() << ": rank gives " << mult << ", gl_dim gives " << schur_weyl_multiplicity_formula(rho, n);
                    return false;
                }
                dim += irr_dim(rho) * mult;
            }
            msg << "sum irr_dim * multiplicity = " << dim;
            return dim == static_cast<Count>(make_tensor_space(n, d, max_cells).dim);
        }));
    }
    const int n = 2;
    const int d = 2;
    out.push_back(run_check("sw.projectors.n=2.d=2", [&](auto& msg) {
        const auto space = make_tensor_space(n, d, max_cells);
        ExactMatrix sum(space.dim, space.dim);
        std::vector<ExactMatrix> ps;
        for (const auto& rho : enumerate_bipartitions(d))
            ps.push_back(isotypic_projector(rho, n, d, ActionConvention::swap, max_cells));
        for (std::size_t a = 0; a < ps.size(); ++a) {
            sum += ps[a];
            for (std::size_t b = 0; b < ps.size(); ++b)
                if (a != b && !(ps[a] * ps[b]).is_zero()) {
                    msg << "projectors " << a << " and " << b << " do not annihilate";
                    return false;
                }
        }
        msg << ps.size() << " idempotents, pairwise orthogonal, summing to I";
        return sum == ExactMatrix::identity(space.dim);
    }));
    out.push_back(run_check("sw.commutant.n=2.d=2", [&](auto& msg) {
        int count = 0;
        for (const auto& g : generators(d)) {
            const auto w_sign = w_action_matrix(g, n, d, ActionConvention::sign, max_cells);
            const auto w_swap = w_action_matrix(g, n, d, ActionConvention::swap, max_cells);
            for (auto block : {GlBlock::upper, GlBlock::lower}) {
                const int size = block == GlBlock::upper ? n + 1 : n;
                for (int r = 1; r <= size; ++r)
                    for (int c = 1; c <= size; ++c) {
                        if (!commutator(w_sign, g_action_matrix(block, r, c, n, d, max_cells)).is_zero())
                            return false;
                        ++count;
                    }
            }
            for (const auto& x : itheta_generator_matrices(n, d, max_cells)) {
                if (!commutator(w_swap, x).is_zero())
                    return false;
                ++count;
            }
        }
        msg << count << " commutators are exactly zero";
        return true;
    }));
    out.push_back(run_check("sw.change_of_basis.n=2.d=2", [&](auto& msg) {
        const auto c = change_of_basis(n, d, max_cells);
        const auto c_inv = c.inverse();
        int count = 0;
        for (const auto& w : all_elements(d)) {
            if (c_inv * w_action_matrix(w, n, d, ActionConvention::swap, max_cells) * c
                != w_action_matrix(w, n, d, ActionConvention::sign, max_cells))
                return false;
            ++count;
        }
        msg << "conjugation identity holds for all " << count << " elements";
        return true;
    }));
    return out;
}

inline std::vector<CheckResult> verify_geometry(std::size_t max_cells)
{
    std::vector<CheckResult> out;
    for (int n = 0; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            out.push_back(run_check("geometry.richardson_self_check.Q_{" + std::to_string(2 * n + 1) + "," + std::to_string(2 * d) + "}",
                                    [n, d](auto& msg) {
                                        const auto qs = enumerate_q(n, 2 * d);
                                        for (const auto& q : qs)
                                            richardson(q);  // throws on mismatch
                                        msg << qs.size() << " components";
                                        return true;
                                    }));
    out.push_back(run_check("geometry.perm_character_vs_theta.n=2.d=2", [&](auto& msg) {
        Count index_sum = 0;
        for (const auto& q : enumerate_q(2, 4)) {
            const auto chi = perm_character_on_cosets(q);
            for (const auto& [cls, value] : chi)
                if (theta_fixed_points(class_representative(cls), 2, q, max_cells) != value) {
                    msg << "mismatch at " << q.to_string() << ", class " << cls.to_string();
                    return false;
                }
            index_sum += chi.at({Partition{1, 1}, {}});
        }
        msg << "sum of indices = " << index_sum;
        return index_sum == 25;
    }));
    out.push_back(run_check("geometry.htop_tables.n=2.d=2", [&](auto& msg) {
        Count grand = 0;
        for (const auto& r : htop_reports(2, 2, max_cells)) {
            for (const auto& c : r.components)
                if (!c.degree && c.htop != 0) {
                    msg << "nonzero H_top for " << r.orbit.to_string() << " outside the image of " << c.dcomp.to_string();
                    return false;
                }
            msg << r.orbit.to_string() << ":" << r.total << " ";
            grand += r.total;
        }
        Count formula = 0;
        for (const auto& rho : enumerate_bipartitions(2))
            formula += schur_weyl_multiplicity_formula(rho, 2);
        msg << "sum " << grand << " = " << formula;
        return grand == formula;
    }));
    return out;
}

} // namespace detail

/// suite is one of sw, springer, geometry, characters, all.
inline std::vector<CheckResult> run_verify_suite(const std::string& suite, std::size_t max_cells = kDefaultMaxCells)
{
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };
    const bool all = suite == "all";
    if (!all && suite != "sw" && suite != "springer" && suite != "geometry" && suite != "characters")
        throw InputError("unknown verify suite '" + suite + "' (expected sw, springer, geometry, characters or all)");
    if (all || suite == "characters")
        append(detail::verify_characters());
    if (all || suite == "springer")
        append(detail::verify_springer());
    if (all || suite == "sw")
        append(detail::verify_sw(max_cells));
    if (all || suite == "geometry")
        append(detail::verify_geometry(max_cells));
    return out;
}

} // namespace htop

#endif // SPRINGER_HTOP_VERIFY_HPP
