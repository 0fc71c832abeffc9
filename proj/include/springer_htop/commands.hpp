#ifndef SPRINGER_HTOP_COMMANDS_HPP
#define SPRINGER_HTOP_COMMANDS_HPP

// Subcommands of the `htop` tool. Each writes to a stream and returns the
// process exit code, so they can be driven in-process by the tests.
//
// Exit codes: 0 success, 1 verification failure, 2 resource bound, 3 bad input.

#include <springer_htop/errors.hpp>
#include <springer_htop/hyperoctahedral.hpp>
#include <springer_htop/orbit_geometry.hpp>
#include <springer_htop/partitions.hpp>
#include <springer_htop/springer_map.hpp>
#include <springer_htop/tensor_rep.hpp>
#include <springer_htop/verify.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace htop {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBound = 2, kExitBadInput = 3 };

enum class OutputFormat { json, tsv, pretty };

inline OutputFormat parse_format(const std::string& name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "tsv")
        return OutputFormat::tsv;
    if (name == "pretty")
        return OutputFormat::pretty;
    throw InputError("unknown format '" + name + "' (expected json, tsv or pretty)");
}

struct RunConfig {
    int n = 2;
    int d = 2;
    std::optional<std::string> orbit;
    std::optional<std::string> component;
    OutputFormat format = OutputFormat::pretty;
    std::size_t max_cells = kDefaultMaxCells;
    int max_springer_degree = 20;
    int max_character_degree = kDefaultMaxCharacterDegree;
};

namespace detail {

/// Runs fn, mapping library exceptions to exit codes with a message on err.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const BoundError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBound;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const ConsistencyError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}

inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string rule = "+";
    for (auto w : width)
        rule += std::string(w + 2, '-') + "+";
    out << rule << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << '|';
        for (std::size_t c = 0; c < width.size(); ++c)
            out << ' ' << std::left << std::setw(static_cast<int>(width[c])) << (c < rows[r].size() ? rows[r][c] : "") << " |";
        out << '\n';
        if (r == 0)
            out << rule << '\n';
    }
    out << rule << '\n';
}

inline void print_tsv(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "\t" : "") << row[c];
        out << '\n';
    }
}

} // namespace detail

/// Names of the linear characters, read off their values on s_1 and s_2.
inline std::string linear_character_name(const Bipartition& rho)
{
    const int d = rho.size();
    if (d < 2 || irr_dim(rho) != 1)
        return "-";
    const auto gens = generators(d);
    const Count on_flip = character_of(rho, gens[0]);
    const Count on_swap = character_of(rho, gens[1]);
    if (on_flip == 1 && on_swap == 1)
        return "triv";
    if (on_flip == -1 && on_swap == -1)
        return "Sign";
    if (on_flip == -1)
        return "Lsign";
    return "Ssign";
}

struct SpringerRow {
    Bipartition rho;
    Count dim = 0;
    TypeCPartition orbit;
};

/// Rows sorted by orbit (lexicographically ascending), ties in
/// enumerate_bipartitions order.
inline std::vector<SpringerRow> springer_table(int d)
{
    std::vector<SpringerRow> rows;
    for (const auto& rho : enumerate_bipartitions(d))
        rows.push_back({rho, irr_dim(rho), springer_orbit(rho)});
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.orbit < b.orbit; });
    return rows;
}

inline int cmd_springer(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        if (cfg.d < 0)
            throw InputError("--d must be nonnegative");
        if (cfg.d > cfg.max_springer_degree)
            throw BoundError("springer table for d = " + std::to_string(cfg.d) + " exceeds the bound "
                             + std::to_string(cfg.max_springer_degree));
        const auto rows = springer_table(cfg.d);
        switch (cfg.format) {
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["d"] = cfg.d;
            j["rows"] = nlohmann::ordered_json::array();
            for (const auto& r : rows)
                j["rows"].push_back({{"rho", r.rho.to_string()}, {"dim", r.dim}, {"orbit", r.orbit.to_string()}});
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv: {
            std::vector<std::vector<std::string>> t{{"IrrLabel", "dim", "orbit"}};
            for (const auto& r : rows)
                t.push_back({r.rho.to_string(), std::to_string(r.dim), r.orbit.to_string()});
            detail::print_tsv(out, t);
            break;
        }
        case OutputFormat::pretty: {
            std::vector<std::vector<std::string>> t{{"Irr(W)", "dim", "(lambda|mu)", "Young diagram"}};
            for (const auto& r : rows)
                t.push_back({linear_character_name(r.rho), std::to_string(r.dim), r.rho.to_string(), r.orbit.to_string()});
            detail::print_table(out, t);
            break;
        }
        }
        return kExitOk;
    });
}

inline nlohmann::ordered_json report_json(const HtopReport& r)
{
    nlohmann::ordered_json j;
    j["orbit"] = r.orbit.to_string();
    j["contributing"] = nlohmann::ordered_json::array();
    for (const auto& c : r.contributing)
        j["contributing"].push_back({{"rho", c.rho.to_string()}, {"rho_dual", c.rho_dual.to_string()}, {"dim", c.dim}});
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : r.components) {
        nlohmann::ordered_json comp;
        comp["d"] = c.dcomp.to_string();
        comp["degree"] = c.degree ? nlohmann::ordered_json(*c.degree) : nlohmann::ordered_json(nullptr);
        comp["htop"] = c.htop;
        j["components"].push_back(std::move(comp));
    }
    j["total"] = r.total;
    return j;
}

inline int cmd_htop(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        make_tensor_space(cfg.n, cfg.d, cfg.max_cells);
        std::vector<HtopReport> reports;
        if (cfg.orbit) {
            const auto a = TypeCPartition::parse(*cfg.orbit);
            if (a.size() != 2 * cfg.d)
                throw InputError("orbit " + a.to_string() + " is not a partition of 2d = " + std::to_string(2 * cfg.d));
            reports.push_back(htop_report(a, cfg.n, cfg.d, cfg.max_cells));
        } else {
            reports = htop_reports(cfg.n, cfg.d, cfg.max_cells);
        }

        switch (cfg.format) {
        case OutputFormat::json: {
            auto j = nlohmann::ordered_json::array();
            for (const auto& r : reports)
                j.push_back(report_json(r));
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv: {
            std::vector<std::vector<std::string>> t{{"orbit", "d", "degree", "htop"}};
            for (const auto& r : reports) {
                for (const auto& c : r.components)
                    t.push_back({r.orbit.to_string(), c.dcomp.to_string(), c.degree ? std::to_string(*c.degree) : "-",
                                 std::to_string(c.htop)});
                t.push_back({r.orbit.to_string(), "total", "-", std::to_string(r.total)});
            }
            detail::print_tsv(out, t);
            break;
        }
        case OutputFormat::pretty: {
            std::vector<std::vector<std::string>> t{{"dim H_top"}};
            for (const auto& dcomp : enumerate_q(cfg.n, 2 * cfg.d))
                t[0].push_back(dcomp.to_string());
            t[0].push_back("total");
            for (const auto& r : reports) {
                std::vector<std::string> row{r.orbit.to_string()};
                for (const auto& c : r.components)
                    row.push_back(c.degree ? std::to_string(c.htop) : "empty");
                row.push_back(std::to_string(r.total));
                t.push_back(std::move(row));
            }
            detail::print_table(out, t);
            for (const auto& r : reports) {
                out << r.orbit.to_string() << ":";
                for (const auto& c : r.contributing)
                    out << "  rho=" << c.rho.to_string() << " -> V(" << c.rho_dual.to_string() << "), dim " << c.dim;
                out << '\n';
            }
            break;
        }
        }
        return kExitOk;
    });
}

inline int cmd_theta(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        std::optional<SymComposition> dcomp;
        if (cfg.component)
            dcomp = SymComposition::parse(*cfg.component);
        const auto mats = theta_enumerate(cfg.n, cfg.d, dcomp, cfg.max_cells);
        auto rows_of = [](const ThetaMatrix& m) {
            std::vector<std::string> rows;
            for (int i = 1; i <= m.big_n(); ++i) {
                std::string row;
                for (int j = 1; j <= m.big_d(); ++j)
                    row += static_cast<char>('0' + m.at(i, j));
                rows.push_back(std::move(row));
            }
            return rows;
        };
        switch (cfg.format) {
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["n"] = cfg.n;
            j["d"] = cfg.d;
            j["component"] = dcomp ? nlohmann::ordered_json(dcomp->to_string()) : nlohmann::ordered_json(nullptr);
            j["count"] = mats.size();
            j["matrices"] = nlohmann::ordered_json::array();
            for (const auto& m : mats)
                j["matrices"].push_back({{"chi", theta_chi(m).slots}, {"grading", grading(theta_chi(m), cfg.n).to_string()},
                                         {"rows", rows_of(m)}});
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv: {
            std::vector<std::vector<std::string>> t{{"chi", "grading", "matrix"}};
            for (const auto& m : mats) {
                std::string joined;
                for (const auto& row : rows_of(m))
                    joined += (joined.empty() ? "" : "/") + row;
                t.push_back({theta_chi(m).to_string(), grading(theta_chi(m), cfg.n).to_string(), joined});
            }
            detail::print_tsv(out, t);
            out << "count\t" << mats.size() << '\n';
            break;
        }
        case OutputFormat::pretty:
            for (const auto& m : mats) {
                out << "chi = " << theta_chi(m).to_string() << "  grading = " << grading(theta_chi(m), cfg.n).to_string() << '\n';
                for (const auto& row : rows_of(m))
                    out << "  " << row << '\n';
            }
            out << "count: " << mats.size() << '\n';
            break;
        }
        return kExitOk;
    });
}

inline int cmd_characters(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto t = character_table(cfg.d, cfg.max_character_degree);
        switch (cfg.format) {
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["d"] = t.d;
            j["order"] = t.order;
            j["classes"] = nlohmann::ordered_json::array();
            for (const auto& c : t.cols)
                j["classes"].push_back(c.to_string());
            j["class_sizes"] = t.class_sizes;
            j["rows"] = nlohmann::ordered_json::array();
            for (std::size_t r = 0; r < t.rows.size(); ++r)
                j["rows"].push_back({{"rho", t.rows[r].to_string()}, {"values", t.values[r]}});
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv:
        case OutputFormat::pretty: {
            std::vector<std::vector<std::string>> tab{{"rho"}};
            for (const auto& c : t.cols)
                tab[0].push_back(c.to_string());
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                std::vector<std::string> row{t.rows[r].to_string()};
                for (auto v : t.values[r])
                    row.push_back(std::to_string(v));
                tab.push_back(std::move(row));
            }
            std::vector<std::string> sizes{"class_size"};
            for (auto s : t.class_sizes)
                sizes.push_back(std::to_string(s));
            tab.push_back(std::move(sizes));
            if (cfg.format == OutputFormat::tsv)
                detail::print_tsv(out, tab);
            else
                detail::print_table(out, tab);
            break;
        }
        }
        return kExitOk;
    });
}

inline int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto checks = run_verify_suite(suite, cfg.max_cells);
        int failed = 0;
        for (const auto& c : checks) {
            out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
            failed += c.passed ? 0 : 1;
        }
        out << (checks.size() - static_cast<std::size_t>(failed)) << "/" << checks.size() << " checks passed\n";
        return failed == 0 ? kExitOk : kExitVerifyFailed;
    });
}

} // namespace htop

#endif // SPRINGER_HTOP_COMMANDS_HPP
