// htop: command-line front end for the springer_htop library.

#include <springer_htop/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

void add_common(CLI::App* app, htop::RunConfig& cfg, std::string& format)
{
    app->add_option("--n", cfg.n, "rank parameter, N = 2n+1")->check(CLI::NonNegativeNumber);
    app->add_option("--d", cfg.d, "tensor degree")->check(CLI::NonNegativeNumber);
    app->add_option("--format", format, "json, tsv or pretty");
    app->add_option("--max-cells", cfg.max_cells, "ceiling on N^d");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Top homology of type-C partial Springer fibers"};
    app.require_subcommand(1);

    htop::RunConfig cfg;
    std::string format = "pretty";
    std::string orbit;
    std::string component;
    std::string suite = "all";

    auto* springer = app.add_subcommand("springer", "Springer correspondence table for W_d");
    add_common(springer, cfg, format);

    auto* htop_cmd = app.add_subcommand("htop", "H_top dimensions per orbit and flag component");
    add_common(htop_cmd, cfg, format);
    htop_cmd->add_option("--orbit", orbit, "type-C partition of 2d, e.g. 2,1,1");

    auto* theta = app.add_subcommand("theta", "list Theta matrices with their chi-images");
    add_common(theta, cfg, format);
    theta->add_option("--component", component, "symmetric composition, e.g. 0,0,4,0,0");

    auto* characters = app.add_subcommand("characters", "character table of W_d");
    add_common(characters, cfg, format);

    auto* verify = app.add_subcommand("verify", "run invariant checks");
    add_common(verify, cfg, format);
    verify->add_option("suite", suite, "sw, springer, geometry, characters or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? htop::kExitOk : htop::kExitBadInput;
    }

    try {
        cfg.format = htop::parse_format(format);
    } catch (const htop::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return htop::kExitBadInput;
    }
    if (!orbit.empty())
        cfg.orbit = orbit;
    if (!component.empty())
        cfg.component = component;

    if (springer->parsed())
        return htop::cmd_springer(cfg, std::cout, std::cerr);
    if (htop_cmd->parsed())
        return htop::cmd_htop(cfg, std::cout, std::cerr);
    if (theta->parsed())
        return htop::cmd_theta(cfg, std::cout, std::cerr);
    if (characters->parsed())
        return htop::cmd_characters(cfg, std::cout, std::cerr);
    return htop::cmd_verify(suite, cfg, std::cout, std::cerr);
}
