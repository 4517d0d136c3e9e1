#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cmclab/report.hpp"

namespace {

// long flag name per config key; used to give command-line values
// precedence over config-file values
const std::map<std::string, std::string> kFlagOfKey = {
    {"family", "--family"}, {"n", "--n"}, {"k", "--k"}, {"r", "--r"},
    {"c", "--c"}, {"eps", "--eps"}, {"rho0", "--rho0"}, {"m_freq", "--m-freq"},
    {"v", "--v"}, {"samples", "--samples"}, {"seed", "--seed"}, {"out", "--out"},
    {"r_grid", "--r-grid"}, {"jmax", "--jmax"}, {"grid", "--grid"},
    {"tol_grad", "--tol-grad"}, {"tol_lap", "--tol-lap"}, {"tol_prop", "--tol-prop"},
    {"tol_cmc", "--tol-cmc"}, {"tol_path", "--tol-path"},
    {"tol_height_law", "--tol-height-law"}};

void add_common_options(CLI::App* cmd, cmclab::RunConfig& cfg) {
    cmd->add_option("--config", cfg.config_path,
                    "key=value config file (flags override)");
    cmd->add_option("--family", cfg.family,
                    "clifford | umbilical | counterexample | base");
    cmd->add_option("--n", cfg.n, "hypersurface dimension");
    cmd->add_option("--k", cfg.k, "first factor dimension of the product");
    cmd->add_option("--r", cfg.r, "first factor radius");
    cmd->add_option("--c", cfg.c, "umbilical slice height");
    cmd->add_option("--eps", cfg.eps, "base perturbation amplitude");
    cmd->add_option("--rho0", cfg.rho0, "base colatitude");
    cmd->add_option("--m-freq", cfg.m_freq, "base perturbation frequency");
    cmd->add_option("--v", cfg.v, "ambient direction vector, comma separated")
        ->delimiter(',');
    cmd->add_option("--samples", cfg.samples, "sample budget");
    cmd->add_option("--seed", cfg.seed, "sampling seed");
    cmd->add_option("--out", cfg.out_dir, "output directory for reports and tables");
    cmd->add_option("--jmax", cfg.j_max, "spectrum truncation (per factor degree)");
    cmd->add_option("--grid", cfg.grid, "mesh grid for stencil checks");
    cmd->add_option("--r-grid", cfg.r_grid, "radius grid for the index sweep")
        ->delimiter(',');
    cmd->add_option("--tol-grad", cfg.tol_grad, "gradient identity gate");
    cmd->add_option("--tol-lap", cfg.tol_lap, "Laplacian identity gate");
    cmd->add_option("--tol-prop", cfg.tol_prop, "proportionality gate");
    cmd->add_option("--tol-cmc", cfg.tol_cmc, "mean curvature spread gate");
    cmd->add_option("--tol-path", cfg.tol_path, "path comparison gate");
    cmd->add_option("--tol-height-law", cfg.tol_height_law, "height law gate");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification lab for constant mean curvature hypersurfaces of spheres"};
    app.require_subcommand(1);
    cmclab::RunConfig cfg;

    const char* names[] = {"verify", "geodesics", "spectrum",
                           "index-sweep", "counterexample", "lemma22"};
    const char* blurbs[] = {
        "support-function identity and dimension checks on one family",
        "flow vs closed-form circle suite along the tangential field",
        "analytic product spectrum table with stability classes",
        "weak/strong index across a radius grid",
        "checks for the non-CMC product example",
        "exact partial-fraction impossibility demos"};
    for (int i = 0; i < 6; ++i)
        add_common_options(app.add_subcommand(names[i], blurbs[i]), cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    try {
        if (!cfg.config_path.empty()) {
            // command-line flags win over file values
            std::vector<std::string> fixed;
            for (const auto& [key, flag] : kFlagOfKey)
                if (sub->count(flag) > 0) fixed.push_back(key);
            cmclab::apply_config_file(cfg, cfg.config_path, fixed);
        }
        cmclab::VerificationReport report = cmclab::run_command(cfg);
        std::cout << report.to_json().dump(2) << std::endl;
        return report.all_pass() ? 0 : 1;
    } catch (const cmclab::BadSpec& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const cmclab::CurvatureOutOfBounds& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const cmclab::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
