#pragma once
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cmclab/families.hpp"
#include "cmclab/geometry.hpp"

#include <json.hpp>

namespace cmclab {

/// Everything a run needs: command, family parameters, sampling budget,
/// seed, tolerances, output directory. Populated from defaults, then an
/// optional key=value config file, then command-line flags.
struct RunConfig {
    std::string command;
    std::string family = "clifford";
    int n = 2;
    int k = 1;
    double r = 0.6;
    double c = 0.5;
    double eps = 0.02;
    double rho0 = std::acos(0.8);
    int m_freq = 2;
    std::vector<double> v; // ambient direction; empty picks a family default
    int samples = 200;
    std::uint64_t seed = 20240601;
    std::string out_dir;
    std::vector<double> r_grid;
    int j_max = -1;
    int grid = 64;

    double tol_grad = 1e-8;
    double tol_lap = 1e-4;
    double tol_prop = 1e-7;
    double tol_cmc = 1e-6;
    double tol_path = 1e-4;
    double tol_height_law = 1e-6;

    std::string config_path;
};

/// Apply one key=value setting (file keys mirror the long flag names).
/// Unknown keys raise BadSpec.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Line-oriented key=value file; '#' starts a comment. `skip` lists keys the
/// command line already fixed, which take precedence.
void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::vector<std::string>& skip = {});

struct CheckRow {
    std::string id;
    std::string anchor; // one-line statement of the claim being checked
    std::string status; // pass | fail | skip
    double residual = 0.0;
    std::string note;
};

struct VerificationReport {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRow> rows;

    void add(const std::string& id, const std::string& anchor, bool pass,
             double residual, const std::string& note = "");
    void skip(const std::string& id, const std::string& anchor, const std::string& note);
    bool all_pass() const;
    nlohmann::json to_json() const;
};

Hypersurface build_family(const RunConfig& cfg);
Vec config_direction(const RunConfig& cfg, int ambient);

VerificationReport run_verify(const RunConfig& cfg);
VerificationReport run_geodesics(const RunConfig& cfg);
VerificationReport run_spectrum(const RunConfig& cfg);
VerificationReport run_index_sweep(const RunConfig& cfg);
VerificationReport run_counterexample(const RunConfig& cfg);
VerificationReport run_lemma_demo(const RunConfig& cfg);

VerificationReport run_command(const RunConfig& cfg);

void write_text_file(const std::string& dir, const std::string& name,
                     const std::string& content);
std::string format_double(double x);

} // namespace cmclab
