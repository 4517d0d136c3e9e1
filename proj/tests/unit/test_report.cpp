#include <doctest.h>

#include <fstream>
#include <set>

#include "cmclab/report.hpp"

using namespace cmclab;

TEST_CASE("family construction from run configs") {
    RunConfig cfg;
    cfg.family = "clifford";
    CHECK(build_family(cfg).family == "clifford");
    cfg.family = "umbilical";
    CHECK(build_family(cfg).family == "umbilical");
    cfg.family = "nonsense";
    CHECK_THROWS_AS(build_family(cfg), BadSpec);
    cfg.family = "clifford";
    cfg.r = 1.5;
    CHECK_THROWS_AS(build_family(cfg), BadSpec);
}

TEST_CASE("direction defaults and validation") {
    RunConfig cfg;
    CHECK(config_direction(cfg, 4) == Vec::Unit(4, 0));
    cfg.family = "umbilical";
    CHECK(config_direction(cfg, 4) == Vec::Unit(4, 1));
    cfg.v = {1.0, 2.0};
    CHECK_THROWS_AS(config_direction(cfg, 4), BadSpec);
    cfg.v = {0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(config_direction(cfg, 4), BadSpec);
}

TEST_CASE("verify run passes on the canonical torus and is byte-stable") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.samples = 120;
    VerificationReport rep = run_verify(cfg);
    CHECK(rep.all_pass());
    std::string once = rep.to_json().dump(2);
    std::string twice = run_verify(cfg).to_json().dump(2);
    CHECK(once == twice);
    CHECK(rep.to_json()["schema"] == 1);
    for (const auto& row : rep.rows) CHECK_FALSE(row.anchor.empty());
}

TEST_CASE("index sweep demands a grid") {
    RunConfig cfg;
    cfg.command = "index-sweep";
    CHECK_THROWS_AS(run_index_sweep(cfg), BadSpec);
}

TEST_CASE("lemma runner rejects all random nonzero instances") {
    RunConfig cfg;
    cfg.command = "lemma22";
    cfg.samples = 300;
    VerificationReport rep = run_lemma_demo(cfg);
    CHECK(rep.all_pass());
}

TEST_CASE("the standard run collection covers the claim areas") {
    // ids that must appear across a full command sweep; this pins the
    // claim-anchor coverage of the report surface
    std::set<std::string> want{
        "support-decomposition", "gradient-height", "gradient-normal",
        "laplacian-height", "laplacian-normal", "proportionality",
        "gram-heights", "gram-normals", "circle-closed-form",
        "normal-closed-form", "height-law", "curvature-transport",
        "geodesic-property", "circle-law", "acceleration-law",
        "spectrum-truncation", "test-eigenvalues-in-spectrum", "plateau",
        "on-sphere", "height-equals-normal-component", "gauss-map-match",
        "base-curvature-window", "mean-curvature-nonconstant",
        "immersion-factor", "deleted-products", "independence",
        "zero-identity", "swap-case", "duplicate-root", "random-rejections",
        "flow-richardson"};
    std::set<std::string> got;
    RunConfig cfg;
    cfg.samples = 120;
    cfg.command = "verify";
    for (const auto& row : run_verify(cfg).rows) got.insert(row.id);
    cfg.command = "geodesics";
    for (const auto& row : run_geodesics(cfg).rows) got.insert(row.id);
    cfg.command = "spectrum";
    for (const auto& row : run_spectrum(cfg).rows) got.insert(row.id);
    cfg.command = "index-sweep";
    cfg.r_grid = {0.5, 0.6};
    for (const auto& row : run_index_sweep(cfg).rows) got.insert(row.id);
    cfg.command = "counterexample";
    for (const auto& row : run_counterexample(cfg).rows) got.insert(row.id);
    cfg.command = "lemma22";
    for (const auto& row : run_lemma_demo(cfg).rows) got.insert(row.id);
    for (const auto& id : want) {
        INFO("missing claim id: " << id);
        CHECK(got.count(id) == 1);
    }
}

TEST_CASE("config keys apply and reject junk") {
    RunConfig cfg;
    apply_key(cfg, "r", "0.35");
    CHECK(cfg.r == doctest::Approx(0.35));
    apply_key(cfg, "m-freq", "3");
    CHECK(cfg.m_freq == 3);
    apply_key(cfg, "v", "1,0,0,0");
    CHECK(cfg.v == std::vector<double>{1.0, 0.0, 0.0, 0.0});
    apply_key(cfg, "tol-lap", "1e-5");
    CHECK(cfg.tol_lap == doctest::Approx(1e-5));
    CHECK_THROWS_AS(apply_key(cfg, "nonsense", "1"), BadSpec);
    CHECK_THROWS_AS(apply_key(cfg, "r", "not-a-number"), BadSpec);
}

TEST_CASE("config files parse comments and honor overrides") {
    std::string path = "/tmp/cmclab_test_config.ini";
    {
        std::ofstream out(path);
        out << "# comment\n"
            << "family = umbilical\n"
            << "c = 0.25   # trailing comment\n"
            << "samples=321\n";
    }
    RunConfig cfg;
    apply_config_file(cfg, path);
    CHECK(cfg.family == "umbilical");
    CHECK(cfg.c == doctest::Approx(0.25));
    CHECK(cfg.samples == 321);

    RunConfig cfg2;
    apply_config_file(cfg2, path, {"c"}); // pretend the flag pinned c
    CHECK(cfg2.c == doctest::Approx(0.5));
    CHECK(cfg2.samples == 321);

    CHECK_THROWS_AS(apply_config_file(cfg, "/tmp/definitely_missing.ini"), BadSpec);
}

TEST_CASE("skip rows do not fail a report") {
    VerificationReport rep;
    rep.add("a", "claim a", true, 0.0);
    rep.skip("b", "claim b", "gated");
    CHECK(rep.all_pass());
    rep.add("c", "claim c", false, 1.0);
    CHECK_FALSE(rep.all_pass());
}
