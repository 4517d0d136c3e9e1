#include <doctest.h>

#include <cmath>

#include "cmclab/spectrum.hpp"

using namespace cmclab;

namespace {

// independent brute-force index count for the (n=2, k=1) product: count
// Fourier lines p^2/r^2 + q^2/(1-r^2) strictly below 1/r^2 + 1/(1-r^2)
long long enumerate_weak_index(double r, double tie_tol = 1e-9) {
    const double a = 1.0 / (r * r), b = 1.0 / (1.0 - r * r);
    const double threshold = a + b;
    long long count = 0;
    for (int p = 0; p <= 64; ++p)
        for (int q = 0; q <= 64; ++q) {
            if (p == 0 && q == 0) continue;
            double mu = p * p * a + q * q * b;
            if (mu < threshold - tie_tol) count += (p == 0 ? 1 : 2) * (q == 0 ? 1 : 2);
        }
    return count;
}

} // namespace

TEST_CASE("circle spectrum") {
    auto lines = sphere_spectrum(1, 1.0, 3);
    REQUIRE(lines.size() == 4);
    double mus[] = {0, 1, 4, 9};
    long long mults[] = {1, 2, 2, 2};
    for (int j = 0; j <= 3; ++j) {
        CHECK(lines[j].mu == doctest::Approx(mus[j]));
        CHECK(lines[j].mult == mults[j]);
    }
}

TEST_CASE("two-sphere spectrum") {
    auto lines = sphere_spectrum(2, 1.0, 6);
    for (int j = 0; j <= 6; ++j) {
        CHECK(lines[j].mu == doctest::Approx(j * (j + 1.0)));
        CHECK(lines[j].mult == 2 * j + 1);
    }
}

TEST_CASE("sphere spectrum scales with the radius and rejects bad input") {
    auto lines = sphere_spectrum(3, 0.5, 2);
    CHECK(lines[1].mu == doctest::Approx(3.0 / 0.25));
    CHECK(lines[0].mu == 0.0);
    CHECK(lines[0].mult == 1);
    CHECK_THROWS_AS(sphere_spectrum(0, 1.0, 3), BadSpec);
    CHECK_THROWS_AS(sphere_spectrum(2, -1.0, 3), BadSpec);
}

TEST_CASE("minimal product spectrum merges to the flat-torus lines") {
    CliffordSpec spec{2, 1, std::sqrt(0.5)};
    CliffordSpectrum sp = clifford_spectrum(spec, default_j_max(spec));
    auto merged = merged_lines(sp.lines);
    REQUIRE(merged.size() >= 4);
    CHECK(merged[0].first == doctest::Approx(0.0));
    CHECK(merged[0].second == 1);
    CHECK(merged[1].first == doctest::Approx(2.0));
    CHECK(merged[1].second == 4);
    CHECK(merged[2].first == doctest::Approx(4.0));
    CHECK(merged[2].second == 4);
    CHECK(merged[3].first == doctest::Approx(8.0));
    CHECK(merged[3].second == 4);
}

TEST_CASE("spectrum truncation flag") {
    CliffordSpec spec{2, 1, 0.6};
    CHECK_FALSE(clifford_spectrum(spec, 1).truncation_ok);
    CHECK(clifford_spectrum(spec, default_j_max(spec)).truncation_ok);
}

TEST_CASE("index counts across the radius range") {
    struct Row {
        double r;
        long long weak;
    };
    for (const Row& row : {Row{0.2, 10}, Row{0.3, 8}, Row{0.5, 4}, Row{0.6, 4},
                           Row{0.707, 4}, Row{0.8, 4}, Row{0.866, 4}, Row{0.95, 8}}) {
        IndexReport idx = index_counts({2, 1, row.r});
        CHECK(idx.weak == row.weak);
        CHECK(idx.strong == row.weak + 1);
        CHECK(idx.weak == enumerate_weak_index(row.r));
    }
}

TEST_CASE("kernel lines sit exactly at the threshold") {
    SUBCASE("the (1,1) line is always a tie on the three-sphere products") {
        for (double r : {0.2, 0.35, 0.5, 0.6, 0.707, 0.9}) {
            IndexReport idx = index_counts({2, 1, r});
            bool found = false;
            for (const auto& line : idx.kernel)
                if (line.p == 1 && line.q == 1) found = true;
            CHECK(found);
        }
    }
    SUBCASE("r = 0.2 additionally ties the (0,5) line") {
        IndexReport idx = index_counts({2, 1, 0.2});
        bool found = false;
        for (const auto& line : idx.kernel)
            if (line.p == 0 && line.q == 5) found = true;
        CHECK(found);
        CHECK(idx.weak == 10);
    }
    SUBCASE("plateau boundary r = 0.5 ties the (0,2) line") {
        IndexReport idx = index_counts({2, 1, 0.5});
        bool found = false;
        for (const auto& line : idx.kernel)
            if (line.p == 0 && line.q == 2) found = true;
        CHECK(found);
        CHECK(idx.weak == 4);
        CHECK(idx.strong == 5);
    }
}

TEST_CASE("index test constants on the 0.6 torus") {
    const double mean_h = -7.0 / 24.0, a2 = 337.0 / 144.0;
    IndexTestConstants c = index_test_constants(mean_h, a2, 2);
    CHECK(c.alpha_plus == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
    CHECK(c.alpha_minus == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(c.mu_plus == doctest::Approx(25.0 / 9.0).epsilon(1e-12));
    CHECK(c.mu_minus == doctest::Approx(25.0 / 16.0).epsilon(1e-12));
    CHECK(c.jac_plus == doctest::Approx(-25.0 / 16.0).epsilon(1e-12));
    CHECK(c.jac_minus == doctest::Approx(-25.0 / 9.0).epsilon(1e-12));
    CHECK(c.disc > 0);
    CHECK_THROWS_AS(index_test_constants(0.0, 2.0, 2), MinimalCase);
}

TEST_CASE("constants' algebraic invariants hold across the family") {
    Lcg rng(99);
    for (int i = 0; i < 40; ++i) {
        int n = 2 + static_cast<int>(rng.below(3));
        int k = 1 + static_cast<int>(rng.below(n - 1));
        double r = rng.uniform(0.15, 0.9);
        double mean_h = clifford_mean(n, k, r);
        if (std::abs(mean_h) < 1e-6) continue;
        double a2 = clifford_norm_a_sq(n, k, r);
        IndexTestConstants c = index_test_constants(mean_h, a2, n);
        CHECK(c.mu_minus < c.mu_plus);
        CHECK(c.jac_minus < c.jac_plus);
        CHECK(c.jac_plus < 0);
        CHECK(std::abs(c.jac_plus - (c.mu_plus - (a2 + n))) < 1e-12);
        CHECK(std::abs(c.jac_minus - (c.mu_minus - (a2 + n))) < 1e-12);
        // the two eigenvalues are exactly the first factor lines
        double line_a = k / (r * r), line_b = (n - k) / (1.0 - r * r);
        CHECK(std::abs(c.mu_plus - std::max(line_a, line_b)) < 1e-9);
        CHECK(std::abs(c.mu_minus - std::min(line_a, line_b)) < 1e-9);
        // the alphas coincide with the principal curvatures
        double lo = clifford_kappa_low(r), hi = clifford_kappa_high(r);
        CHECK(std::abs(std::min(c.alpha_plus, c.alpha_minus) - lo) < 1e-9);
        CHECK(std::abs(std::max(c.alpha_plus, c.alpha_minus) - hi) < 1e-9);
    }
}

TEST_CASE("test functions are eigenfunctions with zero mean") {
    Hypersurface torus = make_clifford({2, 1, 0.6});
    SUBCASE("first-factor direction degenerates the minus family") {
        TestFunctionReport rep = verify_test_functions(torus, Vec::Unit(4, 0));
        CHECK_FALSE(rep.minimal);
        CHECK(rep.degenerate_minus);
        CHECK_FALSE(rep.degenerate_plus);
        CHECK(rep.residual_plus < 1e-4);
        CHECK(rep.mean_plus < 1e-8);
    }
    SUBCASE("second-factor direction degenerates the plus family") {
        TestFunctionReport rep = verify_test_functions(torus, Vec::Unit(4, 2));
        CHECK(rep.degenerate_plus);
        CHECK_FALSE(rep.degenerate_minus);
        CHECK(rep.residual_minus < 1e-4);
        CHECK(rep.mean_minus < 1e-8);
    }
    SUBCASE("minimal torus uses the raw support families") {
        Hypersurface minimal = make_clifford({2, 1, std::sqrt(0.5)});
        TestFunctionReport rep = verify_test_functions(minimal, Vec::Unit(4, 0));
        CHECK(rep.minimal);
        CHECK(rep.residual_height < 1e-4);
        CHECK(rep.residual_normal < 1e-4);
    }
    SUBCASE("non-CMC surfaces are rejected") {
        Hypersurface m = make_counterexample({{2, std::acos(0.8), 0.02, 2}});
        CHECK_THROWS_AS(verify_test_functions(m, Vec::Unit(4, 0)), NotCmc);
    }
}

TEST_CASE("dimension bounds") {
    SUBCASE("nonminimal torus: two plus two with factor-aligned degeneracies") {
        DimensionBoundReport rep = dimension_bound_report(make_clifford({2, 1, 0.6}));
        CHECK_FALSE(rep.minimal);
        CHECK(rep.rank_plus == 2);
        CHECK(rep.rank_minus == 2);
        CHECK(rep.bound == 4); // n + 2: matches the weak index at r = 0.6
        CHECK(rep.degenerate_plus == std::vector<int>{2, 3});
        CHECK(rep.degenerate_minus == std::vector<int>{0, 1});
        CHECK(rep.distinct_eigenvalues);
        CHECK(rep.cross_gram < 1e-6);
    }
    SUBCASE("minimal torus: full ranks but coinciding eigenvalues") {
        DimensionBoundReport rep =
            dimension_bound_report(make_clifford({2, 1, std::sqrt(0.5)}));
        CHECK(rep.minimal);
        CHECK(rep.rank_plus == 4);
        CHECK(rep.rank_minus == 4);
        CHECK(rep.bound == 8);
        // both families sit in the same eigenspace here; the orthogonality
        // premise fails and the nominal 2n+4 bound does not apply (the weak
        // index is n+2 = 4)
        CHECK_FALSE(rep.distinct_eigenvalues);
        CHECK(rep.cross_gram > 0.5);
        CHECK(index_counts({2, 1, std::sqrt(0.5)}).weak == 4);
    }
    SUBCASE("great sphere: collapsed families with distinct eigenvalues") {
        DimensionBoundReport rep = dimension_bound_report(make_umbilical({2, Vec(), 0.0}));
        CHECK(rep.minimal);
        CHECK(rep.rank_plus == 3);  // heights: n + 1
        CHECK(rep.rank_minus == 1); // normal components: constants
        CHECK(rep.bound == 4);
        CHECK(rep.distinct_eigenvalues);
        CHECK(rep.cross_gram < 1e-6);
    }
}

TEST_CASE("mesh stencil reproduces the analytic lines at second order") {
    MeshComparison coarse = mesh_laplacian_crosscheck({2, 1, std::sqrt(0.5)}, 32);
    MeshComparison fine = mesh_laplacian_crosscheck({2, 1, std::sqrt(0.5)}, 64);
    REQUIRE(coarse.rows.size() == 12);
    REQUIRE(fine.rows.size() == 12);
    CHECK(fine.rows[0].mu == doctest::Approx(2.0));
    CHECK(fine.rows[0].rel_err < 2e-3);
    for (int i = 0; i < 12; ++i) {
        double ratio = coarse.rows[i].rel_err / fine.rows[i].rel_err;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
    CHECK_THROWS_AS(mesh_laplacian_crosscheck({2, 1, 0.6}, 8), BadGrid);
    CHECK_THROWS_AS(mesh_laplacian_crosscheck({3, 1, 0.6}, 32), BadSpec);
}

TEST_CASE("separable mesh eigenvalues match a direct two-dimensional solve") {
    const int g = 20;
    const double r = 0.6, r2 = r * r, s2 = 1.0 - r2;
    const double h = 2.0 * 3.14159265358979323846 / g;
    Mat lap = Mat::Zero(g * g, g * g);
    auto id = [g](int i, int j) { return ((i + g) % g) * g + ((j + g) % g); };
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            int row = id(i, j);
            lap(row, row) = 2.0 / (h * h * r2) + 2.0 / (h * h * s2);
            lap(row, id(i + 1, j)) -= 1.0 / (h * h * r2);
            lap(row, id(i - 1, j)) -= 1.0 / (h * h * r2);
            lap(row, id(i, j + 1)) -= 1.0 / (h * h * s2);
            lap(row, id(i, j - 1)) -= 1.0 / (h * h * s2);
        }
    Eigen::SelfAdjointEigenSolver<Mat> es(lap);
    // compare the lowest 40 eigenvalues with the separable construction
    Mat ring = Mat::Zero(g, g);
    for (int i = 0; i < g; ++i) {
        ring(i, i) = 2.0 / (h * h);
        ring(i, (i + 1) % g) -= 1.0 / (h * h);
        ring(i, (i + g - 1) % g) -= 1.0 / (h * h);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es1(ring);
    std::vector<double> sums;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            sums.push_back(es1.eigenvalues()[i] / r2 + es1.eigenvalues()[j] / s2);
    std::sort(sums.begin(), sums.end());
    for (int i = 0; i < 40; ++i)
        CHECK(std::abs(es.eigenvalues()[i] - sums[i]) < 1e-8);
}
