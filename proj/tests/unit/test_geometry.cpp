#include <doctest.h>

#include <cmath>

#include "cmclab/families.hpp"
#include "cmclab/geometry.hpp"

using namespace cmclab;

TEST_CASE("immersion jets satisfy the sphere and tangency invariants") {
    Hypersurface torus = make_clifford({2, 1, 0.6});
    Lcg rng(7);
    for (int i = 0; i < 50; ++i) {
        ChartPoint p = random_point(torus, rng);
        SurfaceJet jet = immersion_jet(torus, p);
        CHECK(std::abs(jet.value.norm() - 1.0) < 1e-12);
        for (const Vec& t : jet.d1) CHECK(std::abs(t.dot(jet.value)) < 1e-10);
        for (int a = 0; a < jet.dim(); ++a)
            for (int b = 0; b < jet.dim(); ++b)
                CHECK((jet.d2[a][b] - jet.d2[b][a]).norm() == 0.0);
    }
}

TEST_CASE("chart evaluation outside the open domain is rejected") {
    Hypersurface sphere = make_umbilical({2, Vec(), 0.5});
    Vec u(2);
    u << -0.5, 1.0; // colatitude below the domain
    CHECK_THROWS_AS(immersion_jet(sphere, {0, u}), OutOfDomain);
    u << 0.5, 1.0;
    CHECK_NOTHROW(immersion_jet(sphere, {0, u}));
}

TEST_CASE("rank-deficient charts are detected") {
    // a fake chart that collapses the second direction
    Hypersurface s;
    s.dim = 2;
    s.ambient = 4;
    Chart c;
    c.lo = Vec::Zero(2);
    c.hi = Vec::Constant(2, 6.28);
    c.periodic = {1, 1};
    c.position = [](const Vec& u) {
        Vec x(4);
        x << std::cos(u[0]), std::sin(u[0]), 0.0, 0.0;
        return x;
    };
    s.charts.push_back(c);
    Vec u(2);
    u << 1.0, 1.0;
    CHECK_THROWS_AS(immersion_jet(s, {0, u}), RankDeficient);
}

TEST_CASE("finite-difference jets agree with analytic jets") {
    Lcg rng(11);
    std::vector<Hypersurface> surfaces;
    surfaces.push_back(make_clifford({2, 1, 0.6}));
    surfaces.push_back(make_umbilical({2, Vec(), 0.4}));
    surfaces.push_back(make_counterexample({{2, std::acos(0.8), 0.02, 2}}));
    for (Hypersurface& s : surfaces) {
        // keep samples away from the chart poles, where the degenerating
        // metric amplifies difference noise past the agreement gate
        for (Chart& c : s.charts) c.sample_margin = 0.05;
        Hypersurface fd = s.without_analytic_jets();
        for (int i = 0; i < 10; ++i) {
            ChartPoint p = random_point(s, rng);
            CurvatureData a = shape_operator(s, p);
            CurvatureData b = shape_operator(fd, p);
            CHECK((a.kappas - b.kappas).cwiseAbs().maxCoeff() < tol::fd);
            CHECK(std::abs(a.mean_h - b.mean_h) < tol::fd);
        }
    }
}

TEST_CASE("complement normal is unit, orthogonal, and matches family formulas") {
    Hypersurface torus = make_clifford({3, 1, 0.5});
    Lcg rng(13);
    for (int i = 0; i < 20; ++i) {
        ChartPoint p = random_point(torus, rng);
        SurfaceJet jet = immersion_jet(torus, p);
        Vec nu = complement_normal(jet, 1.0);
        CHECK(std::abs(nu.norm() - 1.0) < 1e-12);
        CHECK(std::abs(nu.dot(jet.value)) < 1e-12);
        for (const Vec& t : jet.d1) CHECK(std::abs(nu.dot(t)) < 1e-10);
        Vec formula = unit_normal(torus, p).value;
        CHECK(std::abs(std::abs(nu.dot(formula)) - 1.0) < 1e-10);
    }
}

TEST_CASE("chart projection recovers points on the surface") {
    Hypersurface torus = make_clifford({2, 1, 0.6});
    Lcg rng(17);
    for (int i = 0; i < 10; ++i) {
        ChartPoint p = random_point(torus, rng);
        Vec target = immersion_jet(torus, p).value;
        ChartPoint guess = p;
        guess.u[0] += 0.05;
        guess.u[1] -= 0.07;
        CHECK(distance_to_surface(torus, target, guess) < 1e-10);
    }
}

TEST_CASE("discrete Laplace-Beltrami matches sphere eigenfunctions") {
    // heights of a great sphere are eigenfunctions with eigenvalue n
    Hypersurface sphere = make_umbilical({2, Vec(), 0.0});
    Lcg rng(19);
    Vec w = Vec::Unit(4, 1);
    for (int i = 0; i < 10; ++i) {
        ChartPoint p = random_point(sphere, rng);
        ChartFn f = [&](const Vec& u) {
            return immersion_jet(sphere, {0, u}).value.dot(w);
        };
        double lap = laplace_beltrami(sphere, p, f);
        double val = immersion_jet(sphere, p).value.dot(w);
        CHECK(std::abs(lap + 2.0 * val) < 1e-6);
        ChartFn constant = [](const Vec&) { return 3.25; };
        CHECK(std::abs(laplace_beltrami(sphere, p, constant)) < 1e-9);
    }
}

TEST_CASE("mean curvature spread separates CMC from non-CMC families") {
    CHECK(mean_curvature_spread(make_clifford({2, 1, 0.6})) < 1e-12);
    CHECK(mean_curvature_spread(make_umbilical({2, Vec(), 0.7})) < 1e-12);
    CHECK(mean_curvature_spread(make_counterexample({{2, std::acos(0.8), 0.02, 2}})) >
          1e-3);
}
