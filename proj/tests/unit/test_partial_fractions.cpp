#include <doctest.h>

#include "cmclab/partial_fractions.hpp"
#include "cmclab/rng.hpp"

using namespace cmclab;

TEST_CASE("deleted products for two factors swap the factors") {
    std::vector<LinearPoly> ps{{1, 1}, {2, 1}};
    auto qs = deleted_products(ps);
    REQUIRE(qs.size() == 2);
    CHECK(qs[0].coeffs == std::vector<Rational>{1, 2}); // 2X + 1
    CHECK(qs[1].coeffs == std::vector<Rational>{1, 1}); // X + 1
}

TEST_CASE("deleted products have full degree and the diagonal pattern") {
    std::vector<LinearPoly> ps{{1, 1}, {1, 2}, {1, 3}};
    auto qs = deleted_products(ps);
    REQUIRE(qs.size() == 3);
    // q_0 = (X+2)(X+3) = X^2 + 5X + 6
    CHECK(qs[0].coeffs == std::vector<Rational>{6, 5, 1});
    for (int i = 0; i < 3; ++i) {
        CHECK(qs[i].degree() == 2);
        for (int j = 0; j < 3; ++j) {
            Rational val = qs[j].eval(ps[i].root());
            if (i == j)
                CHECK(val != 0);
            else
                CHECK(val == 0);
        }
    }
    CHECK(qs[0].eval(Rational(-1)) == 2);
}

TEST_CASE("coinciding roots are rejected") {
    std::vector<LinearPoly> ps{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(deleted_products(ps), DuplicateRoot);
    CHECK_THROWS_AS(deleted_products({{1, 1}}), BadSpec);
    CHECK_THROWS_AS(deleted_products({{0, 1}, {1, 2}}), BadSpec);
}

TEST_CASE("independence of the deleted products") {
    auto qs = deleted_products({{1, 1}, {1, 2}, {1, 3}});
    IndependenceVerdict v = independence_verdict(qs);
    CHECK(v.independent);
    CHECK(v.rank == 3);

    // degenerate input: duplicated rows lose rank
    std::vector<Poly> dup{qs[0], qs[0], qs[1]};
    IndependenceVerdict w = independence_verdict(dup);
    CHECK_FALSE(w.independent);
    CHECK(w.rank == 2);
}

TEST_CASE("partial fraction identity holds only in the all-zero case") {
    std::vector<LinearPoly> ps{{1, 1}, {2, 1}};
    FractionVerdict zero = partial_fraction_verdict(ps, {0, 0}, 0);
    CHECK(zero.identity_holds);

    FractionVerdict swapped = partial_fraction_verdict(ps, {1, -1}, 0);
    CHECK_FALSE(swapped.identity_holds);
    CHECK(swapped.witness_degree == 1);
    CHECK(swapped.witness == 1); // q_0 - q_1 = X

    // nonzero right-hand side forces the top coefficient -d * prod slopes
    FractionVerdict with_d = partial_fraction_verdict(ps, {1, 1}, 3);
    CHECK_FALSE(with_d.identity_holds);
    CHECK(with_d.witness_degree == 2);
    CHECK(with_d.witness == Rational(-3) * 2);
}

TEST_CASE("random instances are only accepted when everything vanishes") {
    Lcg rng(12345);
    int accepted_nonzero = 0, rejected_zero = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int k = 2 + static_cast<int>(rng.below(4));
        std::vector<LinearPoly> ps;
        std::vector<Rational> roots;
        while (static_cast<int>(ps.size()) < k) {
            Rational slope(1 + static_cast<long long>(rng.below(9)),
                           1 + static_cast<long long>(rng.below(9)));
            Rational offset(static_cast<long long>(rng.below(19)) - 9,
                            1 + static_cast<long long>(rng.below(9)));
            LinearPoly lp{slope, offset};
            bool fresh = true;
            for (const auto& r : roots)
                if (r == lp.root()) fresh = false;
            if (!fresh) continue;
            roots.push_back(lp.root());
            ps.push_back(lp);
        }
        bool make_zero = trial % 5 == 0;
        std::vector<Rational> as;
        bool any_nonzero = false;
        for (int i = 0; i < k; ++i) {
            long long num = make_zero ? 0 : static_cast<long long>(rng.below(13)) - 6;
            as.emplace_back(num);
            any_nonzero = any_nonzero || num != 0;
        }
        Rational d = make_zero ? 0 : Rational(static_cast<long long>(rng.below(13)) - 6);
        bool all_zero = !any_nonzero && d == 0;
        FractionVerdict v = partial_fraction_verdict(ps, as, d);
        if (v.identity_holds && !all_zero) ++accepted_nonzero;
        if (!v.identity_holds && all_zero) ++rejected_zero;
    }
    CHECK(accepted_nonzero == 0);
    CHECK(rejected_zero == 0);
}

TEST_CASE("rationalize recovers small fractions exactly") {
    CHECK(rationalize(0.75) == Rational(3, 4));
    CHECK(rationalize(-7.0 / 24.0) == Rational(-7, 24));
    CHECK(rationalize(2.0) == Rational(2));
    CHECK(rationalize(0.0) == Rational(0));
    CHECK(rationalize(1.0 / 3.0) == Rational(1, 3));
    // irrational inputs land within the denominator cap
    Rational r = rationalize(3.14159265358979323846);
    CHECK(boost::multiprecision::denominator(r) <= 1000000);
    double back = static_cast<double>(boost::multiprecision::numerator(r)) /
                  static_cast<double>(boost::multiprecision::denominator(r));
    CHECK(std::abs(back - 3.14159265358979323846) < 1e-9);
}
