#include <doctest.h>

#include "pcl/factor.hpp"
#include "pcl/qpoly.hpp"
#include "pcl/seedrng.hpp"
#include "pcl/unifactor.hpp"

using namespace pcl;

namespace {

QPoly P(const std::string& s) { return parse_poly(s); }

QPoly random_form(SeedRng& rng, int deg, bool homogeneous = true) {
    QPoly out(Vars::XYZ);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            int k = deg - i - j;
            if (!homogeneous && rng.below(2)) continue;
            out.add_term(Expo{i, j, k}, Rational(rng.small(5)));
        }
    if (out.is_zero()) out.add_term(Expo{deg, 0, 0}, Rational(1));
    return out;
}

} // namespace

TEST_CASE("parsing and printing") {
    CHECK(to_string(P("2*z^2 - x^2 - y^2")) == "-x^2 - y^2 + 2*z^2");
    CHECK(to_string(P("1/2*x + y")) == "1/2*x + y");
    CHECK_THROWS_AS(P("x + u"), parse_error);
    CHECK_THROWS_AS(P("x + + y"), parse_error);

    // print/parse round trip
    SeedRng rng(7);
    for (int i = 0; i < 10; ++i) {
        QPoly p = random_form(rng, 3);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("normalize") {
    CHECK(normalize(P("4*x^2 - 8*y^2")) == P("x^2 - 2*y^2"));
    CHECK(normalize(P("-3*y + 6*z")) == P("y - 2*z"));
    CHECK(normalize(QPoly(Vars::XYZ)).is_zero());
    QPoly p = P("2/3*x^2 - 4*y^2");
    CHECK(normalize(normalize(p)) == normalize(p));
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2 - y^2"), P("x - y")) == P("x - y"));
    CHECK(gcd(P("x"), P("y")).is_constant());
    CHECK(gcd(P("x^2*z + 2*x*y*z + y^2*z"), P("x*z^2 + y*z^2")) == P("x*z + y*z"));
    CHECK_THROWS_AS(gcd(QPoly(Vars::XYZ), QPoly(Vars::XYZ)), error);
}

TEST_CASE("gcd multiplicativity property") {
    SeedRng rng(11);
    for (int i = 0; i < 10; ++i) {
        QPoly p = random_form(rng, 2), q = random_form(rng, 2), r = random_form(rng, 2);
        CHECK(gcd(p * r, q * r) == normalize(gcd(p, q) * r));
    }
}

TEST_CASE("resultant") {
    CHECK(resultant_q(P("x^2 + y^2"), P("x - y"), 0) == P("2*y^2"));
    CHECK(resultant_q(P("x"), P("y"), 0) == P("y"));
    CHECK(resultant_q(P("x - z"), P("x + z"), 0) == P("2*z"));
    CHECK_THROWS_AS(resultant_q(P("y"), P("y + z"), 0), error); // no x in either
}

TEST_CASE("resultant vanishes exactly on common factors") {
    SeedRng rng(13);
    int with_factor = 0;
    for (int i = 0; i < 50; ++i) {
        QPoly p = random_form(rng, 2), q = random_form(rng, 2);
        if (rng.below(2)) { // plant a common factor involving x
            QPoly c = P("x") + P("y") * Rational(rng.small(3)) + P("z") * Rational(rng.small(3));
            p = p * c;
            q = q * c;
        }
        if (p.degree_in(0) < 1 || q.degree_in(0) < 1) continue;
        bool common_x = gcd(p, q).degree_in(0) > 0;
        if (common_x) ++with_factor;
        CHECK(resultant_q(p, q, 0).is_zero() == common_x);
    }
    CHECK(with_factor > 5); // the property was exercised in both directions
}

TEST_CASE("squarefree decomposition") {
    auto d1 = squarefree_q(P("x^2*y"));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == std::pair<QPoly, int>{P("y"), 1});
    CHECK(d1[1] == std::pair<QPoly, int>{P("x"), 2});

    auto d2 = squarefree_q(P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0] == std::pair<QPoly, int>{P("x + y"), 3});

    auto d3 = squarefree_q(P("x^2 + y^2"));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == std::pair<QPoly, int>{P("x^2 + y^2"), 1});
}

TEST_CASE("squarefree reassembly and coprimality") {
    SeedRng rng(17);
    for (int i = 0; i < 8; ++i) {
        QPoly a = random_form(rng, 1), b = random_form(rng, 2);
        QPoly p = a * a * b;
        auto dec = squarefree_q(p);
        QPoly rebuilt = QPoly::constant(Vars::XYZ, Rational(1));
        for (auto& [f, m] : dec) {
            for (int t = 0; t < m; ++t) rebuilt = rebuilt * f;
            for (int v = 0; v < 3; ++v)
                if (f.degree_in(v) > 0) CHECK(gcd(f, f.derivative(v)).is_constant());
        }
        CHECK(normalize(rebuilt) == normalize(p));
        for (size_t s = 0; s < dec.size(); ++s)
            for (size_t t = s + 1; t < dec.size(); ++t)
                CHECK(gcd(dec[s].first, dec[t].first).is_constant());
    }
}

TEST_CASE("factor_bounded") {
    auto f1 = factor_bounded(P("x^2 - y^2"), 1);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0] == std::pair<QPoly, int>{P("x - y"), 1});
    CHECK(f1.factors[1] == std::pair<QPoly, int>{P("x + y"), 1});
    CHECK(f1.complete());

    auto f2 = factor_bounded(P("x^2*y + y^3"), 2);
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0] == std::pair<QPoly, int>{P("y"), 1});
    CHECK(f2.factors[1] == std::pair<QPoly, int>{P("x^2 + y^2"), 1});
    CHECK(f2.complete());

    auto f3 = factor_bounded(P("x^2 + y^2"), 1);
    CHECK(f3.factors.empty());
    CHECK(!f3.complete());
    CHECK(normalize(f3.residual) == P("x^2 + y^2"));
}

TEST_CASE("factor_bounded factors divide the input") {
    SeedRng rng(19);
    for (int i = 0; i < 6; ++i) {
        QPoly p = random_form(rng, 2) * random_form(rng, 2);
        auto fb = factor_bounded(p, 2);
        for (auto& [f, m] : fb.factors) {
            QPoly q = p;
            for (int t = 0; t < m; ++t) {
                auto d = divide_exact(q, f);
                REQUIRE(d.has_value());
                q = *d;
            }
        }
    }
}

TEST_CASE("change_coordinates") {
    CHECK(change_coordinates(P("x"), LinearChange::identity()) == P("x"));
    LinearChange swap_xy(Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(change_coordinates(P("x^2"), swap_xy) == P("y^2"));
    LinearChange shear(Mat{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK(change_coordinates(P("x^2 + y^2 - z^2"), shear) == P("x^2 + 2*x*z + y^2"));

    SeedRng rng(23);
    LinearChange M = LinearChange::random_frame(rng);
    QPoly p = random_form(rng, 2), q = random_form(rng, 2);
    CHECK(change_coordinates(p * q, M) == change_coordinates(p, M) * change_coordinates(q, M));
    CHECK(change_coordinates(change_coordinates(p, M), M.inverse()) == p);
}

TEST_CASE("degree cap") {
    QPoly big = QPoly::constant(Vars::XYZ, Rational(1));
    for (int i = 0; i < 13; ++i) big = big * P("x^2 + y*z");
    CHECK_THROWS_AS(check_degree_cap(big), degree_cap_error);
}

TEST_CASE("univariate factorization") {
    // 3*(t^2 - 2)*(t + 1)^2
    UniQ a = {Rational(-2), Rational(0), Rational(1)};
    UniQ b = {Rational(1), Rational(1)};
    UniQ f = uni_mul(uni_mul(UniQ{Rational(3)}, a), uni_mul(b, b));
    auto facs = factor_univariate(f);
    REQUIRE(facs.size() == 2);
    bool saw_quadratic = false, saw_linear = false;
    for (auto& fa : facs) {
        if (uni_degree(fa.poly) == 2) {
            saw_quadratic = true;
            CHECK(fa.mult == 1);
        }
        if (uni_degree(fa.poly) == 1) {
            saw_linear = true;
            CHECK(fa.mult == 2);
        }
    }
    CHECK(saw_quadratic);
    CHECK(saw_linear);
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == Rational(-1));
}
