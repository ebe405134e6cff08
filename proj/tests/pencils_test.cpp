#include <doctest.h>

#include <algorithm>

#include "pcl/pencils.hpp"
#include "pcl/seedrng.hpp"

using namespace pcl;

namespace {

QPoly P(const std::string& s) { return parse_poly(s); }

Pencil conic_pencil() { return Pencil(P("z^2"), P("x^2 + y^2 - z^2")); }

QPoly random_conic(SeedRng& rng) {
    QPoly out(Vars::XYZ);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j)
            out.add_term(Expo{i, j, 2 - i - j}, Rational(rng.small(4)));
    if (out.is_zero() || out.degree() < 2) out = out + P("x^2 - y*z");
    return out;
}

} // namespace

TEST_CASE("pencil construction and members") {
    Pencil p = conic_pencil();
    CHECK(member(p, 1, 0) == P("z^2"));
    CHECK(member(p, 1, -1) == normalize(P("2*z^2 - x^2 - y^2")));
    CHECK(member(p, 1, 1) == P("x^2 + y^2"));
    CHECK_THROWS_AS(member(p, 0, 0), error);
    CHECK_THROWS_AS(Pencil(P("x^2"), P("x*y")), error);     // common factor
    CHECK_THROWS_AS(Pencil(P("x^2"), P("y^3")), error);     // degree mismatch
    CHECK_THROWS_AS(Pencil(P("x^2"), P("3*x^2")), error);   // proportional
}

TEST_CASE("pencil parameters normalize") {
    auto p = PencilParameter::at(Rational(-2, 3), Rational(4, 3));
    CHECK(p.lam == Rational(1));
    CHECK(p.mu == Rational(-2));
    CHECK(PencilParameter::at(0, -5) == PencilParameter::at(0, 7));
    CHECK_THROWS_AS(PencilParameter::at(0, 0), error);
    CHECK_THROWS_AS(PencilParameter::algebraic(UniQ{Rational(1), Rational(1)}), error);
}

TEST_CASE("special fibers of conic pencils") {
    auto sf = special_fibers(conic_pencil());
    REQUIRE(sf.parameters.size() == 2);
    CHECK(sf.parameters[0] == PencilParameter::at(1, 0));
    CHECK(sf.parameters[1] == PencilParameter::at(1, 1));

    auto sf2 = special_fibers(Pencil(P("x^2"), P("y^2")));
    REQUIRE(sf2.parameters.size() == 2);
    CHECK(sf2.parameters[0] == PencilParameter::at(0, 1));
    CHECK(sf2.parameters[1] == PencilParameter::at(1, 0));

    // a generic conic pencil has three degenerate members, counted through
    // the degrees of the reported minimal polynomials
    auto sf3 = special_fibers(Pencil(P("x^2 + 2*y^2 + 3*z^2 + x*y"),
                                     P("x*z + y^2 - z^2 + 7*x^2")));
    int total = 0;
    for (auto& q : sf3.parameters) total += q.rational ? 1 : uni_degree(q.minpoly);
    CHECK(total == 3);
    CHECK(sf3.unverified.empty());
}

namespace {

// symmetric matrix of a quadratic form, as an independent oracle:
// a member of a conic pencil is degenerate exactly when its matrix is singular
std::array<std::array<Rational, 3>, 3> quadric_mat(const QPoly& f) {
    auto c = [&](int i, int j) {
        Expo e{0, 0, 0};
        ++e[i];
        ++e[j];
        auto it = f.terms().find(e);
        return it == f.terms().end() ? Rational(0) : it->second;
    };
    std::array<std::array<Rational, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = i == j ? c(i, i) : c(i, j) / 2;
    return m;
}

Rational det3_rat(const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("special fiber exactness on random conic pencils") {
    SeedRng rng(101);
    int done = 0;
    while (done < 10) {
        QPoly a = random_conic(rng), b = random_conic(rng);
        if (a.is_zero() || b.is_zero() || a.degree() != 2 || b.degree() != 2) continue;
        if (normalize(a) == normalize(b) || !gcd(a, b).is_constant()) continue;
        Pencil p(a, b);
        auto sf = special_fibers(p);
        // a rational parameter is reported exactly when the matrix of the
        // corresponding member is singular (this includes rank-2 members
        // that are square-free but consist of two distinct lines)
        auto det_at = [&](const Rational& lam, const Rational& mu) {
            return det3_rat(quadric_mat(member(p, lam, mu)));
        };
        auto reported = [&](const PencilParameter& cand) {
            return std::find(sf.parameters.begin(), sf.parameters.end(), cand) !=
                   sf.parameters.end();
        };
        for (auto& q : sf.parameters)
            if (q.rational) CHECK(det_at(q.lam, q.mu) == 0);
        for (long t = -3; t <= 3; ++t)
            CHECK(reported(PencilParameter::at(Rational(t), 1)) ==
                  (det_at(Rational(t), 1) == 0));
        CHECK(reported(PencilParameter::at(1, 0)) == (det_at(1, 0) == 0));
        ++done;
    }
}

TEST_CASE("fiber structure") {
    Pencil p = conic_pencil();
    auto fd = fiber_structure(p, PencilParameter::at(1, 0), std::nullopt, 3);
    REQUIRE(fd.components.size() == 1);
    CHECK(fd.components[0].form == P("z"));
    CHECK(fd.components[0].multiplicity == 2);
    CHECK(!fd.in_A);
    CHECK(fd.n_p == 2);
    CHECK(!fd.residual);

    QPoly C = P("x^2 + y^2 - z^2") * P("2*z^2 - x^2 - y^2");
    auto fd2 = fiber_structure(p, PencilParameter::at(0, 1), std::optional<QPoly>(C), 3);
    CHECK(fd2.in_A);
    CHECK(fd2.n_p == 1);

    // reassembly when the residual flag is off
    QPoly rebuilt = QPoly::constant(Vars::XYZ, Rational(1));
    for (auto& c : fd.components)
        for (int t = 0; t < c.multiplicity; ++t) rebuilt = rebuilt * c.form;
    CHECK(normalize(rebuilt) == member(p, 1, 0));
}

TEST_CASE("containment") {
    Pencil sq(P("x^2"), P("y^2"));
    auto r1 = contains_curve(sq, P("x - y"), 3);
    CHECK(r1.contains);
    REQUIRE(r1.assignment.size() == 1);
    CHECK(r1.assignment[0].second == PencilParameter::at(1, -1));

    Pencil p = conic_pencil();
    QPoly C = P("x^2 + y^2 - z^2") * P("2*z^2 - x^2 - y^2");
    auto r2 = contains_curve(p, C, 3);
    CHECK(r2.contains);
    REQUIRE(r2.assignment.size() == 2);
    std::vector<PencilParameter> params{r2.assignment[0].second, r2.assignment[1].second};
    std::sort(params.begin(), params.end());
    CHECK(params[0] == PencilParameter::at(0, 1));
    CHECK(params[1] == PencilParameter::at(1, -1));

    CHECK(!contains_curve(sq, P("z"), 3).contains);
}

TEST_CASE("orbifold signatures") {
    Pencil p = conic_pencil();
    QPoly C = P("x^2 + y^2 - z^2") * P("2*z^2 - x^2 - y^2");
    auto sig = orbifold_of_pencil(p, C, 3);
    CHECK(sig.n == 2);
    CHECK(sig.weights == std::vector<int>{2});
    for (int w : sig.weights) CHECK(w >= 2);
    // the connectedness caveat is always surfaced
    bool caveat = false;
    for (auto& w : sig.warnings)
        if (w.find("connectedness") != std::string::npos) caveat = true;
    CHECK(caveat);

    // a curve covering every special fiber leaves no weights
    QPoly C2 = P("z") * P("x^2 + y^2");
    auto sig2 = orbifold_of_pencil(p, C2, 3);
    CHECK(sig2.weights.empty());
    CHECK(sig2.n == 2);
}

TEST_CASE("signature invariance under basis change") {
    Pencil p = conic_pencil();
    QPoly C = P("x^2 + y^2 - z^2") * P("2*z^2 - x^2 - y^2");
    auto base = orbifold_of_pencil(p, C, 3);

    // swapping generators
    auto swapped = orbifold_of_pencil(Pencil(p.q(), p.p()), C, 3);
    CHECK(swapped.n == base.n);
    CHECK(swapped.weights == base.weights);

    SeedRng rng(55);
    int done = 0;
    while (done < 5) {
        Rational a(rng.small(3)), b(rng.small(3)), c(rng.small(3)), d(rng.small(3));
        if (sgn(a * d - b * c) == 0) continue;
        QPoly p2 = p.p() * a + p.q() * b, q2 = p.p() * c + p.q() * d;
        auto sig = orbifold_of_pencil(Pencil(p2, q2), C, 3);
        CHECK(sig.n == base.n);
        CHECK(sig.weights == base.weights);
        ++done;
    }
}

TEST_CASE("algebraic fiber structure") {
    // members t*x^2 + y^2 at t = +-sqrt(2) ... use the pencil <x^2, y^2> at
    // the algebraic parameter with minpoly lambda^2 - 2: member sqrt(2)x^2+y^2
    Pencil sq(P("x^2"), P("y^2"));
    auto par = PencilParameter::algebraic(UniQ{Rational(-2), Rational(0), Rational(1)});
    auto fd = fiber_structure(sq, par, std::nullopt, 3);
    CHECK(fd.n_p == 1); // square-free member over the extension
    CHECK_THROWS_AS(PencilParameter::algebraic(UniQ{Rational(1), Rational(0), Rational(0),
                                                    Rational(0), Rational(0), Rational(0),
                                                    Rational(0), Rational(1)}),
                    error); // degree 7 rejected
}
