#include <doctest.h>

#include "pcl/kummer.hpp"
#include "pcl/seedrng.hpp"

using namespace pcl;

namespace {

QPoly P(const std::string& s) { return parse_poly(s); }

KummerMap circle_frame(int n) { return KummerMap(P("x - z"), P("x + z"), P("y - z"), n); }

} // namespace

TEST_CASE("pullback basics") {
    KummerMap id3(P("x"), P("y"), P("z"), 3);
    CHECK(pullback(P("x"), id3) == P("x^3"));

    KummerMap f2 = circle_frame(2);
    CHECK(pullback(P("x - z"), f2) == P("x - z") * P("x - z"));
    CHECK(pullback(P("x - z") * P("x + z"), f2) ==
          P("x - z") * P("x - z") * P("x + z") * P("x + z"));

    CHECK_THROWS_AS(KummerMap(P("x"), P("y"), P("x + y"), 2), error); // dependent lines
    CHECK_THROWS_AS(KummerMap(P("x"), P("y"), P("z"), 0), error);
}

TEST_CASE("pullback properties") {
    SeedRng rng(31);
    KummerMap f3(P("x - z"), P("x + 2*y"), P("y - z"), 3);
    for (int i = 0; i < 5; ++i) {
        QPoly a(Vars::XYZ), b(Vars::XYZ);
        for (int e0 = 0; e0 <= 2; ++e0)
            for (int e1 = 0; e0 + e1 <= 2; ++e1) {
                a.add_term(Expo{e0, e1, 2 - e0 - e1}, Rational(rng.small(4)));
                b.add_term(Expo{e0, e1, 2 - e0 - e1}, Rational(rng.small(4)));
            }
        if (a.is_zero() || b.is_zero()) continue;
        // multiplicative and degree-scaling
        CHECK(pullback(a * b, f3) == pullback(a, f3) * pullback(b, f3));
        CHECK(pullback(a, f3).degree() == 3 * a.degree());
        // n = 1 is the identity on forms
        KummerMap f1(P("x - z"), P("x + 2*y"), P("y - z"), 1);
        CHECK(pullback(a, f1) == a);
    }
}

TEST_CASE("pencil pullback of the circle construction") {
    QPoly C = P("x^2 + y^2 - z^2");
    Pencil base(C, P("x - z") * P("x + z"));
    // the member (1:-1) is the double line through the tangency points
    CHECK(member(base, 1, -1) == P("y^2"));

    KummerMap f2 = circle_frame(2);
    Pencil pulled = pullback_pencil(base, f2);
    CHECK(pulled.degree() == 4);
    // the pulled-back L1*L2 member has n_p = n = 2
    auto fd = fiber_structure(pulled, PencilParameter::at(0, 1), std::nullopt, 4);
    CHECK(fd.n_p == 2);
    // the pulled-back y^2 member is still a square: locate the member carrying
    // the pullback of the double line and check its weight stays even
    QPoly fy = normalize(pullback(P("y"), f2));
    auto cr = contains_curve(pulled, fy, 4);
    CHECK(cr.contains);
    REQUIRE(cr.assignment.size() == 1);
    auto fd2 = fiber_structure(pulled, cr.assignment[0].second, std::nullopt, 4);
    CHECK(fd2.n_p % 2 == 0);
    // base n_p divides pulled n_p on the frame-line member
    auto fd_base = fiber_structure(base, PencilParameter::at(1, -1), std::nullopt, 4);
    CHECK(fd2.n_p % fd_base.n_p == 0);
}

TEST_CASE("kummer orbifolds for n = 2, 3, 4") {
    QPoly C = P("x^2 + y^2 - z^2");
    for (int n = 2; n <= 4; ++n) {
        auto ks = kummer_orbifold(C, P("x - z"), P("x + z"), P("y - z"), n, 4);
        CHECK(ks.signature.n == 1);
        REQUIRE(ks.reduced_found);
        std::vector<int> expect{2, n};
        std::sort(expect.begin(), expect.end());
        CHECK(ks.reduced_weights == expect);
        if (n == 2)
            CHECK(ks.group.tag == NamedGroup::Tag::InfiniteDihedral);
        else
            CHECK(ks.group == NamedGroup{NamedGroup::Tag::FreeProduct, {2, n}});
    }
}

TEST_CASE("kummer degenerate and invalid inputs") {
    QPoly C = P("x^2 + y^2 - z^2");
    // n = 1 is the degenerate base case: no free-product target is named
    auto k1 = kummer_orbifold(C, P("x - z"), P("x + z"), P("y - z"), 1, 4);
    CHECK(k1.signature.n == 1);
    CHECK(k1.group.tag != NamedGroup::Tag::FreeProduct);
    CHECK(k1.group.tag != NamedGroup::Tag::InfiniteDihedral);

    // non-tangent line rejected unless unchecked
    CHECK_THROWS_AS(kummer_orbifold(C, P("x"), P("x + z"), P("y - z"), 2, 4), error);
    // singular conic rejected
    CHECK_THROWS_AS(kummer_orbifold(P("x^2 - y^2"), P("x - z"), P("x + z"), P("y - z"), 2, 4),
                    error);
}
