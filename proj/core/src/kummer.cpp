#include "pcl/kummer.hpp"

#include <algorithm>

#include "pcl/linalg.hpp"
#include "pcl/splitting.hpp"

namespace pcl {

namespace {

void require_line(const QPoly& l, const char* name) {
    if (l.is_zero() || l.family() != Vars::XYZ || !l.is_homogeneous() || l.degree() != 1)
        throw error(std::string("kummer: ") + name + " must be a nonzero linear form in x,y,z");
}

QPoly poly_pow(const QPoly& b, int n) {
    QPoly r = QPoly::constant(b.family(), Rational(1));
    for (int i = 0; i < n; ++i) r = r * b;
    return r;
}

Mat quadric_matrix(const QPoly& C) {
    Mat A(3, std::vector<Rational>(3, Rational(0)));
    for (auto& [e, c] : C.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 2) i = j = v;
            if (e[v] == 1) (i < 0 ? i : j) = v;
        }
        if (i == j)
            A[i][i] = c;
        else
            A[i][j] = A[j][i] = c / 2;
    }
    return A;
}

// point of tangency if L touches the conic C with multiplicity 2, else nullopt
std::optional<std::array<Rational, 3>> tangency_point(const QPoly& C, const QPoly& L) {
    Parametrization phi = parametrize_line(L);
    QPoly restr = compose(C, phi);
    auto parts = squarefree_q(restr);
    if (parts.size() != 1 || parts[0].second != 2 || parts[0].first.degree() != 1)
        return std::nullopt;
    // root (t:s) = (-b:a) of a*t + b*s
    const QPoly& lin = parts[0].first;
    auto coeff = [&](Expo e) {
        auto it = lin.terms().find(e);
        return it == lin.terms().end() ? Rational(0) : it->second;
    };
    Rational a = coeff(Expo{1, 0, 0});
    Rational b = coeff(Expo{0, 1, 0});
    std::array<Rational, 3> pt;
    auto im = phi.images();
    for (int i = 0; i < 3; ++i) pt[i] = im[i].evaluate({-b, a, Rational(0)});
    int last = 2;
    while (last >= 0 && sgn(pt[last]) == 0) --last;
    if (last < 0) return std::nullopt;
    for (auto& c : pt) c /= pt[last];
    return pt;
}

} // namespace

KummerMap::KummerMap(QPoly l1, QPoly l2, QPoly l3, int n)
    : l1_(std::move(l1)), l2_(std::move(l2)), l3_(std::move(l3)), n_(n),
      frame_(LinearChange::identity()) {
    require_line(l1_, "L1");
    require_line(l2_, "L2");
    require_line(l3_, "L3");
    if (n_ < 1) throw error("kummer: the exponent must be >= 1");
    frame_ = LinearChange::from_rows(l1_, l2_, l3_); // throws when dependent
}

QPoly pullback(const QPoly& F, const KummerMap& f) {
    if (F.family() != Vars::XYZ || F.is_zero() || !F.is_homogeneous())
        throw error("pullback: input must be a nonzero homogeneous form in x,y,z");
    int n = f.exponent();
    if (F.degree() * n > kDegreeCap)
        throw degree_cap_error("pullback degree " + std::to_string(F.degree() * n) +
                               " exceeds the cap of " + std::to_string(kDegreeCap));
    QPoly in_frame = change_coordinates(F, f.frame().inverse());
    std::vector<QPoly> powers{poly_pow(f.l1(), n), poly_pow(f.l2(), n), poly_pow(f.l3(), n)};
    return in_frame.substituted_same(powers);
}

Pencil pullback_pencil(const Pencil& pencil, const KummerMap& f) {
    QPoly P = pullback(pencil.p(), f);
    QPoly Q = pullback(pencil.q(), f);
    QPoly g = gcd(P, Q);
    if (!g.is_constant()) {
        P = *divide_exact(P, g);
        Q = *divide_exact(Q, g);
    }
    return Pencil(P, Q);
}

KummerSignature kummer_orbifold(const QPoly& C, const QPoly& L1, const QPoly& L2,
                                const QPoly& L3, int n, int dmax, bool checked,
                                std::uint64_t seed) {
    if (C.is_zero() || C.family() != Vars::XYZ || !C.is_homogeneous() || C.degree() != 2)
        throw error("kummer: C must be a conic in x,y,z");
    KummerMap f(L1, L2, L3, n);

    if (checked) {
        if (sgn(det3(quadric_matrix(C))) == 0) throw error("kummer: C must be a smooth conic");
        std::vector<std::array<Rational, 3>> pts;
        const QPoly* lines[3] = {&L1, &L2, &L3};
        const char* names[3] = {"L1", "L2", "L3"};
        for (int i = 0; i < 3; ++i) {
            auto pt = tangency_point(C, *lines[i]);
            if (!pt)
                throw error(std::string("kummer: ") + names[i] + " is not tangent to C");
            pts.push_back(*pt);
        }
        if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2])
            throw error("kummer: the tangency points must be distinct");
    }

    Pencil base(C, L1 * L2);
    Pencil pulled = pullback_pencil(base, f);
    QPoly fC = normalize(pullback(C, f));
    if (!is_squarefree(fC)) throw error("kummer: the pulled-back curve is not square-free");

    KummerSignature out;
    out.signature = orbifold_of_pencil(pulled, fC, dmax, seed);
    out.reduced_found = false;
    out.group = NamedGroup{NamedGroup::Tag::Unrecognized, {}};

    const auto& ws = out.signature.weights;
    // pick one weight divisible by 2 and a different one divisible by n
    int i2 = -1, in = -1;
    for (size_t j = 0; j < ws.size() && (i2 < 0 || in < 0); ++j) {
        if (in < 0 && ws[j] % n == 0 && (int)j != i2) {
            in = (int)j;
            continue;
        }
        if (i2 < 0 && ws[j] % 2 == 0 && (int)j != in) i2 = (int)j;
    }
    if (n == 1) {
        // f_1 changes nothing; only the weight-2 quotient is available
        if (i2 < 0)
            for (size_t j = 0; j < ws.size(); ++j)
                if (ws[j] % 2 == 0) i2 = (int)j;
        if (i2 >= 0) {
            std::vector<int> div(ws.size(), 1);
            div[i2] = 2;
            out.reduced_found = true;
            out.reduced_weights = reduce(ws, div);
        }
    } else if (i2 >= 0 && in >= 0) {
        std::vector<int> div(ws.size(), 1);
        div[i2] = 2;
        div[in] = n;
        out.reduced_found = true;
        out.reduced_weights = reduce(ws, div);
    }
    if (out.reduced_found) {
        std::sort(out.reduced_weights.begin(), out.reduced_weights.end());
        out.group = identify(out.signature.n, out.reduced_weights);
    }
    return out;
}

} // namespace pcl
