#include "pcl/splitting.hpp"

#include <algorithm>

#include "pcl/factor.hpp"
#include "pcl/linalg.hpp"

namespace pcl {

Parametrization parametrize_line(const QPoly& L) {
    if (L.family() != Vars::XYZ || L.is_zero() || L.degree() != 1 || !L.is_homogeneous())
        throw error("parametrize_line: input must be a nonzero linear form");
    Rational a[3];
    for (int v = 0; v < 3; ++v) a[v] = L.coeff_of(v, 1).constant_value();
    int pivot = 0;
    while (sgn(a[pivot]) == 0) ++pivot;

    QPoly t = QPoly::variable(Vars::TS, 0), s = QPoly::variable(Vars::TS, 1);
    QPoly img[3];
    int next = 0;
    for (int v = 0; v < 3; ++v)
        if (v != pivot) img[v] = (next++ == 0) ? t : s;
    QPoly sum(Vars::TS);
    for (int v = 0; v < 3; ++v)
        if (v != pivot) sum = sum + img[v] * a[v];
    img[pivot] = -sum / a[pivot];
    return Parametrization(img[0], img[1], img[2]);
}

namespace {

// symmetric matrix of a ternary quadratic form
Mat quadric_matrix(const QPoly& C) {
    Mat A(3, std::vector<Rational>(3, Rational(0)));
    for (auto& [e, c] : C.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 2) i = j = v;
            if (e[v] == 1) (i < 0 ? i : j) = v;
        }
        if (i == j) {
            A[i][i] = c;
        } else {
            A[i][j] = c / 2;
            A[j][i] = c / 2;
        }
    }
    return A;
}

Rational bilinear(const Mat& A, const std::array<Rational, 3>& p,
                  const std::array<Rational, 3>& q) {
    Rational r(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r += p[i] * A[i][j] * q[j];
    return r;
}

} // namespace

Parametrization parametrize_conic(const QPoly& C, long height_bound) {
    if (C.family() != Vars::XYZ || C.is_zero() || C.degree() != 2 || !C.is_homogeneous())
        throw error("parametrize_conic: input must be a ternary quadratic form");
    Mat A = quadric_matrix(C);
    if (sgn(det3(A)) == 0) throw error("parametrize_conic: degenerate conic");

    std::array<Rational, 3> P{};
    bool found = false;
    for (long h = 0; h <= height_bound && !found; ++h) {
        for (long a = -h; a <= h && !found; ++a)
            for (long b = -h; b <= h && !found; ++b)
                for (long c = -h; c <= h && !found; ++c) {
                    if (std::max({labs(a), labs(b), labs(c)}) != h) continue;
                    if (a == 0 && b == 0 && c == 0) continue;
                    std::array<Rational, 3> q{Rational(a), Rational(b), Rational(c)};
                    if (sgn(C.evaluate(q)) == 0) {
                        P = q;
                        found = true;
                    }
                }
    }
    if (!found)
        throw no_rational_point_error(
            "parametrize_conic: no rational point of height <= " + std::to_string(height_bound));

    // complete P to a basis with two standard vectors
    std::array<Rational, 3> U{}, V{};
    {
        Mat B(3, std::vector<Rational>(3, Rational(0)));
        for (int i = 0; i < 3; ++i) B[0][i] = P[i];
        int rows = 1;
        int picked[2] = {-1, -1};
        for (int e = 0; e < 3 && rows < 3; ++e) {
            Mat T = B;
            T[rows][e] = 1;
            // test pairwise independence first, full rank once 3 rows exist
            if (rows == 1) {
                bool indep = false;
                for (int i = 0; i < 3 && !indep; ++i)
                    for (int j = i + 1; j < 3 && !indep; ++j)
                        if (sgn(T[0][i] * T[1][j] - T[0][j] * T[1][i]) != 0) indep = true;
                if (!indep) continue;
            } else if (sgn(det3(T)) == 0) {
                continue;
            }
            B = T;
            picked[rows - 1] = e;
            ++rows;
        }
        U[picked[0]] = 1;
        V[picked[1]] = 1;
    }

    // the line through P with direction D = t*U + s*V meets the conic again in
    // C(D)*P - 2*B(P,D)*D
    QPoly t = QPoly::variable(Vars::TS, 0), s = QPoly::variable(Vars::TS, 1);
    QPoly cd = t * t * bilinear(A, U, U) + t * s * (Rational(2) * bilinear(A, U, V)) +
               s * s * bilinear(A, V, V);
    QPoly bpd = t * bilinear(A, P, U) + s * bilinear(A, P, V);
    std::vector<QPoly> img(3);
    for (int i = 0; i < 3; ++i)
        img[i] = cd * P[i] - bpd * (Rational(2) * U[i]) * t - bpd * (Rational(2) * V[i]) * s;

    QPoly content = img[0];
    for (int i = 1; i < 3; ++i)
        if (!img[i].is_zero()) content = content.is_zero() ? img[i] : gcd_poly(content, img[i]);
    if (!content.is_constant())
        for (auto& p : img) p = *divide_exact(p, content);

    Parametrization phi(img[0], img[1], img[2]);
    if (!compose(C, phi).is_zero()) throw error("parametrize_conic: internal composition check failed");
    return phi;
}

QPoly pullback_on_curve(const QPoly& F, const Parametrization& phi) {
    return compose(F, phi);
}

SplitResult split_test(const QPoly& F1, const Parametrization& phi) {
    QPoly pb = compose(F1, phi);
    if (pb.is_zero()) throw error("split_test: the parametrized curve is a component of F1");

    SplitResult res;
    res.splits = true;
    for (auto& [f, m] : squarefree_q(pb))
        if (m % 2 != 0) res.splits = false;

    if (res.splits) {
        QPoly w = QPoly::constant(Vars::TS, Rational(1));
        for (auto& [f, m] : squarefree_q(pb)) w = w * f.pow(m / 2);
        w = normalize(w);
        QPoly c = *divide_exact(pb, w * w);
        res.square_root = w;
        res.constant = c.constant_value();
    } else {
        res.constant = 0;
        res.square_root = QPoly(Vars::TS);
        for (auto& [f, m] : factor_bounded(pb, std::max(1, pb.degree())).factors)
            if (m % 2 != 0) res.odd_orders.emplace_back(f, m);
    }
    return res;
}

namespace {

// all monomials of total degree d, in grlex order (leading first)
std::vector<Expo> monomials_of_degree(int d) {
    std::vector<Expo> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back(Expo{i, j, d - i - j});
    return out;
}

QPoly from_coeffs(const std::vector<Expo>& mons, const std::vector<Rational>& v, size_t off) {
    QPoly p(Vars::XYZ);
    for (size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], v[off + i]);
    return p;
}

} // namespace

IdentityWitness find_identity(const QPoly& F1, const QPoly& F2, const Parametrization& phi,
                              int dmax) {
    if (F1.is_zero() || F2.is_zero()) throw error("find_identity: zero input form");
    if (F1.degree() % 2 != 0) throw error("find_identity: deg F1 must be even");
    if (dmax < 0) dmax = F2.degree();

    SplitResult sp = split_test(F1, phi);
    if (!sp.splits)
        throw no_witness_error("find_identity: the preimage does not split along phi");
    Rational root;
    if (!rational_sqrt(sp.constant, root))
        throw non_rational_square_error(
            "find_identity: splitting constant " + to_string(sp.constant) +
                " is not a rational square; a witness exists only over Q(sqrt(" +
                to_string(sp.constant) + "))",
            sp.constant);
    QPoly w = sp.square_root * root; // F1 . phi = w^2

    int e = F1.degree() / 2;
    for (int m = 0; m <= dmax; ++m) {
        auto mons1 = monomials_of_degree(m + e);
        auto mons2 = monomials_of_degree(m);
        size_t n1 = mons1.size(), n2 = mons2.size();

        // coefficient matrix of G1.phi - (G2.phi)*w over the (t,s)-monomials
        int rowdeg = (m + e) * phi.degree();
        Mat M(rowdeg + 1, std::vector<Rational>(n1 + n2, Rational(0)));
        auto imgs = phi.images();
        for (size_t c = 0; c < n1 + n2; ++c) {
            bool first = c < n1;
            const Expo& ex = first ? mons1[c] : mons2[c - n1];
            QPoly mono(Vars::TS, Rational(1));
            for (int v = 0; v < 3; ++v)
                if (ex[v] > 0) mono = mono * imgs[v].pow(ex[v]);
            if (!first) mono = -(mono * w);
            for (auto& [te, tc] : mono.terms()) M[te[1]][c] = tc;
        }

        auto basis = nullspace(M, n1 + n2);
        std::vector<std::pair<QPoly, QPoly>> cands;
        for (auto& v : basis) {
            QPoly G1 = from_coeffs(mons1, v, 0);
            QPoly G2 = from_coeffs(mons2, v, n1);
            if (G1.is_zero() && G2.is_zero()) continue;
            // make the pair primitive and canonically scaled
            if (!G1.is_zero() && !G2.is_zero()) {
                QPoly g = gcd(G1, G2);
                if (!g.is_constant()) {
                    G1 = *divide_exact(G1, g);
                    G2 = *divide_exact(G2, g);
                }
            }
            Rational scale = G1.is_zero() ? unit_scale(G2) : unit_scale(G1);
            G1 = G1 / scale;
            G2 = G2 / scale;
            cands.emplace_back(G1, G2);
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            int c = QPoly::compare(a.first, b.first);
            if (c != 0) return c < 0;
            return QPoly::compare(a.second, b.second) < 0;
        });
        for (auto& [G1, G2] : cands) {
            QPoly R = G1 * G1 - G2 * G2 * F1;
            if (R.is_zero()) continue;
            try {
                auto [H, k] = verify_identity(F1, F2, G1, G2);
                IdentityWitness wit;
                wit.G1 = G1;
                wit.G2 = G2;
                wit.H = H;
                wit.k = k;
                wit.verified = true;
                wit.no_cancellation = no_cancellation_check(G1, G2, F1);
                return wit;
            } catch (const not_divisible_error&) {
                continue;
            }
        }
    }
    throw no_witness_error("find_identity: no witness with deg G2 <= " + std::to_string(dmax));
}

std::pair<QPoly, int> verify_identity(const QPoly& F1, const QPoly& F2, const QPoly& G1,
                                      const QPoly& G2) {
    if (F2.is_zero()) throw error("verify_identity: F2 must be nonzero");
    QPoly R = G1 * G1 - G2 * G2 * F1;
    if (R.is_zero())
        throw not_divisible_error("verify_identity: G1^2 - G2^2*F1 is identically zero", R);
    int k = kDegreeCap + 1;
    for (auto& [e, c] : R.terms()) k = std::min(k, e[2]);
    QPoly Rk = *divide_exact(R, QPoly::variable(Vars::XYZ, 2, k));
    auto H = divide_exact(Rk, F2);
    if (!H)
        throw not_divisible_error("verify_identity: F2 does not divide G1^2 - G2^2*F1",
                                  rem_single(Rk, F2));
    return {*H, k};
}

bool no_cancellation_check(const QPoly& G1, const QPoly& G2, const QPoly& F1) {
    if (G1.is_zero() && G2.is_zero())
        throw error("no_cancellation_check: G1 and G2 must not both be zero");
    QPoly num = (G1 * G1 + G2 * G2 * F1) * Rational(2);
    QPoly den = G1 * G1 - G2 * G2 * F1;
    if (num.is_zero() && den.is_zero()) return false;
    return gcd(num, den).is_constant();
}

} // namespace pcl
