#ifndef PCL_MPOLY_HPP
#define PCL_MPOLY_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pcl/rational.hpp"

namespace pcl {

// Variable families. Projective forms live in {x,y,z}, affine polynomials in
// {u,v}, parameter (binary) forms in {t,s}. Mixing families is rejected at
// parse time; internally polynomials of the same family combine freely.
enum class Vars { XYZ, UV, TS };

inline int var_count(Vars f) { return f == Vars::XYZ ? 3 : 2; }
inline const char* var_name(Vars f, int i) {
    static const char* n[3][3] = {{"x", "y", "z"}, {"u", "v", ""}, {"t", "s", ""}};
    return n[static_cast<int>(f)][i];
}

using Expo = std::array<int, 3>;

inline int expo_total(const Expo& e) { return e[0] + e[1] + e[2]; }

// Graded lexicographic order, first variable highest; "greater first" so that
// map::begin() is the leading term.
struct GrlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = expo_total(a), db = expo_total(b);
        if (da != db) return da > db;
        return a > b;
    }
};

template <class K>
class MPoly {
  public:
    using TermMap = std::map<Expo, K, GrlexGreater>;

    MPoly() : fam_(Vars::XYZ) {}
    explicit MPoly(Vars f) : fam_(f) {}
    MPoly(Vars f, const K& c) : fam_(f) {
        if (!(c == K())) t_[{0, 0, 0}] = c;
    }

    static MPoly constant(Vars f, const K& c) { return MPoly(f, c); }
    static MPoly variable(Vars f, int i, int e = 1) {
        MPoly p(f);
        Expo x{0, 0, 0};
        x[i] = e;
        p.t_[x] = K(1);
        return p;
    }
    static MPoly monomial(Vars f, const Expo& e, const K& c) {
        MPoly p(f);
        if (!(c == K())) p.t_[e] = c;
        return p;
    }

    Vars family() const { return fam_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{0, 0, 0}); }
    K constant_value() const { return t_.empty() ? K() : t_.begin()->second; }

    int degree() const {
        return t_.empty() ? -1 : expo_total(t_.begin()->first);
    }
    int degree_in(int v) const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e[v]);
        return t_.empty() ? -1 : d;
    }
    bool has_var(int v) const {
        for (auto& [e, c] : t_)
            if (e[v] > 0) return true;
        return false;
    }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        int d = degree();
        for (auto& [e, c] : t_)
            if (expo_total(e) != d) return false;
        return true;
    }

    const K& leading_coeff() const { return t_.begin()->second; }
    const Expo& leading_expo() const { return t_.begin()->first; }

    void add_term(const Expo& e, const K& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!(c == K())) t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second == K()) t_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(fam_);
        for (auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r(fam_);
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_)
                r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return r;
    }
    MPoly operator*(const K& k) const {
        MPoly r(fam_);
        if (k == K()) return r;
        for (auto& [e, c] : t_) r.t_[e] = c * k;
        return r;
    }
    MPoly operator/(const K& k) const {
        MPoly r(fam_);
        for (auto& [e, c] : t_) r.t_[e] = c / k;
        return r;
    }
    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(t_ == o.t_); }

    MPoly pow(unsigned n) const {
        MPoly r = constant(fam_, K(1));
        MPoly b = *this;
        while (n) {
            if (n & 1u) r = r * b;
            b = b * b;
            n >>= 1u;
        }
        return r;
    }

    MPoly derivative(int v) const {
        MPoly r(fam_);
        for (auto& [e, c] : t_)
            if (e[v] > 0) {
                Expo e2 = e;
                e2[v] -= 1;
                r.add_term(e2, c * K(e[v]));
            }
        return r;
    }

    // Coefficient of var^k, a polynomial in the remaining variables.
    MPoly coeff_of(int v, int k) const {
        MPoly r(fam_);
        for (auto& [e, c] : t_)
            if (e[v] == k) {
                Expo e2 = e;
                e2[v] = 0;
                r.t_[e2] = c;
            }
        return r;
    }
    MPoly lead_coeff_in(int v) const { return coeff_of(v, degree_in(v)); }

    // Substitute each variable by the given polynomial (all in one family).
    template <class K2>
    MPoly<K2> substituted(const std::vector<MPoly<K2>>& img) const {
        MPoly<K2> r(img.empty() ? Vars::XYZ : img[0].family());
        for (auto& [e, c] : t_) {
            MPoly<K2> m = MPoly<K2>::constant(r.family(), K2(1)) * K2(c);
            for (int v = 0; v < 3; ++v)
                if (e[v] > 0) m = m * img[v].pow(e[v]);
            r = r + m;
        }
        return r;
    }
    MPoly substituted_same(const std::vector<MPoly>& img) const {
        MPoly r(img.empty() ? fam_ : img[0].family());
        for (auto& [e, c] : t_) {
            MPoly m = MPoly::constant(r.family(), c);
            for (int v = 0; v < 3; ++v)
                if (e[v] > 0) m = m * img[v].pow(e[v]);
            r = r + m;
        }
        return r;
    }

    K evaluate(const std::array<K, 3>& pt) const {
        K r{};
        for (auto& [e, c] : t_) {
            K m = c;
            for (int v = 0; v < 3; ++v)
                for (int i = 0; i < e[v]; ++i) m = m * pt[v];
            r = r + m;
        }
        return r;
    }

    // Partial evaluation: fix variable v to value a.
    MPoly evaluated_at(int v, const K& a) const {
        MPoly r(fam_);
        for (auto& [e, c] : t_) {
            K m = c;
            for (int i = 0; i < e[v]; ++i) m = m * a;
            Expo e2 = e;
            e2[v] = 0;
            r.add_term(e2, m);
        }
        return r;
    }

    // Coefficient-wise map to another field (e.g. Q -> number field).
    template <class K2, class Fn>
    MPoly<K2> mapped(Fn fn) const {
        MPoly<K2> r(fam_);
        for (auto& [e, c] : t_) r.add_term(e, fn(c));
        return r;
    }

    // Deterministic total order on polynomials (term-sequence lexicographic);
    // used for tie-breaking in factor lists and witness selection.
    static int compare(const MPoly& a, const MPoly& b) {
        auto ia = a.t_.begin(), ib = b.t_.begin();
        GrlexGreater gt;
        for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return gt(ia->first, ib->first) ? 1 : -1;
        }
        if (ia != a.t_.end()) return 1;
        if (ib != b.t_.end()) return -1;
        return 0;
    }

  private:
    Vars fam_;
    TermMap t_;
};

// ---------------------------------------------------------------------------
// Division, pseudo-remainder, gcd, resultant, square-free decomposition.
// All generic over the coefficient field K.
// ---------------------------------------------------------------------------

template <class K>
std::optional<MPoly<K>> divide_exact(const MPoly<K>& p, const MPoly<K>& q) {
    if (q.is_zero()) return std::nullopt;
    MPoly<K> r = p, quot(p.family());
    const Expo& lq = q.is_zero() ? Expo{0, 0, 0} : q.leading_expo();
    while (!r.is_zero()) {
        const Expo& lr = r.leading_expo();
        Expo d;
        for (int i = 0; i < 3; ++i) {
            d[i] = lr[i] - lq[i];
            if (d[i] < 0) return std::nullopt;
        }
        K c = r.leading_coeff() / q.leading_coeff();
        MPoly<K> m = MPoly<K>::monomial(p.family(), d, c);
        quot = quot + m;
        r = r - m * q;
    }
    return quot;
}

// Remainder of division by a single divisor g (unique for a fixed term order).
template <class K>
MPoly<K> rem_single(const MPoly<K>& p, const MPoly<K>& g) {
    MPoly<K> r = p, rem(p.family());
    const Expo& lg = g.leading_expo();
    while (!r.is_zero()) {
        const Expo& lr = r.leading_expo();
        bool divisible = lr[0] >= lg[0] && lr[1] >= lg[1] && lr[2] >= lg[2];
        if (divisible) {
            Expo d{lr[0] - lg[0], lr[1] - lg[1], lr[2] - lg[2]};
            MPoly<K> m = MPoly<K>::monomial(p.family(), d, r.leading_coeff() / g.leading_coeff());
            r = r - m * g;
        } else {
            rem.add_term(lr, r.leading_coeff());
            MPoly<K> m = MPoly<K>::monomial(p.family(), lr, r.leading_coeff());
            r = r - m;
        }
    }
    return rem;
}

template <class K>
bool divides(const MPoly<K>& g, const MPoly<K>& p) {
    if (g.is_zero()) return p.is_zero();
    return rem_single(p, g).is_zero();
}

// Pseudo-remainder in variable v: lc(B)^(degA-degB+1) * A mod B.
template <class K>
MPoly<K> pseudo_rem(const MPoly<K>& A, const MPoly<K>& B, int v) {
    int db = B.degree_in(v);
    MPoly<K> l = B.lead_coeff_in(v);
    MPoly<K> r = A;
    int e = A.degree_in(v) - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        MPoly<K> t = MPoly<K>::variable(r.family(), v, dr - db) * r.lead_coeff_in(v);
        r = r * l - t * B;
        --e;
    }
    while (e-- > 0) r = r * l;
    return r;
}

template <class K>
MPoly<K> gcd_poly(const MPoly<K>& a, const MPoly<K>& b);

// Content of p with respect to variable v: gcd of the coefficient polynomials.
template <class K>
MPoly<K> content_in(const MPoly<K>& p, int v) {
    MPoly<K> c(p.family());
    for (int k = 0; k <= p.degree_in(v); ++k) {
        MPoly<K> ck = p.coeff_of(v, k);
        if (!ck.is_zero()) c = c.is_zero() ? ck : gcd_poly(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

template <class K>
MPoly<K> monic(const MPoly<K>& p) {
    if (p.is_zero()) return p;
    return p / p.leading_coeff();
}

// GCD by subresultant polynomial remainder sequences with recursive content
// management; works over any coefficient field.
template <class K>
MPoly<K> gcd_poly(const MPoly<K>& a, const MPoly<K>& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return MPoly<K>::constant(a.family(), K(1));
    int v = -1;
    for (int i = 0; i < 3; ++i)
        if (a.has_var(i) && b.has_var(i)) { v = i; break; }
    if (v < 0) return MPoly<K>::constant(a.family(), K(1));

    MPoly<K> ca = content_in(a, v), cb = content_in(b, v);
    MPoly<K> pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
    MPoly<K> c = gcd_poly(ca, cb);

    MPoly<K> A = pa, B = pb;
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    MPoly<K> one = MPoly<K>::constant(a.family(), K(1));
    MPoly<K> g = one, h = one;
    MPoly<K> result(a.family());
    while (true) {
        int delta = A.degree_in(v) - B.degree_in(v);
        MPoly<K> R = pseudo_rem(A, B, v);
        if (R.is_zero()) {
            result = *divide_exact(B, content_in(B, v));
            break;
        }
        if (R.degree_in(v) <= 0) {
            result = one;
            break;
        }
        A = B;
        MPoly<K> div = g * h.pow(delta);
        B = *divide_exact(R, div);
        g = A.lead_coeff_in(v);
        if (delta > 0) h = *divide_exact(g.pow(delta), h.pow(delta - 1));
    }
    return monic(c * result);
}

// Sylvester-matrix resultant in variable v, computed by fraction-free
// Bareiss elimination over the coefficient ring. Formal degrees may be
// passed to keep the matrix shape stable under specialization.
template <class K>
MPoly<K> resultant_formal(const MPoly<K>& p, const MPoly<K>& q, int v, int dp, int dq) {
    Vars fam = p.family();
    if (dp < 0 || dq < 0) return MPoly<K>(fam);
    if (dp == 0 && dq == 0) return MPoly<K>::constant(fam, K(1));
    int n = dp + dq;
    std::vector<std::vector<MPoly<K>>> M(n, std::vector<MPoly<K>>(n, MPoly<K>(fam)));
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j <= dp; ++j) M[i][i + j] = p.coeff_of(v, dp - j);
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j <= dq; ++j) M[dq + i][i + j] = q.coeff_of(v, dq - j);

    int sign = 1;
    MPoly<K> prev = MPoly<K>::constant(fam, K(1));
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k].is_zero()) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M[i][k].is_zero()) { s = i; break; }
            if (s < 0) return MPoly<K>(fam);
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly<K> num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = *divide_exact(num, prev);
            }
            M[i][k] = MPoly<K>(fam);
        }
        prev = M[k][k];
    }
    MPoly<K> det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <class K>
MPoly<K> resultant(const MPoly<K>& p, const MPoly<K>& q, int v) {
    if (p.is_zero() || q.is_zero()) throw error("resultant: zero input");
    return resultant_formal(p, q, v, p.degree_in(v), q.degree_in(v));
}

// gcd(p, dp/dx, dp/dy, dp/dz): the product of f^(e-1) over the irreducible
// factorization of p (characteristic 0).
template <class K>
MPoly<K> gcd_with_partials(const MPoly<K>& p) {
    MPoly<K> g = p;
    for (int v = 0; v < 3; ++v) {
        if (!p.has_var(v)) continue;
        g = gcd_poly(g, p.derivative(v));
        if (g.is_constant()) break;
    }
    return g;
}

template <class K>
bool is_squarefree(const MPoly<K>& p) {
    return gcd_with_partials(p).is_constant();
}

// Musser-style square-free decomposition. Returns pairwise coprime
// square-free factors with their multiplicities (monic over K); the
// remaining unit is p / prod(f_i^{m_i}).
template <class K>
std::vector<std::pair<MPoly<K>, int>> squarefree_decomposition(const MPoly<K>& p) {
    if (p.is_zero()) throw error("squarefree_decomposition: zero input");
    std::vector<std::pair<MPoly<K>, int>> out;
    if (p.is_constant()) return out;
    MPoly<K> G = gcd_with_partials(p);
    MPoly<K> c = monic(*divide_exact(p, G));
    G = monic(G);
    int i = 1;
    while (!c.is_constant()) {
        MPoly<K> d = gcd_poly(G, c);
        MPoly<K> fi = *divide_exact(c, d);
        if (!fi.is_constant()) out.emplace_back(monic(fi), i);
        c = d;
        G = monic(*divide_exact(G, d));
        ++i;
        if (i > 4 * kDegreeCap + 2) throw error("squarefree_decomposition: runaway loop");
    }
    return out;
}

} // namespace pcl

#endif
