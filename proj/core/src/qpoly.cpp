#include "pcl/qpoly.hpp"

#include <sstream>

#include "pcl/algebraic.hpp"

namespace pcl {

QPoly normalize(const QPoly& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.leading_coeff()) < 0) scale = -scale;
    return p * scale;
}

Rational unit_scale(const QPoly& p) {
    if (p.is_zero()) return Rational(1);
    QPoly n = normalize(p);
    return p.leading_coeff() / n.leading_coeff();
}

void check_degree_cap(const QPoly& p) {
    if (p.degree() > kDegreeCap)
        throw degree_cap_error("degree " + std::to_string(p.degree()) +
                               " exceeds the cap of " + std::to_string(kDegreeCap));
}

QPoly gcd(const QPoly& p, const QPoly& q) {
    if (p.is_zero() && q.is_zero()) throw error("gcd: both inputs are zero");
    return normalize(gcd_poly(p, q));
}

QPoly resultant_q(const QPoly& p, const QPoly& q, int var) {
    if (p.is_zero() || q.is_zero()) throw error("resultant: zero input");
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp <= 0 && dq <= 0)
        throw error("resultant: inputs must have positive degree in the eliminated variable");
    // degree-0 convention: Res(f, g) = g^deg(f) when g is free of the variable
    if (dq == 0) {
        QPoly r = QPoly::constant(p.family(), Rational(1));
        for (int i = 0; i < dp; ++i) r = r * q;
        return r;
    }
    if (dp == 0) {
        QPoly r = QPoly::constant(p.family(), Rational(1));
        for (int i = 0; i < dq; ++i) r = r * p;
        return r;
    }
    return resultant(p, q, var);
}

std::vector<std::pair<QPoly, int>> squarefree_q(const QPoly& p) {
    auto dec = squarefree_decomposition(p);
    std::vector<std::pair<QPoly, int>> out;
    out.reserve(dec.size());
    for (auto& [f, m] : dec) out.emplace_back(normalize(f), m);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return QPoly::compare(a.first, b.first) < 0;
    });
    return out;
}

QPoly homogenize(const QPoly& p, int v, int deg) {
    QPoly r(p.family());
    for (auto& [e, c] : p.terms()) {
        Expo e2 = e;
        int t = expo_total(e);
        if (t > deg) throw error("homogenize: degree too small");
        e2[v] += deg - t;
        r.add_term(e2, c);
    }
    return r;
}

// --- LinearChange ---

LinearChange::LinearChange(Mat m) : m_(std::move(m)) {
    if (m_.size() != 3 || m_[0].size() != 3) throw error("LinearChange: need a 3x3 matrix");
    if (sgn(det3(m_)) == 0) throw error("LinearChange: singular matrix");
}

LinearChange LinearChange::identity() {
    Mat m(3, std::vector<Rational>(3, Rational(0)));
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
    return LinearChange(m);
}

LinearChange LinearChange::random_frame(SeedRng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat m(3, std::vector<Rational>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = Rational(rng.small(3));
        if (sgn(det3(m)) != 0) return LinearChange(m);
    }
    throw error("random_frame: failed to draw an invertible matrix");
}

LinearChange LinearChange::from_rows(const QPoly& l1, const QPoly& l2, const QPoly& l3) {
    Mat m(3, std::vector<Rational>(3, Rational(0)));
    const QPoly* ls[3] = {&l1, &l2, &l3};
    for (int i = 0; i < 3; ++i) {
        if (ls[i]->is_zero() || ls[i]->degree() != 1 || !ls[i]->is_homogeneous())
            throw error("LinearChange: rows must be nonzero linear forms");
        for (int j = 0; j < 3; ++j) {
            Expo e{0, 0, 0};
            e[j] = 1;
            auto it = ls[i]->terms().find(e);
            if (it != ls[i]->terms().end()) m[i][j] = it->second;
        }
    }
    return LinearChange(std::move(m)); // ctor rejects dependent rows
}

LinearChange LinearChange::inverse() const { return LinearChange(inverse3(m_)); }

std::vector<QPoly> LinearChange::images() const {
    std::vector<QPoly> img;
    for (int i = 0; i < 3; ++i) {
        QPoly l(Vars::XYZ);
        for (int j = 0; j < 3; ++j)
            l = l + QPoly::variable(Vars::XYZ, j) * m_[i][j];
        img.push_back(l);
    }
    return img;
}

QPoly change_coordinates(const QPoly& p, const LinearChange& M) {
    QPoly r = p.substituted_same(M.images());
    check_degree_cap(r);
    return r;
}

// --- printing ---

static void print_coeff_and_monomial(std::ostream& os, const Rational& c, const Expo& e, Vars fam,
                                     bool first) {
    Rational a = c;
    if (first) {
        if (sgn(a) < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (sgn(a) < 0 ? " - " : " + ");
        if (sgn(a) < 0) a = -a;
    }
    bool has_vars = expo_total(e) > 0;
    if (!has_vars || a != 1) {
        os << a.get_str();
        if (has_vars) os << "*";
    }
    bool started = false;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (started) os << "*";
        os << var_name(fam, v);
        if (e[v] > 1) os << "^" << e[v];
        started = true;
    }
}

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        print_coeff_and_monomial(os, c, e, p.family(), first);
        first = false;
    }
    return os.str();
}

// --- AlgNum out-of-line pieces ---

void AlgNum::reduce(const std::shared_ptr<const NumberField>& f, std::vector<Rational>& r) {
    if (!f) {
        if (r.size() > 1) throw error("AlgNum: generator used without a field");
        return;
    }
    int d = f->degree();
    while (static_cast<int>(r.size()) > d) {
        Rational top = r.back();
        r.pop_back();
        if (sgn(top) == 0) continue;
        size_t base = r.size() - d;
        for (int i = 0; i < d; ++i) r[base + i] -= top * f->minpoly[i];
    }
}

AlgNum AlgNum::inverse() const {
    if (is_zero_val()) throw error("AlgNum: division by zero");
    if (!fld_ || is_rational()) {
        AlgNum r(Rational(1) / rational_value());
        r.fld_ = fld_;
        return r;
    }
    // extended Euclid of (c_, minpoly) over Q[t]
    std::vector<Rational> r0 = fld_->minpoly, r1 = c_;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    auto deg = [](const std::vector<Rational>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (sgn(v[i]) != 0) return i;
        return -1;
    };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rational> q(std::max<size_t>(1, r0.size()), Rational(0));
        std::vector<Rational> rem = r0;
        int d1 = deg(r1);
        Rational lc1 = r1[d1];
        for (int d0 = deg(rem); d0 >= d1; d0 = deg(rem)) {
            Rational f = rem[d0] / lc1;
            q[d0 - d1] += f;
            for (int i = 0; i <= d1; ++i) rem[d0 - d1 + i] -= f * r1[i];
        }
        // s_{k+1} = s_{k-1} - q*s_k
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    int d = deg(r1);
    if (d != 0) throw error("AlgNum: zero divisor (minimal polynomial not irreducible?)");
    Rational inv = Rational(1) / r1[0];
    for (auto& q : s1) q *= inv;
    return AlgNum(fld_, std::move(s1));
}

} // namespace pcl
