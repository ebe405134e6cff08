#include "pcl/unifactor.hpp"

#include <algorithm>

#include "pcl/seedrng.hpp"

namespace pcl {

int uni_degree(const UniQ& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (sgn(f[i]) != 0) return i;
    return -1;
}

static void uni_trim(UniQ& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

UniQ uni_mul(const UniQ& a, const UniQ& b) {
    if (a.empty() || b.empty()) return {};
    UniQ r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

UniQ uni_rem(const UniQ& a, const UniQ& b) {
    UniQ r = a;
    uni_trim(r);
    int db = uni_degree(b);
    if (db < 0) throw error("uni_rem: division by zero");
    while (uni_degree(r) >= db) {
        int dr = uni_degree(r);
        Rational f = r[dr] / b[db];
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
        uni_trim(r);
    }
    return r;
}

UniQ uni_gcd(const UniQ& a, const UniQ& b) {
    UniQ x = a, y = b;
    uni_trim(x);
    uni_trim(y);
    while (!y.empty()) {
        UniQ r = uni_rem(x, y);
        x = y;
        y = r;
    }
    if (!x.empty()) {
        Rational lc = x[uni_degree(x)];
        for (auto& c : x) c /= lc;
    }
    return x;
}

UniQ uni_derivative(const UniQ& f) {
    UniQ r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * Rational(static_cast<long>(i)));
    uni_trim(r);
    return r;
}

bool uni_divide_exact(const UniQ& a, const UniQ& b, UniQ& quot) {
    UniQ r = a;
    uni_trim(r);
    int db = uni_degree(b);
    if (db < 0) return false;
    int da = uni_degree(r);
    if (da < db) return false;
    quot.assign(da - db + 1, Rational(0));
    while (uni_degree(r) >= db) {
        int dr = uni_degree(r);
        Rational f = r[dr] / b[db];
        quot[dr - db] = f;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
        uni_trim(r);
    }
    return r.empty();
}

Rational uni_eval(const UniQ& f, const Rational& x) {
    Rational r(0);
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = r * x + f[i];
    return r;
}

UniQ to_dense(const QPoly& p, int var) {
    for (int v = 0; v < 3; ++v)
        if (v != var && p.has_var(v)) throw error("to_dense: polynomial is not univariate");
    UniQ f(std::max(0, p.degree_in(var)) + 1, Rational(0));
    for (auto& [e, c] : p.terms()) f[e[var]] = c;
    uni_trim(f);
    return f;
}

QPoly from_dense(const UniQ& f, Vars fam, int var) {
    QPoly p(fam);
    for (size_t i = 0; i < f.size(); ++i) {
        Expo e{0, 0, 0};
        e[var] = static_cast<int>(i);
        p.add_term(e, f[i]);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Factorization over Z via a single large prime (Cantor-Zassenhaus) and
// subset recombination. The prime is chosen above twice the Landau-Mignotte
// bound so that true factors are recognized by symmetric lifting alone.
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Integer>; // dense, low to high

int zdeg(const ZPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (sgn(f[i]) != 0) return i;
    return -1;
}
void ztrim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

struct ModCtx {
    Integer p;

    Integer norm(const Integer& a) const {
        Integer r = a % p;
        if (sgn(r) < 0) r += p;
        return r;
    }
    ZPoly reduce(const ZPoly& f) const {
        ZPoly r(f.size());
        for (size_t i = 0; i < f.size(); ++i) r[i] = norm(f[i]);
        ztrim(r);
        return r;
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZPoly r(a.size() + b.size() - 1, Integer(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        for (auto& c : r) c = norm(c);
        ztrim(r);
        return r;
    }
    Integer inv(const Integer& a) const {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw error("mod inverse failed");
        return r;
    }
    ZPoly rem(const ZPoly& a, const ZPoly& b) const {
        ZPoly r = a;
        ztrim(r);
        int db = zdeg(b);
        Integer ib = inv(b[db]);
        while (zdeg(r) >= db) {
            int dr = zdeg(r);
            Integer f = norm(r[dr] * ib);
            for (int i = 0; i <= db; ++i) r[dr - db + i] = norm(r[dr - db + i] - f * b[i]);
            ztrim(r);
        }
        return r;
    }
    ZPoly monic(const ZPoly& f) const {
        ZPoly r = f;
        ztrim(r);
        if (r.empty()) return r;
        Integer iv = inv(r.back());
        for (auto& c : r) c = norm(c * iv);
        return r;
    }
    ZPoly gcd(const ZPoly& a, const ZPoly& b) const {
        ZPoly x = reduce(a), y = reduce(b);
        while (!y.empty()) {
            ZPoly r = rem(x, y);
            x = y;
            y = r;
        }
        return monic(x);
    }
    ZPoly powmod(const ZPoly& base, const Integer& e, const ZPoly& mod) const {
        ZPoly r{Integer(1)};
        ZPoly b = rem(base, mod);
        Integer n = e;
        while (sgn(n) > 0) {
            if (mpz_odd_p(n.get_mpz_t())) r = rem(mul(r, b), mod);
            b = rem(mul(b, b), mod);
            n >>= 1;
        }
        return r;
    }
    ZPoly sub(const ZPoly& a, const ZPoly& b) const {
        ZPoly r = a;
        if (r.size() < b.size()) r.resize(b.size(), Integer(0));
        for (size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
        ztrim(r);
        return r;
    }
};

void edf(const ModCtx& m, const ZPoly& v, int d, SeedRng& rng, std::vector<ZPoly>& out) {
    int k = zdeg(v) / d;
    if (k == 1) {
        out.push_back(m.monic(v));
        return;
    }
    Integer exp;
    mpz_pow_ui(exp.get_mpz_t(), m.p.get_mpz_t(), d);
    exp = (exp - 1) / 2;
    while (true) {
        ZPoly a(zdeg(v), Integer(0));
        for (auto& c : a) {
            Integer r;
            // random residue from the seeded generator (few limbs are enough)
            r = Integer(static_cast<unsigned long>(rng.next() >> 1));
            c = m.norm(r);
        }
        ztrim(a);
        if (a.empty() || zdeg(a) < 1) continue;
        ZPoly g = m.gcd(a, v);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(v)) {
            edf(m, g, d, rng, out);
            ZPoly co{Integer(1)};
            // v / g
            ZPoly q, r = m.reduce(v);
            int dg = zdeg(g);
            q.assign(zdeg(r) - dg + 1, Integer(0));
            Integer ig = m.inv(g[dg]);
            while (zdeg(r) >= dg) {
                int dr = zdeg(r);
                Integer f = m.norm(r[dr] * ig);
                q[dr - dg] = f;
                for (int i = 0; i <= dg; ++i) r[dr - dg + i] = m.norm(r[dr - dg + i] - f * g[i]);
                ztrim(r);
            }
            edf(m, q, d, rng, out);
            return;
        }
        ZPoly b = m.powmod(a, exp, v);
        b = m.sub(b, ZPoly{Integer(1)});
        g = m.gcd(b, v);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(v)) {
            edf(m, g, d, rng, out);
            ZPoly q, r = m.reduce(v);
            int dg = zdeg(g);
            q.assign(zdeg(r) - dg + 1, Integer(0));
            Integer ig = m.inv(g[dg]);
            while (zdeg(r) >= dg) {
                int dr = zdeg(r);
                Integer f = m.norm(r[dr] * ig);
                q[dr - dg] = f;
                for (int i = 0; i <= dg; ++i) r[dr - dg + i] = m.norm(r[dr - dg + i] - f * g[i]);
                ztrim(r);
            }
            edf(m, q, d, rng, out);
            return;
        }
    }
}

std::vector<ZPoly> factor_mod_p(const ModCtx& m, const ZPoly& f, SeedRng& rng) {
    std::vector<ZPoly> out;
    ZPoly v = m.monic(f);
    ZPoly x{Integer(0), Integer(1)};
    ZPoly w = m.rem(x, v);
    int d = 0;
    while (zdeg(v) > 0) {
        ++d;
        if (2 * d > zdeg(v)) {
            out.push_back(v);
            break;
        }
        w = m.powmod(w, m.p, v);
        ZPoly g = m.gcd(m.sub(w, x), v);
        if (zdeg(g) > 0) {
            edf(m, g, d, rng, out);
            // v /= g
            ZPoly q, r = v;
            int dg = zdeg(g);
            q.assign(zdeg(r) - dg + 1, Integer(0));
            Integer ig = m.inv(g[dg]);
            while (zdeg(r) >= dg) {
                int dr = zdeg(r);
                Integer fq = m.norm(r[dr] * ig);
                q[dr - dg] = fq;
                for (int i = 0; i <= dg; ++i) r[dr - dg + i] = m.norm(r[dr - dg + i] - fq * g[i]);
                ztrim(r);
            }
            v = q;
            w = m.rem(w, v);
        }
    }
    return out;
}

// primitive integer form, positive leading coefficient
ZPoly to_primitive_z(const UniQ& f, Rational* unit = nullptr) {
    Integer den = 1;
    for (auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Rational q = f[i] * Rational(den);
        z[i] = q.get_num();
    }
    ztrim(z);
    Integer g = 0;
    for (auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(g) == 0) return {};
    if (sgn(z.back()) < 0) g = -g;
    for (auto& c : z) c /= g;
    if (unit) *unit = Rational(g, den);
    return z;
}

UniQ from_z(const ZPoly& z) {
    UniQ f(z.size());
    for (size_t i = 0; i < z.size(); ++i) f[i] = Rational(z[i]);
    return f;
}

// factor a primitive squarefree integer polynomial of degree >= 1
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    int n = zdeg(f);
    if (n == 1) return {f};

    // Landau-Mignotte style bound on factor coefficients
    Integer height = 0;
    for (auto& c : f) {
        Integer a = abs(c);
        if (a > height) height = a;
    }
    Integer bound = height * abs(f.back()) * (n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);

    Integer p = 2 * bound + 3;
    ModCtx m;
    UniQ fq = from_z(f);
    UniQ fder = uni_derivative(fq);
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (sgn(Integer(f.back() % p)) == 0) continue;
        m.p = p;
        ZPoly g = m.gcd(m.reduce(f), to_primitive_z(fder));
        if (zdeg(g) == 0) break;
    }

    SeedRng rng(0xC0FFEE);
    std::vector<ZPoly> modular = factor_mod_p(m, m.reduce(f), rng);
    std::sort(modular.begin(), modular.end());

    // Zassenhaus subset recombination
    std::vector<ZPoly> result;
    ZPoly rem_f = f;
    std::vector<ZPoly> avail = modular;
    auto lift_sym = [&](const ZPoly& g) {
        ZPoly r = g;
        Integer half = m.p / 2;
        for (auto& c : r)
            if (c > half) c -= m.p;
        return r;
    };
    int k = 1;
    while (2 * k <= static_cast<int>(avail.size())) {
        bool found = false;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            ZPoly prod{m.norm(rem_f.back())};
            for (int i : idx) prod = m.mul(prod, avail[i]);
            ZPoly cand = lift_sym(prod);
            Rational dummy;
            ZPoly cand_pp = to_primitive_z(from_z(cand), &dummy);
            UniQ quot;
            if (!cand_pp.empty() && uni_divide_exact(from_z(rem_f), from_z(cand_pp), quot)) {
                result.push_back(cand_pp);
                rem_f = to_primitive_z(quot);
                std::vector<ZPoly> keep;
                for (int i = 0; i < static_cast<int>(avail.size()); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(avail[i]);
                avail = keep;
                found = true;
                break;
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[i] == static_cast<int>(avail.size()) - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++k;
    }
    if (zdeg(rem_f) > 0) result.push_back(rem_f);
    return result;
}

} // namespace

std::vector<UniFactor> factor_univariate(const UniQ& f_in) {
    UniQ f = f_in;
    uni_trim(f);
    if (f.empty()) throw error("factor_univariate: zero input");
    std::vector<UniFactor> out;
    if (uni_degree(f) == 0) return out;

    // squarefree decomposition (Musser)
    UniQ G = uni_gcd(f, uni_derivative(f));
    UniQ c;
    uni_divide_exact(f, G, c);
    int mult = 1;
    while (uni_degree(c) > 0) {
        UniQ d = uni_gcd(G, c);
        UniQ part;
        uni_divide_exact(c, d, part);
        if (uni_degree(part) > 0) {
            ZPoly z = to_primitive_z(part);
            for (auto& irr : factor_squarefree_z(z))
                out.push_back(UniFactor{from_z(irr), mult});
        }
        c = d;
        UniQ g2;
        uni_divide_exact(G, d, g2);
        G = g2;
        ++mult;
    }
    std::sort(out.begin(), out.end(), [](const UniFactor& a, const UniFactor& b) {
        int da = uni_degree(a.poly), db = uni_degree(b.poly);
        if (da != db) return da < db;
        for (int i = da; i >= 0; --i)
            if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
        return a.mult < b.mult;
    });
    return out;
}

std::vector<Rational> rational_roots(const UniQ& f) {
    std::vector<Rational> roots;
    for (auto& fac : factor_univariate(f)) {
        if (uni_degree(fac.poly) == 1) {
            roots.push_back(-fac.poly[0] / fac.poly[1]);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool is_irreducible_univariate(const UniQ& f) {
    if (uni_degree(f) < 1) return false;
    auto fs = factor_univariate(f);
    return fs.size() == 1 && fs[0].mult == 1;
}

} // namespace pcl
