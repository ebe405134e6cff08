#include "pcl/factor.hpp"

#include <algorithm>

#include "pcl/unifactor.hpp"

namespace pcl {

namespace {

UniQ lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    size_t n = xs.size();
    UniQ acc;
    for (size_t i = 0; i < n; ++i) {
        UniQ basis{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = uni_mul(basis, UniQ{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        Rational scale = ys[i] / denom;
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rational(0));
        for (size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
    }
    while (!acc.empty() && sgn(acc.back()) == 0) acc.pop_back();
    return acc;
}

UniQ uni_monic(const UniQ& f) {
    UniQ r = f;
    int d = uni_degree(r);
    if (d < 0) return r;
    Rational lc = r[d];
    r.resize(d + 1);
    for (auto& c : r) c /= lc;
    return r;
}

// all monic products of distinct irreducible factors with degree sum k
void subset_products(const std::vector<UniQ>& irr, size_t from, int k, const UniQ& cur,
                     std::vector<UniQ>& out, size_t cap, bool& capped) {
    if (k == 0) {
        if (out.size() >= cap) {
            capped = true;
            return;
        }
        out.push_back(cur);
        return;
    }
    if (from >= irr.size() || capped) return;
    int d = uni_degree(irr[from]);
    if (d <= k) subset_products(irr, from + 1, k - d, uni_mul(cur, irr[from]), out, cap, capped);
    subset_products(irr, from + 1, k, cur, out, cap, capped);
}

struct AffineFactorResult {
    std::vector<QPoly> factors; // normalized irreducible
    QPoly leftover;             // normalized; may be constant 1
    bool leftover_irreducible = false;
};

std::vector<QPoly> factor_one_var(const QPoly& s, int v) {
    std::vector<QPoly> out;
    for (auto& fac : factor_univariate(to_dense(s, v)))
        for (int i = 0; i < fac.mult; ++i) // squarefree input: mult is 1
            out.push_back(normalize(from_dense(fac.poly, s.family(), v)));
    return out;
}

// squarefree affine polynomial in exactly the two variables va < vb
AffineFactorResult factor_two_vars(const QPoly& s, int va, int vb, int dmax) {
    Vars fam = s.family();
    int d = s.degree();

    // shear x -> x + sigma*y so the leading coefficient in va is constant
    QPoly top(fam);
    for (auto& [e, c] : s.terms())
        if (e[0] + e[1] + e[2] == d) top.add_term(e, c);
    long sigma = 0;
    for (long t = 0;; t = (t > 0 ? -t : -t + 1)) {
        std::array<Rational, 3> pt{Rational(1), Rational(1), Rational(1)};
        pt[va] = Rational(1);
        pt[vb] = Rational(t);
        if (sgn(top.evaluate(pt)) != 0) {
            sigma = t;
            break;
        }
    }
    std::vector<QPoly> img;
    for (int i = 0; i < 3; ++i) img.push_back(QPoly::variable(fam, i));
    img[va] = QPoly::variable(fam, va) + QPoly::constant(fam, Rational(sigma)) * QPoly::variable(fam, vb);
    QPoly fs = normalize(s.substituted_same(img));

    std::vector<QPoly> sheared_factors;
    bool caps_hit = false;
    int k = 1;
    while (!caps_hit && 2 * k <= fs.degree() && k <= dmax) {
        int n = fs.degree();
        // k+1 evaluation points keeping full degree and square-freeness
        std::vector<Rational> pts;
        std::vector<std::vector<UniQ>> irr_at(static_cast<size_t>(k) + 1);
        for (long t = 0; static_cast<int>(pts.size()) <= k; t = (t > 0 ? -t : -t + 1)) {
            if (t > 120) {
                caps_hit = true;
                break;
            }
            UniQ f = to_dense(fs.evaluated_at(vb, Rational(t)), va);
            if (uni_degree(f) != n) continue;
            if (uni_degree(uni_gcd(f, uni_derivative(f))) != 0) continue;
            std::vector<UniQ> irr;
            for (auto& fac : factor_univariate(f)) irr.push_back(uni_monic(fac.poly));
            irr_at[pts.size()] = std::move(irr);
            pts.push_back(Rational(t));
        }
        if (caps_hit) break;

        // per point, the monic degree-k products of irreducible factors
        std::vector<std::vector<UniQ>> cands(pts.size());
        size_t total = 1;
        for (size_t j = 0; j < pts.size(); ++j) {
            bool capped = false;
            subset_products(irr_at[j], 0, k, UniQ{Rational(1)}, cands[j], 512, capped);
            if (capped || cands[j].empty()) {
                total = 0;
                if (capped) caps_hit = true;
                break;
            }
            total *= cands[j].size();
            if (total > 20000) {
                caps_hit = true;
                total = 0;
                break;
            }
        }
        if (caps_hit) break;

        bool found = false;
        if (total > 0) {
            std::vector<size_t> idx(pts.size(), 0);
            for (size_t step = 0; step < total && !found; ++step) {
                // interpolate each x-coefficient of the candidate across points
                QPoly g = QPoly::variable(fam, va, k);
                bool ok = true;
                for (int t = 0; t < k && ok; ++t) {
                    std::vector<Rational> vals;
                    for (size_t j = 0; j < pts.size(); ++j) {
                        const UniQ& c = cands[j][idx[j]];
                        vals.push_back(t < static_cast<int>(c.size()) ? c[t] : Rational(0));
                    }
                    UniQ ct = lagrange_interpolate(pts, vals);
                    if (uni_degree(ct) > k - t) {
                        ok = false;
                        break;
                    }
                    g = g + from_dense(ct, fam, vb) * QPoly::variable(fam, va, t);
                }
                if (ok) {
                    auto quot = divide_exact(fs, g);
                    if (quot) {
                        sheared_factors.push_back(normalize(g));
                        fs = normalize(*quot);
                        found = true;
                        break;
                    }
                }
                for (size_t j = 0; j < idx.size(); ++j) {
                    if (++idx[j] < cands[j].size()) break;
                    idx[j] = 0;
                }
            }
        }
        if (!found) ++k;
    }

    AffineFactorResult res;
    std::vector<QPoly> unimg;
    for (int i = 0; i < 3; ++i) unimg.push_back(QPoly::variable(fam, i));
    unimg[va] = QPoly::variable(fam, va) - QPoly::constant(fam, Rational(sigma)) * QPoly::variable(fam, vb);
    for (auto& g : sheared_factors) res.factors.push_back(normalize(g.substituted_same(unimg)));
    res.leftover = fs.is_constant() ? QPoly::constant(fam, Rational(1))
                                    : normalize(fs.substituted_same(unimg));
    res.leftover_irreducible = !caps_hit && fs.degree() >= 1 && 2 * k > fs.degree();
    return res;
}

// squarefree part with all variable-monomial content removed
AffineFactorResult factor_part(const QPoly& s, int dmax) {
    Vars fam = s.family();
    AffineFactorResult res;
    res.leftover = QPoly::constant(fam, Rational(1));
    std::vector<int> vars;
    for (int v = 0; v < 3; ++v)
        if (s.has_var(v)) vars.push_back(v);

    if (vars.empty()) return res;
    if (vars.size() == 1) {
        res.factors = factor_one_var(s, vars[0]);
        return res;
    }
    if (vars.size() == 2) {
        if (s.is_homogeneous()) {
            // binary form: dehomogenize, factor completely, rehomogenize
            for (auto& fac : factor_univariate(to_dense(s.evaluated_at(vars[1], Rational(1)), vars[0]))) {
                QPoly g = from_dense(fac.poly, fam, vars[0]);
                res.factors.push_back(normalize(homogenize(g, vars[1], uni_degree(fac.poly))));
            }
            return res;
        }
        return factor_two_vars(s, vars[0], vars[1], dmax);
    }
    if (!s.is_homogeneous()) {
        // out of contract; report as residual rather than guessing
        res.leftover = s;
        return res;
    }
    // ternary form: dehomogenize in z (z does not divide s), lift results back
    QPoly aff = s.evaluated_at(2, Rational(1));
    std::vector<int> avars;
    for (int v = 0; v < 2; ++v)
        if (aff.has_var(v)) avars.push_back(v);
    AffineFactorResult inner;
    inner.leftover = QPoly::constant(fam, Rational(1));
    if (avars.size() == 1)
        inner.factors = factor_one_var(aff, avars[0]);
    else if (avars.size() == 2)
        inner = factor_two_vars(aff, avars[0], avars[1], dmax);
    for (auto& g : inner.factors) res.factors.push_back(normalize(homogenize(g, 2, g.degree())));
    if (inner.leftover.is_constant())
        res.leftover = QPoly::constant(fam, Rational(1));
    else
        res.leftover = normalize(homogenize(inner.leftover, 2, inner.leftover.degree()));
    res.leftover_irreducible = inner.leftover_irreducible;
    return res;
}

} // namespace

BoundedFactorization factor_bounded(const QPoly& p_in, int dmax) {
    if (p_in.is_zero()) throw error("factor_bounded: zero input");
    if (dmax < 1) throw error("factor_bounded: dmax must be positive");
    Vars fam = p_in.family();
    QPoly p = normalize(p_in);

    BoundedFactorization out;
    out.residual = QPoly::constant(fam, Rational(1));
    if (p.is_constant()) return out;

    // pull out variable-monomial content first
    for (int v = 0; v < 3; ++v) {
        int e = kDegreeCap + 1;
        for (auto& [ex, c] : p.terms()) e = std::min(e, ex[v]);
        if (e > 0) {
            out.factors.emplace_back(QPoly::variable(fam, v), e);
            p = *divide_exact(p, QPoly::variable(fam, v, e));
        }
    }

    for (auto& [s, m] : squarefree_q(p)) {
        AffineFactorResult part = factor_part(s, dmax);
        if (part.leftover_irreducible && part.leftover.degree() <= dmax) {
            part.factors.push_back(part.leftover);
            part.leftover = QPoly::constant(fam, Rational(1));
        }
        for (auto& g : part.factors) {
            if (g.degree() <= dmax)
                out.factors.emplace_back(g, m);
            else
                out.residual = out.residual * g.pow(m);
        }
        if (!part.leftover.is_constant()) out.residual = out.residual * part.leftover.pow(m);
    }
    out.residual = normalize(out.residual);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        int c = QPoly::compare(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

} // namespace pcl
