#include "pcl/curves.hpp"

#include <algorithm>
#include <sstream>

#include "pcl/algebraic.hpp"
#include "pcl/unifactor.hpp"

namespace pcl {

// --- Parametrization -------------------------------------------------------

Parametrization::Parametrization(QPoly a, QPoly b, QPoly c)
    : x(std::move(a)), y(std::move(b)), z(std::move(c)), deg_(-1) {
    std::vector<const QPoly*> nz;
    for (auto* p : {&x, &y, &z}) {
        check_degree_cap(*p);
        if (p->family() != Vars::TS) throw error("parametrization components must be in (t,s)");
        if (p->is_zero()) continue;
        if (!p->is_homogeneous()) throw error("parametrization components must be binary forms");
        if (deg_ < 0) deg_ = p->degree();
        if (p->degree() != deg_) throw error("parametrization components must share a degree");
        nz.push_back(p);
    }
    if (deg_ < 1) throw error("parametrization must have degree >= 1");
    if (nz.size() < 2) throw error("parametrization must have two independent components");
    QPoly g = *nz[0];
    for (size_t i = 1; i < nz.size(); ++i) g = gcd(g, *nz[i]);
    if (!g.is_constant()) throw error("parametrization components must be coprime");
    bool independent = false;
    for (size_t i = 1; i < nz.size() && !independent; ++i)
        independent = normalize(*nz[0]) != normalize(*nz[i]);
    if (!independent) throw error("parametrization components are all proportional");
}

QPoly compose(const QPoly& form, const Parametrization& phi) {
    QPoly r = form.substituted(phi.images());
    check_degree_cap(r);
    return r;
}

// --- basic types -----------------------------------------------------------

PlaneCurve::PlaneCurve(QPoly form) : f_(std::move(form)) {
    if (f_.family() != Vars::XYZ) throw error("plane curve must use variables x,y,z");
    if (f_.is_zero() || f_.is_constant()) throw error("plane curve must have degree >= 1");
    if (!f_.is_homogeneous()) throw error("plane curve form must be homogeneous");
    check_degree_cap(f_);
    f_ = normalize(f_);
    squarefree_ = pcl::is_squarefree(f_);
}

ProjPoint::ProjPoint(const Rational& a, const Rational& b, const Rational& d) : c{a, b, d} {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (sgn(c[i]) != 0) {
            last = i;
            break;
        }
    if (last < 0) throw error("projective point cannot be (0:0:0)");
    Rational s = c[last];
    for (auto& q : c) q /= s;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (int i = 0; i < 3; ++i) {
        if (c[i] < o.c[i]) return true;
        if (o.c[i] < c[i]) return false;
    }
    return false;
}

std::string to_string(const ProjPoint& p) {
    return "[" + to_string(p.c[0]) + ":" + to_string(p.c[1]) + ":" + to_string(p.c[2]) + "]";
}

// --- singular locus --------------------------------------------------------

namespace {

AlgNum alg_pow(const AlgNum& a, int e) {
    AlgNum r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

// p(x,y) with y := alpha, as a univariate polynomial in vx over Q(alpha)
MPoly<AlgNum> specialize_alg(const QPoly& p, int vx, int vy, const AlgNum& alpha) {
    MPoly<AlgNum> r(p.family());
    for (auto& [e, c] : p.terms()) {
        Expo e2{0, 0, 0};
        e2[vx] = e[vx];
        r.add_term(e2, AlgNum(c) * alg_pow(alpha, e[vy]));
    }
    return r;
}

// the full singular-locus data, kept rich enough for the incidence tests of
// condition (iii)
struct LocusData {
    LinearChange frame = LinearChange::identity();
    std::vector<ProjPoint> points;

    struct YCluster {
        QPoly q;                          // irreducible in y, deg >= 2
        MPoly<AlgNum> gk;                 // common factor of the partials over Q[y]/(q)
        bool verified;
    };
    struct XCluster {
        Rational b;                       // rational y-coordinate
        UniQ qx;                          // irreducible in x, deg >= 2
        QPoly qx_poly;
    };
    struct ZCluster {
        QPoly r;                          // irreducible binary form in x,y on the line z'=0
    };
    std::vector<YCluster> ys;
    std::vector<XCluster> xs;
    std::vector<ZCluster> zs;
};

constexpr int kMaxExtensionDegree = 6;

bool verify_singular(const QPoly& F, const std::array<Rational, 3>& pt) {
    for (int v = 0; v < 3; ++v)
        if (sgn(F.derivative(v).evaluate(pt)) != 0) return false;
    return true;
}

LocusData locate_singular(const QPoly& F, std::uint64_t seed) {
    int d = F.degree();
    LocusData out;
    if (d < 2) return out;

    SeedRng rng(seed);
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 24) throw error("singular_points: no usable coordinate frame found");
        LinearChange M = LinearChange::random_frame(rng);
        QPoly Fp = change_coordinates(F, M);
        // the frame must keep all three partials of full degree in x with
        // constant leading coefficient, so the resultants lose no solutions
        if (sgn(Fp.terms().count({d, 0, 0}) ? Fp.terms().at({d, 0, 0}) : Rational(0)) == 0) continue;
        if (d >= 2) {
            Expo ey{d - 1, 1, 0}, ez{d - 1, 0, 1};
            auto cy = Fp.terms().count(ey) ? Fp.terms().at(ey) : Rational(0);
            auto cz = Fp.terms().count(ez) ? Fp.terms().at(ez) : Rational(0);
            if (sgn(cy) == 0 || sgn(cz) == 0) continue;
        }

        QPoly fx = Fp.derivative(0).evaluated_at(2, Rational(1));
        QPoly fy = Fp.derivative(1).evaluated_at(2, Rational(1));
        QPoly fz = Fp.derivative(2).evaluated_at(2, Rational(1));

        std::vector<ProjPoint> points;
        std::vector<LocusData::YCluster> ys;
        std::vector<LocusData::XCluster> xs;
        std::vector<LocusData::ZCluster> zs;

        auto map_back = [&](const Rational& a, const Rational& b, const Rational& c) {
            auto img = M.images();
            std::array<Rational, 3> q{a, b, c};
            return std::array<Rational, 3>{img[0].evaluate(q), img[1].evaluate(q),
                                           img[2].evaluate(q)};
        };

        // affine chart z' = 1
        if (d >= 2) {
            QPoly E(Vars::XYZ);
            if (fx.degree_in(0) < 1) continue;
            if (fy.has_var(0) || fy.is_zero()) {
                if (fy.is_zero()) continue;
                QPoly R1 = resultant_q(fx, fy, 0);
                if (R1.is_zero()) continue;
                QPoly R2;
                if (fz.is_zero() || !fz.has_var(0)) continue;
                R2 = resultant_q(fx, fz, 0);
                if (R2.is_zero()) continue;
                E = gcd(R1, R2);
            } else {
                continue;
            }

            if (!E.is_constant()) {
                for (auto& fac : factor_univariate(to_dense(E, 1))) {
                    int dq = uni_degree(fac.poly);
                    if (dq == 1) {
                        Rational b = -fac.poly[0] / fac.poly[1];
                        UniQ g;
                        bool first = true;
                        for (auto* p : {&fx, &fy, &fz}) {
                            QPoly s = p->evaluated_at(1, b);
                            if (s.is_zero()) continue;
                            UniQ su = to_dense(s, 0);
                            g = first ? su : uni_gcd(g, su);
                            first = false;
                        }
                        if (first) continue; // all partials vanish on the line: frame is bad
                        for (auto& gf : factor_univariate(g)) {
                            if (uni_degree(gf.poly) == 1) {
                                Rational a = -gf.poly[0] / gf.poly[1];
                                auto orig = map_back(a, b, Rational(1));
                                if (verify_singular(F, orig))
                                    points.emplace_back(orig[0], orig[1], orig[2]);
                            } else {
                                xs.push_back({b, gf.poly,
                                              normalize(from_dense(gf.poly, Vars::XYZ, 0))});
                            }
                        }
                    } else if (dq <= kMaxExtensionDegree) {
                        UniQ q = fac.poly;
                        Rational lc = q[uni_degree(q)];
                        std::vector<Rational> mon(q.size());
                        for (size_t i = 0; i < q.size(); ++i) mon[i] = q[i] / lc;
                        auto field = std::make_shared<NumberField>(NumberField{mon});
                        AlgNum alpha = AlgNum::generator(field);
                        MPoly<AlgNum> gk(Vars::XYZ);
                        bool first = true;
                        for (auto* p : {&fx, &fy, &fz}) {
                            MPoly<AlgNum> s = specialize_alg(*p, 0, 1, alpha);
                            if (s.is_zero()) continue;
                            gk = first ? s : gcd_poly(gk, s);
                            first = false;
                        }
                        if (!first && !gk.is_constant())
                            ys.push_back({normalize(from_dense(fac.poly, Vars::XYZ, 1)), gk, true});
                    } else {
                        ys.push_back({normalize(from_dense(fac.poly, Vars::XYZ, 1)),
                                      MPoly<AlgNum>(Vars::XYZ), false});
                    }
                }
            }
        }

        // the line z' = 0: binary-form gcd of the three partials
        {
            QPoly g(Vars::XYZ);
            bool first = true;
            for (int v = 0; v < 3; ++v) {
                QPoly s = Fp.derivative(v).evaluated_at(2, Rational(0));
                if (s.is_zero()) continue;
                g = first ? s : gcd(g, s);
                first = false;
            }
            if (first) continue; // all partials vanish on z'=0
            if (!g.is_constant()) {
                // complete factorization of a binary form
                for (auto& fac :
                     factor_univariate(to_dense(g.evaluated_at(1, Rational(1)), 0))) {
                    QPoly lin = homogenize(from_dense(fac.poly, Vars::XYZ, 0), 1,
                                           uni_degree(fac.poly));
                    if (lin.degree() == 1) {
                        // root (x0:y0) of the linear form a*x + b*y: (-b : a)
                        Rational a = lin.coeff_of(0, 1).constant_value();
                        Rational b = lin.coeff_of(1, 1).constant_value();
                        auto orig = map_back(-b, a, Rational(0));
                        if (verify_singular(F, orig))
                            points.emplace_back(orig[0], orig[1], orig[2]);
                    } else {
                        zs.push_back({normalize(lin)});
                    }
                }
                int dg = g.degree();
                int dx = to_dense(g.evaluated_at(1, Rational(1)), 0).size() - 1;
                if (dx < dg) {
                    // y^(dg-dx) divides g: the point (1:0) on z'=0
                    auto orig = map_back(Rational(1), Rational(0), Rational(0));
                    if (verify_singular(F, orig)) points.emplace_back(orig[0], orig[1], orig[2]);
                }
            }
        }

        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        out.frame = M;
        out.points = std::move(points);
        out.ys = std::move(ys);
        out.xs = std::move(xs);
        out.zs = std::move(zs);
        return out;
    }
}

} // namespace

SingularLocus singular_points(const PlaneCurve& C, std::uint64_t seed) {
    if (!C.is_squarefree()) throw error("singular_points: curve must be square-free");
    LocusData data = locate_singular(C.form(), seed);
    SingularLocus out;
    out.points = data.points;
    for (auto& yc : data.ys)
        out.clusters.push_back({yc.q, yc.q.degree(), yc.verified});
    for (auto& xc : data.xs)
        out.clusters.push_back({xc.qx_poly, xc.qx_poly.degree(), true});
    for (auto& zc : data.zs)
        out.clusters.push_back({zc.r, zc.r.degree(), true});
    return out;
}

// --- intersection numbers --------------------------------------------------

namespace {

int ord_u(const UniQ& f) {
    for (size_t i = 0; i < f.size(); ++i)
        if (sgn(f[i]) != 0) return static_cast<int>(i);
    return kInfinite;
}

Rational at_origin(const QPoly& f) {
    auto it = f.terms().find(Expo{0, 0, 0});
    return it == f.terms().end() ? Rational(0) : it->second;
}

// f, g coprime; both use variables (0,1) of one family
int fulton(QPoly f, QPoly g) {
    int total = 0;
    for (int guard = 0; guard < 16 * kDegreeCap * kDegreeCap + 64; ++guard) {
        if (sgn(at_origin(f)) != 0 || sgn(at_origin(g)) != 0) return total;
        if (f.is_zero() || g.is_zero()) throw error("intersection recursion degenerated");

        UniQ fu = to_dense(f.evaluated_at(1, Rational(0)), 0);
        UniQ gu = to_dense(g.evaluated_at(1, Rational(0)), 0);
        int r = uni_degree(fu), s = uni_degree(gu);
        if (r < 0 && s < 0) throw error("intersection recursion degenerated"); // v | gcd
        if (r < 0) {
            std::swap(f, g);
            std::swap(fu, gu);
            std::swap(r, s);
        }
        if (s < 0) {
            // g = v * h: I(f, v) = ord_u f(u,0), then continue with h
            auto h = divide_exact(g, QPoly::variable(g.family(), 1));
            if (!h) throw error("intersection recursion degenerated");
            total += ord_u(fu);
            g = *h;
            continue;
        }
        if (r > s) {
            std::swap(f, g);
            std::swap(fu, gu);
            std::swap(r, s);
        }
        // kill the top coefficient of g(u,0)
        Rational c = gu[s] / fu[r];
        g = g - QPoly::variable(g.family(), 0, s - r) * f * c;
    }
    throw error("intersection recursion did not terminate");
}

} // namespace

int intersection_multiplicity(const QPoly& f_in, const QPoly& g_in,
                              const Rational& pu, const Rational& pv) {
    if (f_in.has_var(2) || g_in.has_var(2))
        throw error("intersection_multiplicity expects affine curves in two variables");
    Vars fam = f_in.family();
    std::vector<QPoly> img{QPoly::variable(fam, 0) + QPoly::constant(fam, pu),
                           QPoly::variable(fam, 1) + QPoly::constant(fam, pv),
                           QPoly::variable(fam, 2)};
    QPoly f = f_in.substituted_same(img);
    QPoly g = g_in.substituted_same(img);

    if (sgn(at_origin(f)) != 0 || sgn(at_origin(g)) != 0) return 0;
    if (f.is_zero() || g.is_zero()) return kInfinite;
    QPoly h = gcd(f, g);
    if (!h.is_constant()) {
        if (sgn(at_origin(h)) == 0) return kInfinite;
        f = *divide_exact(f, h);
        g = *divide_exact(g, h);
    }
    return fulton(f, g);
}

namespace {

// affine form of C around P, translated so P sits at the origin of (u,v)
QPoly chart_at(const QPoly& F, const ProjPoint& P) {
    int ch = 2;
    while (sgn(P.c[ch]) == 0) --ch;
    QPoly u = QPoly::variable(Vars::UV, 0), v = QPoly::variable(Vars::UV, 1);
    std::vector<QPoly> img;
    int next = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == ch) {
            img.push_back(QPoly::constant(Vars::UV, Rational(1)));
        } else {
            QPoly w = (next++ == 0) ? u : v;
            img.push_back(w + QPoly::constant(Vars::UV, P.c[i]));
        }
    }
    return F.substituted(img);
}

int multiplicity_at_origin(const QPoly& f) {
    int m = kDegreeCap + 1;
    for (auto& [e, c] : f.terms()) m = std::min(m, e[0] + e[1] + e[2]);
    return f.is_zero() ? kInfinite : m;
}

} // namespace

int milnor_number(const PlaneCurve& C, const ProjPoint& P) {
    QPoly f = chart_at(C.form(), P);
    return intersection_multiplicity(f.derivative(0), f.derivative(1), Rational(0), Rational(0));
}

// --- ADE classification ----------------------------------------------------

std::string to_string(AdeType t) {
    switch (t) {
        case AdeType::A: return "A";
        case AdeType::D: return "D";
        case AdeType::E6: return "E6";
        case AdeType::E7: return "E7";
        case AdeType::E8: return "E8";
        case AdeType::NOT_SIMPLE: return "NOT_SIMPLE";
        default: return "UNKNOWN_NONRATIONAL";
    }
}

std::string to_string(const SingularityReport& r) {
    std::ostringstream os;
    os << to_string(r.point) << " mult=" << r.multiplicity << " milnor=";
    if (r.milnor == kInfinite)
        os << "infinite";
    else
        os << r.milnor;
    os << " type=";
    switch (r.type) {
        case AdeType::A: os << "A" << r.subscript; break;
        case AdeType::D: os << "D" << r.subscript; break;
        default: os << to_string(r.type); break;
    }
    return os.str();
}

SingularityReport classify_singularity(const PlaneCurve& C, const ProjPoint& P) {
    QPoly f = chart_at(C.form(), P);
    int m = multiplicity_at_origin(f);
    if (m < 2) throw error("classify_singularity: point is not singular");
    int mu = intersection_multiplicity(f.derivative(0), f.derivative(1), Rational(0), Rational(0));

    SingularityReport rep{P, m, mu, AdeType::NOT_SIMPLE, 0};
    if (mu == kInfinite || m >= 4) return rep;

    if (m == 2) {
        rep.type = AdeType::A;
        rep.subscript = mu;
        return rep;
    }
    // multiplicity 3: count distinct tangent directions over C
    QPoly tc(Vars::UV);
    for (auto& [e, c] : f.terms())
        if (e[0] + e[1] + e[2] == 3) tc.add_term(e, c);
    int distinct = 0;
    for (auto& [fac, mult] : squarefree_q(tc)) distinct += fac.degree();
    if (distinct >= 2) {
        rep.type = AdeType::D;
        rep.subscript = mu;
    } else if (mu >= 6 && mu <= 8) {
        rep.type = mu == 6 ? AdeType::E6 : (mu == 7 ? AdeType::E7 : AdeType::E8);
        rep.subscript = mu;
    }
    return rep;
}

// --- hypothesis checks -----------------------------------------------------

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "pass";
        case Verdict::FAIL: return "fail";
        default: return "not-checkable";
    }
}

HypothesisReport check_hypotheses(const PlaneCurve& C1, const PlaneCurve& C2,
                                  const std::optional<Parametrization>& phi,
                                  std::uint64_t seed) {
    if (!C1.is_squarefree() || !C2.is_squarefree())
        throw error("check_hypotheses: curves must be square-free");

    HypothesisReport rep;

    // (i) even degree
    {
        int d = C1.degree();
        rep.conditions[0] = {d % 2 == 0 ? Verdict::PASS : Verdict::FAIL,
                             "deg C1 = " + std::to_string(d)};
    }

    LocusData locus = locate_singular(C1.form(), seed);

    // (ii) at most simple singularities
    {
        Verdict v = Verdict::PASS;
        std::string ev;
        for (auto& P : locus.points) {
            SingularityReport r = classify_singularity(C1, P);
            if (r.type == AdeType::NOT_SIMPLE) {
                v = Verdict::FAIL;
                ev += (ev.empty() ? "" : "; ") + to_string(r);
            } else {
                ev += (ev.empty() ? "" : "; ") + to_string(r);
            }
        }
        if (v == Verdict::PASS && !(locus.ys.empty() && locus.xs.empty() && locus.zs.empty())) {
            v = Verdict::NOT_CHECKABLE;
            for (auto& yc : locus.ys)
                ev += (ev.empty() ? "" : "; ") + std::string("non-rational cluster ") + to_string(yc.q);
            for (auto& xc : locus.xs)
                ev += (ev.empty() ? "" : "; ") + std::string("non-rational cluster ") + to_string(xc.qx_poly);
            for (auto& zc : locus.zs)
                ev += (ev.empty() ? "" : "; ") + std::string("non-rational cluster ") + to_string(zc.r);
        }
        if (ev.empty()) ev = "no singular points";
        rep.conditions[1] = {v, ev};
    }

    // (iii) C2 misses Sing(C1)
    {
        Verdict v = Verdict::PASS;
        std::string ev;
        const QPoly& F2 = C2.form();
        for (auto& P : locus.points) {
            if (sgn(F2.evaluate(P.c)) == 0) {
                v = Verdict::FAIL;
                ev += (ev.empty() ? "" : "; ") + ("C2 passes through " + to_string(P));
            }
        }
        if (v == Verdict::PASS) {
            QPoly F2p = change_coordinates(F2, locus.frame);
            QPoly f2 = F2p.evaluated_at(2, Rational(1));
            for (auto& yc : locus.ys) {
                if (!yc.verified) {
                    v = Verdict::NOT_CHECKABLE;
                    ev += (ev.empty() ? "" : "; ") +
                          ("unverified cluster " + to_string(yc.q));
                    continue;
                }
                UniQ q = to_dense(yc.q, 1);
                Rational lc = q[uni_degree(q)];
                for (auto& cq : q) cq /= lc;
                auto field = std::make_shared<NumberField>(NumberField{q});
                AlgNum alpha = AlgNum::generator(field);
                MPoly<AlgNum> f2a = specialize_alg(f2, 0, 1, alpha);
                bool hit;
                if (f2a.is_zero())
                    hit = true;
                else
                    hit = !gcd_poly(yc.gk, f2a).is_constant();
                if (hit) {
                    v = Verdict::FAIL;
                    ev += (ev.empty() ? "" : "; ") +
                          ("C2 meets singular cluster " + to_string(yc.q));
                }
            }
            for (auto& xc : locus.xs) {
                QPoly s = f2.evaluated_at(1, xc.b);
                bool hit = s.is_zero() || uni_degree(uni_gcd(to_dense(s, 0), xc.qx)) > 0;
                if (hit) {
                    v = Verdict::FAIL;
                    ev += (ev.empty() ? "" : "; ") +
                          ("C2 meets singular cluster " + to_string(xc.qx_poly));
                }
            }
            if (!locus.zs.empty()) {
                QPoly f2inf = F2p.evaluated_at(2, Rational(0));
                for (auto& zc : locus.zs) {
                    bool hit = f2inf.is_zero() || !gcd(f2inf, zc.r).is_constant();
                    if (hit) {
                        v = Verdict::FAIL;
                        ev += (ev.empty() ? "" : "; ") +
                              ("C2 meets singular cluster " + to_string(zc.r));
                    }
                }
            }
        }
        if (ev.empty()) ev = "C2 avoids all singular points of C1";
        rep.conditions[2] = {v, ev};
    }

    // (iv) even local intersection along the parametrization
    {
        if (!phi) {
            rep.conditions[3] = {Verdict::NOT_CHECKABLE, "no parametrization supplied"};
        } else {
            if (!compose(C2.form(), *phi).is_zero())
                throw error("check_hypotheses: parametrization does not lie on C2");
            QPoly pb = compose(C1.form(), *phi);
            if (pb.is_zero()) {
                rep.conditions[3] = {Verdict::FAIL, "C2 is a component of C1"};
            } else {
                std::string odd;
                for (auto& [fac, mult] : squarefree_q(pb))
                    if (mult % 2 != 0)
                        odd += (odd.empty() ? "" : ", ") + to_string(fac) +
                               " with multiplicity " + std::to_string(mult);
                if (odd.empty())
                    rep.conditions[3] = {Verdict::PASS, "all intersection orders even"};
                else
                    rep.conditions[3] = {Verdict::FAIL, "odd intersection orders at " + odd};
            }
        }
    }

    return rep;
}

} // namespace pcl
