#include "pcl/orbgroups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pcl {

static void check_signature(int n, const std::vector<int>& weights) {
    if (n < 0) throw error("punctures must be >= 0");
    for (int w : weights)
        if (w < 2) throw error("weights must be >= 2");
}

std::vector<std::string> GroupPresentation::generators() const {
    std::vector<std::string> g;
    for (int i = 1; i <= punctures; ++i) g.push_back("x" + std::to_string(i));
    for (size_t i = 1; i <= weights.size(); ++i) g.push_back("y" + std::to_string(i));
    return g;
}

std::vector<std::string> GroupPresentation::relators() const {
    std::vector<std::string> r;
    for (size_t i = 0; i < weights.size(); ++i)
        r.push_back("y" + std::to_string(i + 1) + "^" + std::to_string(weights[i]));
    std::string prod;
    for (int i = 1; i <= punctures; ++i) prod += (prod.empty() ? "" : "*") + ("x" + std::to_string(i));
    for (size_t i = 1; i <= weights.size(); ++i)
        prod += (prod.empty() ? "" : "*") + ("y" + std::to_string(i));
    if (!prod.empty()) r.push_back(prod);
    return r;
}

std::string GroupPresentation::text() const {
    std::ostringstream os;
    os << "< ";
    auto gs = generators();
    for (size_t i = 0; i < gs.size(); ++i) os << (i ? ", " : "") << gs[i];
    os << " | ";
    auto rs = relators();
    for (size_t i = 0; i < rs.size(); ++i) os << (i ? ", " : "") << rs[i];
    os << " >";
    return os.str();
}

GroupPresentation presentation(int n, const std::vector<int>& weights) {
    check_signature(n, weights);
    return GroupPresentation{n, weights};
}

std::vector<int> reduce(const std::vector<int>& weights, const std::vector<int>& divisors) {
    if (weights.size() != divisors.size())
        throw error("reduce: one divisor per weight required");
    std::vector<int> out;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (divisors[i] < 1 || weights[i] % divisors[i] != 0)
            throw error("reduce: " + std::to_string(divisors[i]) + " does not divide " +
                        std::to_string(weights[i]));
        if (divisors[i] > 1) out.push_back(divisors[i]);
    }
    return out;
}

NormalForm normal_form(int n, const std::vector<int>& weights) {
    check_signature(n, weights);
    if (n < 1) throw error("normal_form: requires at least one puncture");
    NormalForm nf{n - 1, weights};
    std::sort(nf.cyclic_factors.begin(), nf.cyclic_factors.end());
    return nf;
}

std::string NamedGroup::text() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::Trivial: return "Trivial";
        case Tag::Cyclic: return data[0] == 0 ? "Z" : "Z/" + std::to_string(data[0]);
        case Tag::DihedralFinite: return "DihedralFinite(" + std::to_string(data[0]) + ")";
        case Tag::InfiniteDihedral: return "InfiniteDihedral";
        case Tag::Triangle:
            return "Triangle(" + std::to_string(data[0]) + "," + std::to_string(data[1]) + "," +
                   std::to_string(data[2]) + ")";
        case Tag::FreeProduct: {
            os << "FreeProduct(";
            for (size_t i = 0; i < data.size(); ++i)
                os << (i ? "," : "") << (data[i] == 0 ? "Z" : "Z/" + std::to_string(data[i]));
            os << ")";
            return os.str();
        }
        default: return "Unrecognized";
    }
}

NamedGroup identify(int n, const std::vector<int>& weights) {
    check_signature(n, weights);
    std::vector<int> ws = weights;
    std::sort(ws.begin(), ws.end());

    if (n == 0) {
        if (ws.empty()) return {NamedGroup::Tag::Trivial, {}};
        if (ws.size() == 1) return {NamedGroup::Tag::Trivial, {}}; // product relation kills y1
        if (ws.size() == 2) {
            int g = std::gcd(ws[0], ws[1]);
            return g == 1 ? NamedGroup{NamedGroup::Tag::Trivial, {}}
                          : NamedGroup{NamedGroup::Tag::Cyclic, {g}};
        }
        if (ws.size() == 3) {
            if (ws[0] == 2 && ws[1] == 2)
                return {NamedGroup::Tag::DihedralFinite, {2 * ws[2]}};
            return {NamedGroup::Tag::Triangle, {ws[0], ws[1], ws[2]}};
        }
        return {NamedGroup::Tag::Unrecognized, {}};
    }

    NormalForm nf = normal_form(n, weights);
    std::vector<int> factors(nf.free_rank, 0);
    factors.insert(factors.end(), nf.cyclic_factors.begin(), nf.cyclic_factors.end());
    if (factors.empty()) return {NamedGroup::Tag::Trivial, {}};
    if (factors.size() == 1) return {NamedGroup::Tag::Cyclic, {factors[0]}};
    if (factors.size() == 2 && factors[0] == 2 && factors[1] == 2)
        return {NamedGroup::Tag::InfiniteDihedral, {}};
    return {NamedGroup::Tag::FreeProduct, factors};
}

RuleVerdict surjects_onto_infinite_dihedral(int n, const std::vector<int>& weights) {
    check_signature(n, weights);
    if (n == 0) return RuleVerdict::NotDecidableByRule;
    NormalForm nf = normal_form(n, weights);
    int two_quotients = nf.free_rank;
    for (int c : nf.cyclic_factors)
        if (c % 2 == 0) ++two_quotients;
    return two_quotients >= 2 ? RuleVerdict::True : RuleVerdict::False;
}

namespace {

// dihedral element rho^r * s^b in D_{2m}
struct DihElem {
    int r;
    int b;
    bool operator<(const DihElem& o) const { return r != o.r ? r < o.r : b < o.b; }
    bool operator==(const DihElem& o) const { return r == o.r && b == o.b; }
};

DihElem dmul(const DihElem& a, const DihElem& c, int m) {
    int r = a.b ? (a.r - c.r) : (a.r + c.r);
    r %= m;
    if (r < 0) r += m;
    return {r, a.b ^ c.b};
}

DihElem dinv(const DihElem& a, int m) {
    if (a.b) return a;
    int r = (-a.r) % m;
    if (r < 0) r += m;
    return {r, 0};
}

int dorder(const DihElem& a, int m) {
    if (a.b) return 2;
    if (a.r == 0) return 1;
    return m / std::gcd(m, a.r);
}

bool generates(const std::vector<DihElem>& gens, int m) {
    std::set<DihElem> seen{DihElem{0, 0}};
    std::vector<DihElem> frontier{DihElem{0, 0}};
    while (!frontier.empty()) {
        std::vector<DihElem> next;
        for (auto& e : frontier)
            for (auto& g : gens) {
                DihElem p = dmul(e, g, m);
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return static_cast<int>(seen.size()) == 2 * m;
}

} // namespace

long count_epimorphisms(int n, const std::vector<int>& weights, int target_order) {
    check_signature(n, weights);
    if (target_order < 2 || target_order % 2 != 0 || target_order > 200)
        throw error("count_epimorphisms: target order must be even and <= 200");
    int m = target_order / 2;

    std::vector<DihElem> all;
    for (int r = 0; r < m; ++r)
        for (int b = 0; b < 2; ++b) all.push_back({r, b});

    // admissible images per torsion generator
    std::vector<std::vector<DihElem>> ychoices;
    for (int w : weights) {
        std::vector<DihElem> c;
        for (auto& e : all)
            if (w % dorder(e, m) == 0) c.push_back(e);
        ychoices.push_back(std::move(c));
    }

    int free_gens = std::max(0, n - 1);
    long count = 0;
    size_t dims = ychoices.size() + free_gens;
    std::vector<size_t> idx(dims, 0);

    while (true) {
        std::vector<DihElem> images;
        for (size_t i = 0; i < ychoices.size(); ++i) images.push_back(ychoices[i][idx[i]]);
        for (int i = 0; i < free_gens; ++i) images.push_back(all[idx[ychoices.size() + i]]);

        // product relation x1..xn y1..yr = 1
        bool ok = true;
        std::vector<DihElem> gens = images;
        if (n >= 1) {
            DihElem xprod{0, 0};
            for (int i = 0; i < free_gens; ++i)
                xprod = dmul(xprod, images[ychoices.size() + i], m);
            DihElem yprod{0, 0};
            for (size_t i = 0; i < ychoices.size(); ++i) yprod = dmul(yprod, images[i], m);
            DihElem last = dmul(dinv(xprod, m), dinv(yprod, m), m);
            gens.push_back(last);
        } else {
            DihElem yprod{0, 0};
            for (size_t i = 0; i < ychoices.size(); ++i) yprod = dmul(yprod, images[i], m);
            ok = (yprod == DihElem{0, 0});
        }
        if (ok && generates(gens, m)) ++count;

        // advance the odometer
        size_t p = 0;
        for (; p < dims; ++p) {
            size_t lim = p < ychoices.size() ? ychoices[p].size() : all.size();
            if (++idx[p] < lim) break;
            idx[p] = 0;
        }
        if (p == dims) break;
        if (dims == 0) break;
    }
    if (dims == 0) {
        // no generators at all: only the trivial map, surjective only onto the
        // trivial group, never onto D_{2m}
        return 0;
    }
    return count;
}

} // namespace pcl
