#include <cctype>
#include <optional>

#include "pcl/qpoly.hpp"

namespace pcl {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected an integer", start);
        return Integer(s.substr(start, pos - start));
    }
};

std::optional<std::pair<Vars, int>> lookup_var(char c) {
    switch (c) {
        case 'x': return {{Vars::XYZ, 0}};
        case 'y': return {{Vars::XYZ, 1}};
        case 'z': return {{Vars::XYZ, 2}};
        case 'u': return {{Vars::UV, 0}};
        case 'v': return {{Vars::UV, 1}};
        case 't': return {{Vars::TS, 0}};
        case 's': return {{Vars::TS, 1}};
        default: return std::nullopt;
    }
}

} // namespace

QPoly parse_poly(const std::string& text, Vars hint) {
    Lexer lx{text};
    std::optional<Vars> family;
    struct RawTerm {
        Rational coeff{1};
        Expo e{0, 0, 0};
        bool has_coeff = false;
    };
    std::vector<RawTerm> terms;

    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", lx.pos);
        }
        first = false;

        RawTerm term;
        bool any_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                if (term.has_coeff) throw parse_error("unexpected second coefficient", lx.pos);
                Integer num = lx.integer();
                Integer den = 1;
                if (lx.peek() == '/') {
                    lx.take();
                    den = lx.integer();
                    if (sgn(den) == 0) throw parse_error("zero denominator", lx.pos);
                }
                term.coeff = Rational(num, den);
                term.coeff.canonicalize();
                term.has_coeff = true;
                any_factor = true;
            } else if (auto var = lookup_var(f)) {
                lx.take();
                if (family && *family != var->first)
                    throw parse_error("mixed variable families", lx.pos - 1);
                family = var->first;
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    Integer e = lx.integer();
                    if (e < 0 || e > 4 * kDegreeCap) throw parse_error("exponent out of range", lx.pos);
                    exp = static_cast<int>(e.get_si());
                }
                term.e[var->second] += exp;
                any_factor = true;
            } else {
                throw parse_error("expected a coefficient or variable", lx.pos);
            }
            if (lx.peek() == '*') {
                lx.take();
            } else {
                expect_factor = false;
            }
        }
        if (!any_factor) throw parse_error("empty term", lx.pos);
        if (sign < 0) term.coeff = -term.coeff;
        terms.push_back(term);
    }
    if (terms.empty()) throw parse_error("empty input", 0);

    Vars fam = family.value_or(hint);
    QPoly p(fam);
    for (auto& t : terms) {
        if (fam != Vars::XYZ && (t.e[2] != 0)) throw parse_error("internal: bad exponent slot", 0);
        p.add_term(t.e, t.coeff);
    }
    check_degree_cap(p);
    return p;
}

QPoly parse_poly_as(const std::string& text, Vars required) {
    QPoly p = parse_poly(text, required);
    if (p.family() != required) throw parse_error("wrong variable family in '" + text + "'", 0);
    return p;
}

} // namespace pcl
