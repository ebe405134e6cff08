#ifndef PCL_RATIONAL_HPP
#define PCL_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace pcl {

// Exact rational coefficients. mpq_class keeps the canonical form
// (positive denominator, coprime) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};
struct degree_cap_error : error {
    using error::error;
};

// Hard cap on the degree of multivariate forms accepted at API boundaries.
inline constexpr int kDegreeCap = 24;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_pow(const Rational& q, unsigned e) {
    Rational r(1);
    Rational b = q;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// If q is the square of a rational, stores a root (>= 0) in `root`.
inline bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    if (sgn(q) == 0) { root = 0; return true; }
    Integer n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace pcl

#endif
