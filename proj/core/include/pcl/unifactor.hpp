#ifndef PCL_UNIFACTOR_HPP
#define PCL_UNIFACTOR_HPP

#include <vector>

#include "pcl/qpoly.hpp"

namespace pcl {

// Dense univariate polynomial over Q, coefficients low to high.
using UniQ = std::vector<Rational>;

int uni_degree(const UniQ& f);
UniQ uni_mul(const UniQ& a, const UniQ& b);
UniQ uni_rem(const UniQ& a, const UniQ& b);
UniQ uni_gcd(const UniQ& a, const UniQ& b); // monic
UniQ uni_derivative(const UniQ& f);
bool uni_divide_exact(const UniQ& a, const UniQ& b, UniQ& quot);
Rational uni_eval(const UniQ& f, const Rational& x);

UniQ to_dense(const QPoly& p, int var);
QPoly from_dense(const UniQ& f, Vars fam, int var);

struct UniFactor {
    UniQ poly; // primitive integer coefficients, positive leading coefficient
    int mult;
};

// Complete factorization into irreducibles over Q (deterministic order).
// The unit is input / prod(poly^mult).
std::vector<UniFactor> factor_univariate(const UniQ& f);

std::vector<Rational> rational_roots(const UniQ& f);

bool is_irreducible_univariate(const UniQ& f);

} // namespace pcl

#endif
