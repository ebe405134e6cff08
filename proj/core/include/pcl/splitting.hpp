#ifndef PCL_SPLITTING_HPP
#define PCL_SPLITTING_HPP

#include <utility>
#include <vector>

#include "pcl/parametrization.hpp"
#include "pcl/qpoly.hpp"

namespace pcl {

struct no_rational_point_error : error {
    using error::error;
};
struct no_witness_error : error {
    using error::error;
};
struct non_rational_square_error : error {
    non_rational_square_error(const std::string& msg, Rational c_)
        : error(msg), c(std::move(c_)) {}
    Rational c;
};
struct not_divisible_error : error {
    not_divisible_error(const std::string& msg, QPoly rem)
        : error(msg), remainder(std::move(rem)) {}
    QPoly remainder;
};

// degree-1 parametrization of a projective line
Parametrization parametrize_line(const QPoly& L);

// degree-2 parametrization of a smooth conic through a rational point found
// by bounded height search
Parametrization parametrize_conic(const QPoly& C, long height_bound = 40);

// F composed with phi: binary form of degree deg F * deg phi
QPoly pullback_on_curve(const QPoly& F, const Parametrization& phi);

struct SplitResult {
    bool splits;
    QPoly square_root;  // w with F1.phi = c * w^2, when splits
    Rational constant;  // c
    // complete factorization witnesses with odd multiplicity, when not split
    std::vector<std::pair<QPoly, int>> odd_orders;
};

// Does the preimage of the parametrized curve split on the double cover
// z^2 = F1? Equivalent to F1.phi being a square up to a constant.
SplitResult split_test(const QPoly& F1, const Parametrization& phi);

struct IdentityWitness {
    QPoly G1, G2, H;
    int k;
    bool verified;
    bool no_cancellation;
};

// Searches deg G2 = 0..dmax for forms with F2 * H * z^k = G1^2 - G2^2 * F1,
// by linearizing along phi. dmax < 0 means deg F2.
IdentityWitness find_identity(const QPoly& F1, const QPoly& F2, const Parametrization& phi,
                              int dmax = -1);

// Checks R = G1^2 - G2^2*F1 = F2 * H * z^k and returns (H, k); throws
// not_divisible_error otherwise.
std::pair<QPoly, int> verify_identity(const QPoly& F1, const QPoly& F2, const QPoly& G1,
                                      const QPoly& G2);

// true iff gcd(2*(G1^2 + G2^2*F1), G1^2 - G2^2*F1) is constant
bool no_cancellation_check(const QPoly& G1, const QPoly& G2, const QPoly& F1);

} // namespace pcl

#endif
