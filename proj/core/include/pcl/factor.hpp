#ifndef PCL_FACTOR_HPP
#define PCL_FACTOR_HPP

#include <utility>
#include <vector>

#include "pcl/qpoly.hpp"

namespace pcl {

struct BoundedFactorization {
    // normalized irreducible factors of degree <= dmax, with multiplicities,
    // sorted by (degree, term order)
    std::vector<std::pair<QPoly, int>> factors;
    // normalized unfactored cofactor; constant 1 when the factorization is
    // complete up to the bound
    QPoly residual;

    bool complete() const { return residual.is_constant(); }
};

// Irreducible factors over Q of degree <= dmax. Univariate and binary
// homogeneous inputs are factored completely; genuinely bivariate content is
// searched degree by degree via specialization and interpolation. A
// nontrivial residual is a legal outcome.
BoundedFactorization factor_bounded(const QPoly& p, int dmax);

} // namespace pcl

#endif
