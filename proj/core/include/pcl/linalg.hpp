#ifndef PCL_LINALG_HPP
#define PCL_LINALG_HPP

#include <vector>

#include "pcl/rational.hpp"

namespace pcl {

using Mat = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Mat& m);

// Basis of the right nullspace of m (cols unknowns), deterministic
// (free variables in increasing column order).
std::vector<std::vector<Rational>> nullspace(const Mat& m, int cols);

Rational det3(const Mat& m);
Mat inverse3(const Mat& m); // throws on singular input

} // namespace pcl

#endif
