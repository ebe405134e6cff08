#ifndef PCL_QPOLY_HPP
#define PCL_QPOLY_HPP

#include <string>
#include <vector>

#include "pcl/linalg.hpp"
#include "pcl/mpoly.hpp"
#include "pcl/seedrng.hpp"

namespace pcl {

using QPoly = MPoly<Rational>;

// --- canonical form over Q ---

// Unique scalar multiple with coprime integer coefficients and positive
// leading (graded-lex first) coefficient. The zero polynomial is fixed.
QPoly normalize(const QPoly& p);

// p == normalize(p) * unit_scale(p) for nonzero p.
Rational unit_scale(const QPoly& p);

// --- text grammar ---

// Parses "2*z^2 - x^2 - y^2", "1/2*x + y", ... Variables must all belong to
// one family ({x,y,z}, {u,v} or {t,s}); a pure constant takes the family
// hint. Throws parse_error.
QPoly parse_poly(const std::string& text, Vars hint = Vars::XYZ);
QPoly parse_poly_as(const std::string& text, Vars required);

std::string to_string(const QPoly& p);

// --- linear coordinate changes ---

class LinearChange {
  public:
    explicit LinearChange(Mat m); // 3x3, throws on zero determinant
    static LinearChange identity();
    static LinearChange random_frame(SeedRng& rng);
    // rows are the linear forms L1,L2,L3 (throws if dependent)
    static LinearChange from_rows(const QPoly& l1, const QPoly& l2, const QPoly& l3);

    const Mat& matrix() const { return m_; }
    LinearChange inverse() const;

    // The linear forms M*(x,y,z)^T as polynomials.
    std::vector<QPoly> images() const;

  private:
    Mat m_;
};

// Substitutes variables by the linear forms of M (degree preserved).
QPoly change_coordinates(const QPoly& p, const LinearChange& M);

// --- spec-facing kernel operations ---

// Normalized gcd over Q; rejects the both-zero input.
QPoly gcd(const QPoly& p, const QPoly& q);

// Sylvester resultant eliminating var; zero inputs rejected.
QPoly resultant_q(const QPoly& p, const QPoly& q, int var);

// Square-free factors (normalized) with multiplicities, ordered by
// multiplicity then graded-lex.
std::vector<std::pair<QPoly, int>> squarefree_q(const QPoly& p);

// Enforce the API degree cap.
void check_degree_cap(const QPoly& p);

// Homogenize an affine/dehomogenized polynomial back into variable v at the
// given total degree (deg >= p.degree()).
QPoly homogenize(const QPoly& p, int v, int deg);

} // namespace pcl

#endif
