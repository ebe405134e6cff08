#ifndef PCL_CURVES_HPP
#define PCL_CURVES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcl/parametrization.hpp"
#include "pcl/qpoly.hpp"

namespace pcl {

// "infinite" marker for intersection numbers and Milnor numbers
inline constexpr int kInfinite = -1;

class PlaneCurve {
  public:
    explicit PlaneCurve(QPoly form); // homogeneous in x,y,z, degree >= 1

    const QPoly& form() const { return f_; }
    int degree() const { return f_.degree(); }
    bool is_squarefree() const { return squarefree_; }

  private:
    QPoly f_;
    bool squarefree_;
};

struct ProjPoint {
    std::array<Rational, 3> c; // last nonzero coordinate is 1

    ProjPoint(const Rational& a, const Rational& b, const Rational& d);

    bool operator==(const ProjPoint& o) const { return c == o.c; }
    bool operator<(const ProjPoint& o) const;
};

std::string to_string(const ProjPoint& p);

// A set of singular points that could not be resolved to rational
// coordinates: an irreducible eliminant factor in one chart variable.
struct SingularCluster {
    QPoly eliminant; // irreducible over Q, degree >= 2
    int degree;
    bool verified; // confirmed to carry genuine singular points
};

struct SingularLocus {
    std::vector<ProjPoint> points;          // all rational singular points
    std::vector<SingularCluster> clusters;  // non-rational residue

    bool complete() const { return clusters.empty(); }
};

SingularLocus singular_points(const PlaneCurve& C, std::uint64_t seed = 1);

// Local intersection number of affine curves f,g in (u,v) at P, by the
// axiomatic recursion (symmetry, units, additivity on products, reduction
// modulo the other curve). Returns kInfinite on a shared component through P.
int intersection_multiplicity(const QPoly& f, const QPoly& g,
                              const Rational& pu, const Rational& pv);

// mu = I_P(f_u, f_v) in an affine chart around P; 0 at smooth points,
// kInfinite at non-isolated singularities.
int milnor_number(const PlaneCurve& C, const ProjPoint& P);

enum class AdeType { A, D, E6, E7, E8, NOT_SIMPLE, UNKNOWN_NONRATIONAL };

std::string to_string(AdeType t);

struct SingularityReport {
    ProjPoint point;
    int multiplicity; // >= 2 at a singular point
    int milnor;       // kInfinite when non-isolated
    AdeType type;
    int subscript; // n in A_n / D_n / E_n; 0 when not applicable
};

std::string to_string(const SingularityReport& r);

SingularityReport classify_singularity(const PlaneCurve& C, const ProjPoint& P);

enum class Verdict { PASS, FAIL, NOT_CHECKABLE };

std::string to_string(Verdict v);

struct ConditionReport {
    Verdict verdict;
    std::string evidence;
};

// The four admissibility conditions for the cover construction:
//   (0) deg C1 even
//   (1) C1 has at most simple singularities
//   (2) C2 avoids the singular points of C1
//   (3) C2 meets C1 with even local multiplicity everywhere (via phi)
struct HypothesisReport {
    std::array<ConditionReport, 4> conditions;

    bool all_pass() const {
        for (auto& c : conditions)
            if (c.verdict != Verdict::PASS) return false;
        return true;
    }
};

HypothesisReport check_hypotheses(const PlaneCurve& C1, const PlaneCurve& C2,
                                  const std::optional<Parametrization>& phi,
                                  std::uint64_t seed = 1);

} // namespace pcl

#endif
