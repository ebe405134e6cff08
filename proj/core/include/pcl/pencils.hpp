#ifndef PCL_PENCILS_HPP
#define PCL_PENCILS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcl/qpoly.hpp"
#include "pcl/unifactor.hpp"

namespace pcl {

// a question the implemented procedures cannot decide either way
struct not_checkable_error : error {
    using error::error;
};

// lambda*P + mu*Q, degree d >= 1, gcd(P,Q) = 1
class Pencil {
  public:
    Pencil(QPoly p, QPoly q);

    const QPoly& p() const { return p_; }
    const QPoly& q() const { return q_; }
    int degree() const { return p_.degree(); }

  private:
    QPoly p_, q_;
};

// A point of the parameter line: rational (lambda:mu), or algebraic through
// the monic irreducible minimal polynomial of lambda in the mu=1 chart.
struct PencilParameter {
    bool rational;
    Rational lam, mu; // normalized first-nonzero-positive, coprime integers
    UniQ minpoly;     // monic, irreducible, degree 2..6

    static PencilParameter at(const Rational& l, const Rational& m);
    static PencilParameter algebraic(UniQ monic_minpoly);

    bool operator==(const PencilParameter& o) const;
    bool operator<(const PencilParameter& o) const;
};

std::string to_string(const PencilParameter& p);

QPoly member(const Pencil& pencil, const Rational& lam, const Rational& mu);

struct SpecialFibers {
    std::vector<PencilParameter> parameters;
    // candidate minimal polynomials beyond the supported extension degree
    std::vector<UniQ> unverified;
};

// Parameters of degenerate members: for conic pencils the roots of the
// 3x3 determinant form; in general the parameters with a non-square-free
// member, located through sampled discriminants and verified exactly.
SpecialFibers special_fibers(const Pencil& pencil, std::uint64_t seed = 1);

struct FiberComponent {
    std::string text;  // printable form (over Q or over Q[a]/(m(a)))
    QPoly form;        // valid for rational parameters only
    int multiplicity;
    bool over_extension;
};

struct FiberData {
    PencilParameter parameter;
    std::vector<FiberComponent> components;
    bool residual; // component list may be incompletely factored
    bool in_A;     // reduced support contained in C
    int n_p;       // gcd of multiplicities of the components not in C
};

FiberData fiber_structure(const Pencil& pencil, const PencilParameter& param,
                          const std::optional<QPoly>& C, int dmax);

struct ContainmentReport {
    bool contains;
    bool checkable;
    // (component, parameter of the member containing it)
    std::vector<std::pair<QPoly, PencilParameter>> assignment;
    QPoly residual; // unassigned unfactored part of C (constant 1 when none)
};

ContainmentReport contains_curve(const Pencil& pencil, const QPoly& C, int dmax);

struct OrbifoldSignature {
    int n;                    // punctures: fibers with reduced support in C
    std::vector<int> weights; // n_p > 1 of the remaining special fibers, descending
    std::vector<FiberData> fibers;
    std::vector<std::string> warnings;
};

std::string to_string(const OrbifoldSignature& s);

OrbifoldSignature orbifold_of_pencil(const Pencil& pencil, const QPoly& C, int dmax,
                                     std::uint64_t seed = 1);

} // namespace pcl

#endif
