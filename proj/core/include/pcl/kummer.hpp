#ifndef PCL_KUMMER_HPP
#define PCL_KUMMER_HPP

#include "pcl/orbgroups.hpp"
#include "pcl/pencils.hpp"
#include "pcl/qpoly.hpp"

namespace pcl {

// The self-cover of the plane raising each coordinate of the (L1,L2,L3)
// frame to the n-th power.
class KummerMap {
  public:
    KummerMap(QPoly l1, QPoly l2, QPoly l3, int n);

    const QPoly& l1() const { return l1_; }
    const QPoly& l2() const { return l2_; }
    const QPoly& l3() const { return l3_; }
    int exponent() const { return n_; }
    const LinearChange& frame() const { return frame_; }

  private:
    QPoly l1_, l2_, l3_;
    int n_;
    LinearChange frame_;
};

// Rewrite F in the frame coordinates, then substitute each frame variable
// by the n-th power of its line. Multiplicative; deg = n * deg F.
QPoly pullback(const QPoly& F, const KummerMap& f);

// The pencil generated by the pullbacks of the generators, gcd removed.
Pencil pullback_pencil(const Pencil& pencil, const KummerMap& f);

struct KummerSignature {
    OrbifoldSignature signature; // of the pulled-back pencil against f*C
    bool reduced_found;          // a quotient with weights [2, n] exists
    std::vector<int> reduced_weights;
    NamedGroup group;            // identified from (n; reduced weights)
};

// The full construction: tangency checks on (C, L1, L2, L3), pullback of the
// pencil generated by C and L1*L2, orbifold signature of the pulled-back
// pencil against f_n*C, and the divisor-quotient reduction towards [2, n].
KummerSignature kummer_orbifold(const QPoly& C, const QPoly& L1, const QPoly& L2,
                                const QPoly& L3, int n, int dmax, bool checked = true,
                                std::uint64_t seed = 1);

} // namespace pcl

#endif
