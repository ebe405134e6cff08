#ifndef PCL_PARAMETRIZATION_HPP
#define PCL_PARAMETRIZATION_HPP

#include <vector>

#include "pcl/qpoly.hpp"

namespace pcl {

// A rational map P^1 -> P^2 given by three binary forms in (t,s) of common
// degree, coprime as a triple.
struct Parametrization {
    QPoly x, y, z;

    Parametrization(QPoly a, QPoly b, QPoly c);

    int degree() const { return deg_; }
    std::vector<QPoly> images() const { return {x, y, z}; }

  private:
    int deg_;
};

// F(x,y,z) composed with the parametrization: a binary form in (t,s).
QPoly compose(const QPoly& form, const Parametrization& phi);

} // namespace pcl

#endif
