#ifndef CSTHERM_QUADRATURE_HPP
#define CSTHERM_QUADRATURE_HPP

#include <functional>

namespace cstherm {

struct QuadratureResult {
  double value;
  double error_estimate;  // absolute
  int subdivisions;
};

// Globally adaptive Gauss-Kronrod (G7, K15) on [a, b]: bisects the interval
// with the largest Kronrod error estimate until the summed estimate drops
// below rel_tol * |integral| (with a small absolute floor for integrals near
// zero). Throws ConvergenceError when max_subdivisions is exhausted.
QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                        double a, double b, double rel_tol,
                                        int max_subdivisions = 4000);

}  // namespace cstherm

#endif
