#ifndef CSTHERM_ODE_HPP
#define CSTHERM_ODE_HPP

#include <functional>
#include <vector>

namespace cstherm {

struct OdeOptions {
  double rtol = 1e-9;       // relative local error tolerance
  double atol = 1e-300;     // absolute floor, guards y near zero
  double max_step = 0.0;    // 0 = unrestricted
  long max_steps = 200000;  // accepted + rejected
};

/*!
  Accepted nodes of an adaptive scalar integration, with the slope at each
  node so the solution can be sampled anywhere in between by cubic Hermite
  interpolation.
*/
class OdeSolution {
 public:
  OdeSolution(std::vector<double> x, std::vector<double> y, std::vector<double> f);

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }

  double x_begin() const { return x_.front(); }
  double x_end() const { return x_.back(); }
  double y_end() const { return y_.back(); }

  // Cubic Hermite interpolation between the bracketing accepted nodes.
  // xq must lie within the integration range.
  double sample(double xq) const;

 private:
  std::vector<double> x_;  // monotone (either direction)
  std::vector<double> y_;
  std::vector<double> f_;  // dy/dx at the nodes
};

/*!
  Adaptive Dormand-Prince 5(4) embedded pair for a scalar IVP
  y' = f(x, y), y(x0) = y0, integrated from x0 to x1 (either direction).

  Step size is controlled by the embedded fourth-order error estimate
  against atol + rtol * |y|. Throws ConvergenceError on step-size
  underflow or when max_steps is exhausted.
*/
OdeSolution integrate_scalar_ivp(const std::function<double(double, double)>& f,
                                 double x0, double x1, double y0,
                                 const OdeOptions& opts = {});

}  // namespace cstherm

#endif
