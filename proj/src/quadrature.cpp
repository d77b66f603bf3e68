#include "cstherm/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "cstherm/errors.hpp"
#include "cstherm/kahan.hpp"

namespace cstherm {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae (positive half) and weights from the QUADPACK tables.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// 7-point Gauss weights, matching the even-index Kronrod abscissae.
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
  double a;
  double b;
  double value;  // K15 estimate
  double error;  // |K15 - G7|

  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = wgk[7] * f(center);
  double gauss = wg[3] * f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += wgk[j] * fsum;
    if (j % 2 == 1) gauss += wg[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return Interval{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                        double a, double b, double rel_tol,
                                        int max_subdivisions) {
  if (!(rel_tol > 0.0)) {
    throw std::domain_error("adaptive_gauss_kronrod: rel_tol must be > 0");
  }
  if (a == b) return QuadratureResult{0.0, 0.0, 0};

  std::priority_queue<Interval> queue;
  queue.push(evaluate(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;

  int subdivisions = 0;
  const double abs_floor = 1e-300;

  while (total_error > rel_tol * std::max(std::abs(total_value), abs_floor)) {
    if (subdivisions >= max_subdivisions) {
      throw ConvergenceError("adaptive_gauss_kronrod: subdivision limit reached");
    }
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      throw ConvergenceError("adaptive_gauss_kronrod: interval underflow");
    }
    const Interval left = evaluate(f, worst.a, mid);
    const Interval right = evaluate(f, mid, worst.b);
    queue.push(left);
    queue.push(right);
    ++subdivisions;

    // refresh the global sums from the live intervals to avoid drift
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    if ((subdivisions & 63) == 0) {
      KahanAccumulator v, e;
      std::priority_queue<Interval> copy = queue;
      while (!copy.empty()) {
        v.add(copy.top().value);
        e.add(copy.top().error);
        copy.pop();
      }
      total_value = v.total();
      total_error = e.total();
    }
  }

  KahanAccumulator v;
  std::priority_queue<Interval> copy = queue;
  double err_sum = 0.0;
  while (!copy.empty()) {
    v.add(copy.top().value);
    err_sum += copy.top().error;
    copy.pop();
  }
  return QuadratureResult{v.total(), err_sum, subdivisions};
}

}  // namespace cstherm
