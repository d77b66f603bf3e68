#include "cstherm/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cstherm/errors.hpp"

namespace cstherm {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5.0;
constexpr double c3 = 3.0 / 10.0;
constexpr double c4 = 4.0 / 5.0;
constexpr double c5 = 8.0 / 9.0;

constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;

// fifth-order minus embedded fourth-order weights
constexpr double e1 = 71.0 / 57600.0;
constexpr double e3 = -71.0 / 16695.0;
constexpr double e4 = 71.0 / 1920.0;
constexpr double e5 = -17253.0 / 339200.0;
constexpr double e6 = 22.0 / 525.0;
constexpr double e7 = -1.0 / 40.0;

constexpr double kSafety = 0.9;
constexpr double kShrinkLimit = 0.2;
constexpr double kGrowLimit = 5.0;

}  // namespace

OdeSolution::OdeSolution(std::vector<double> x, std::vector<double> y,
                         std::vector<double> f)
    : x_(std::move(x)), y_(std::move(y)), f_(std::move(f)) {}

double OdeSolution::sample(double xq) const {
  const double lo = x_.front();
  const double hi = x_.back();
  const bool forward = hi >= lo;
  const double span = std::abs(hi - lo);
  const double slack = 1e-12 * std::max(span, 1.0);
  if (forward ? (xq < lo - slack || xq > hi + slack)
              : (xq > lo + slack || xq < hi - slack)) {
    throw std::domain_error("OdeSolution::sample: query outside integration range");
  }

  // locate the bracketing accepted step
  std::size_t k;
  if (forward) {
    k = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin());
  } else {
    k = static_cast<std::size_t>(
        std::upper_bound(x_.begin(), x_.end(), xq, std::greater<double>()) - x_.begin());
  }
  if (k == 0) k = 1;
  if (k >= x_.size()) k = x_.size() - 1;

  const double x0 = x_[k - 1], x1 = x_[k];
  const double h = x1 - x0;
  if (h == 0.0) return y_[k];
  const double t = (xq - x0) / h;

  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * y_[k - 1] + h * h10 * f_[k - 1] + h01 * y_[k] + h * h11 * f_[k];
}

OdeSolution integrate_scalar_ivp(const std::function<double(double, double)>& f,
                                 double x0, double x1, double y0,
                                 const OdeOptions& opts) {
  if (!std::isfinite(x0) || !std::isfinite(x1) || x0 == x1) {
    throw std::domain_error("integrate_scalar_ivp: need finite x0 != x1");
  }
  if (!(opts.rtol > 0.0)) {
    throw std::domain_error("integrate_scalar_ivp: rtol must be > 0");
  }

  const double direction = (x1 > x0) ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);

  std::vector<double> xs{x0};
  std::vector<double> ys{y0};
  std::vector<double> fs{f(x0, y0)};

  double x = x0;
  double y = y0;
  double k1 = fs.front();

  double h = span / 100.0;
  if (opts.max_step > 0.0) h = std::min(h, opts.max_step);

  bool last_rejected = false;
  long steps = 0;

  while (direction * (x1 - x) > 0.0) {
    if (++steps > opts.max_steps) {
      throw ConvergenceError("integrate_scalar_ivp: step budget exhausted");
    }
    if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x), 1.0)) {
      throw ConvergenceError("integrate_scalar_ivp: step size underflow");
    }
    h = std::min(h, std::abs(x1 - x));
    const double hd = direction * h;

    const double k2 = f(x + c2 * hd, y + hd * (a21 * k1));
    const double k3 = f(x + c3 * hd, y + hd * (a31 * k1 + a32 * k2));
    const double k4 = f(x + c4 * hd, y + hd * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = f(x + c5 * hd, y + hd * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 =
        f(x + hd, y + hd * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y_new =
        y + hd * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    const double k7 = f(x + hd, y_new);  // FSAL: reused as the next k1

    const double err_term =
        hd * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double scale =
        opts.atol + opts.rtol * std::max(std::abs(y), std::abs(y_new));
    const double err = std::abs(err_term) / scale;

    if (!std::isfinite(err) || !std::isfinite(y_new)) {
      // trial step left the representable range; retry shorter
      h *= 0.5;
      last_rejected = true;
      continue;
    }

    if (err <= 1.0) {
      x += hd;
      y = y_new;
      k1 = k7;
      xs.push_back(x);
      ys.push_back(y);
      fs.push_back(k1);

      double factor = kSafety * std::pow(err > 0.0 ? err : 1e-10, -0.2);
      factor = std::clamp(factor, kShrinkLimit, last_rejected ? 1.0 : kGrowLimit);
      h *= factor;
      if (opts.max_step > 0.0) h = std::min(h, opts.max_step);
      last_rejected = false;
    } else {
      const double factor =
          std::clamp(kSafety * std::pow(err, -0.2), kShrinkLimit, 1.0);
      h *= factor;
      last_rejected = true;
    }
  }

  return OdeSolution(std::move(xs), std::move(ys), std::move(fs));
}

}  // namespace cstherm
