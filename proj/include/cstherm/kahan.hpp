#ifndef CSTHERM_KAHAN_HPP
#define CSTHERM_KAHAN_HPP

#include <cmath>

namespace cstherm {

/*!
  Compensated accumulator (Neumaier variant of Kahan summation).

  Tracks the rounding error of every addition and folds it back into the
  result, so long sums keep close to working-precision accuracy. Drop-in
  replacement for a plain `double sum; sum += x;` loop.
*/
struct KahanAccumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  double total() const { return sum + compensation; }
};

}  // namespace cstherm

#endif
