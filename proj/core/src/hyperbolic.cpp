#include "hyperbolic.hpp"

#include <cmath>

namespace casimir::detail {

// exp(-2x) * (sinh(2x) - 2x), series below x = 0.5 to avoid cancellation.
double scaled_sinh_excess(double x) {
  if (x < 0.5) {
    const double y = 2.0 * x;
    double term = y * y * y / 6.0;
    double sum = 0.0;
    for (int n = 3; n < 60 && std::abs(term) > 1e-18 * std::abs(sum); n += 2) {
      sum += term;
      term *= y * y / ((n + 1.0) * (n + 2.0));
    }
    return std::exp(-2.0 * x) * sum;
  }
  return 0.5 * (1.0 - std::exp(-4.0 * x)) - 2.0 * x * std::exp(-2.0 * x);
}

// exp(-4x) * (12x - 8 sinh(2x) + sinh(4x)); the series starts at 6.4 x^5.
double scaled_s4(double x) {
  if (x < 0.5) {
    double sum = 0.0;
    double fact = 1.0;
    double power = x;
    double p2 = 2.0;
    double p4 = 4.0;
    for (int n = 1; n < 80; ++n) {
      if (n > 1) {
        fact *= n;
        power *= x;
        p2 *= 2.0;
        p4 *= 4.0;
      }
      if (n % 2 == 1 && n >= 5) {
        const double term = (p4 - 8.0 * p2) * power / fact;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      }
    }
    return std::exp(-4.0 * x) * sum;
  }
  const double e2 = std::exp(-2.0 * x);
  const double e4 = e2 * e2;
  return 12.0 * x * e4 - 4.0 * (e2 - e4 * e2) + 0.5 * (1.0 - e4 * e4);
}

}  // namespace casimir::detail
