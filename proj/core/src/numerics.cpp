#include "casimir/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <queue>

#include "casimir/errors.hpp"

namespace casimir::numerics {
namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk61(const RealFn& f, double a, double b) {
  Panel p{a, b, 0.0, 0.0};
  p.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 0, 0.0,
                                                                          &p.error);
  return p;
}

}  // namespace

QuadratureResult integrate(const RealFn& f, double a, double b, double rel_tol,
                           double abs_tol, int max_panels) {
  if (a == b) return {};
  // Global adaptive bisection: always split the panel with the largest error.
  std::priority_queue<Panel> panels;
  panels.push(gk61(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > std::max(rel_tol * std::abs(value), abs_tol) && count < max_panels) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;
    const Panel left = gk61(f, worst.a, mid);
    const Panel right = gk61(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the rounding accumulated by the running updates.
  QuadratureResult r;
  for (; !panels.empty(); panels.pop()) {
    r.value += panels.top().value;
    r.error += panels.top().error;
  }
  if (!std::isfinite(r.value)) {
    throw IntegrationFailure("integrate: non-finite result");
  }
  return r;
}

QuadratureResult integrate_tail(const RealFn& f, double a, double rate,
                                double rel_tol) {
  const auto mapped = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double x = a - std::log(u) / rate;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (rate * u);
  };
  return integrate(mapped, 0.0, 1.0, rel_tol);
}

QuadratureResult integrate_head(const RealFn& f, double a, double rate,
                                double rel_tol) {
  return integrate_tail([&](double x) { return f(-x); }, -a, rate, rel_tol);
}

QuadratureResult integrate_to_infinity(const RealFn& f, double a,
                                       double rel_tol) {
  const auto mapped = [&](double s) {
    if (s >= 1.0) return 0.0;
    const double w = 1.0 - s;
    const double v = f(a + s / w);
    return v == 0.0 ? 0.0 : v / (w * w);
  };
  return integrate(mapped, 0.0, 1.0, rel_tol);
}

double bisect(const RealFn& f, double lo, double hi, double abs_tol) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw DomainError("bisect: f does not change sign on the bracket");
  }
  std::uintmax_t max_iter = 300;
  const auto done = [abs_tol](double a, double b) {
    const double mid = 0.5 * (a + b);
    return std::abs(b - a) <= abs_tol || mid == a || mid == b;
  };
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, done, max_iter);
  return 0.5 * (a + b);
}

std::vector<std::pair<double, double>> sign_change_brackets(
    const RealFn& f, std::span<const double> grid) {
  std::vector<std::pair<double, double>> out;
  if (grid.size() < 2) return out;
  double prev = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = f(grid[i]);
    if (std::isfinite(prev) && std::isfinite(cur)) {
      if (prev == 0.0) {
        out.emplace_back(grid[i - 1], grid[i - 1]);
      } else if ((prev < 0.0) != (cur < 0.0) && cur != 0.0) {
        out.emplace_back(grid[i - 1], grid[i]);
      }
    }
    prev = cur;
  }
  if (std::isfinite(prev) && prev == 0.0) {
    out.emplace_back(grid.back(), grid.back());
  }
  return out;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = b;
  return out;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
  std::vector<double> out = linspace(std::log(a), std::log(b), n);
  for (double& v : out) v = std::exp(v);
  if (n > 0) {
    out.front() = a;
    out.back() = b;
  }
  return out;
}

}  // namespace casimir::numerics
