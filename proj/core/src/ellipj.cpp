#include "casimir/ellipj.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

// Landen descent stops once the modulus falls below this value; the
// remaining correction to sin/cos is O(k^2) and far below double precision.
constexpr double kLandenFloor = 1e-15;
constexpr int kMaxLandenSteps = 64;

double nearest_pole(double z, double offset, double period) {
  return offset + period * std::round((z - offset) / period);
}

[[noreturn]] void throw_pole(const char* fn, double z, double pole) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": argument " << z << " is within " << kPoleProximity
     << " of the pole at " << pole;
  throw PoleProximity(os.str(), pole);
}

}  // namespace

EllipticModulus EllipticModulus::from_k(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("elliptic modulus must satisfy 0 <= k <= 1");
  }
  return {k, std::sqrt((1.0 - k) * (1.0 + k))};
}

EllipticModulus EllipticModulus::from_complement(double kprime) {
  if (!(kprime >= 0.0 && kprime <= 1.0)) {
    throw DomainError("complementary modulus must satisfy 0 <= k' <= 1");
  }
  return {std::sqrt((1.0 - kprime) * (1.0 + kprime)), kprime};
}

double complete_K(EllipticModulus k) {
  if (k.kprime() <= 0.0) {
    throw DomainError("complete_K: K(k) diverges at k = 1");
  }
  double a = 1.0;
  double b = k.kprime();
  for (int i = 0; i < 64 && std::abs(a - b) > 4e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (a + b);
}

JacobiTriple jacobi_triple(double z, EllipticModulus k) {
  if (z == 0.0) return {0.0, 1.0, 1.0};
  if (k.k() == 0.0) return {std::sin(z), std::cos(z), 1.0};
  if (k.kprime() == 0.0) {
    const double sech = 1.0 / std::cosh(z);
    return {std::tanh(z), sech, sech};
  }

  // Descending sequence k_{n+1} = (1 - k'_n) / (1 + k'_n), written in forms
  // that stay accurate at both ends of the modulus range.
  std::array<double, kMaxLandenSteps + 1> mod{};
  std::array<double, kMaxLandenSteps + 1> comp{};
  mod[0] = k.k();
  comp[0] = k.kprime();
  double v = z;
  int n = 0;
  while (mod[n] >= kLandenFloor && n < kMaxLandenSteps) {
    const double onep = 1.0 + comp[n];
    mod[n + 1] = (mod[n] / onep) * (mod[n] / onep);
    comp[n + 1] = 2.0 * std::sqrt(comp[n]) / onep;
    v /= 1.0 + mod[n + 1];
    ++n;
  }

  double sn = std::sin(v);
  double cn = std::cos(v);
  double dn = 1.0;
  for (int i = n - 1; i >= 0; --i) {
    const double root = mod[i + 1];
    const double s2 = sn * sn;
    const double denom = 1.0 + root * s2;
    // 1 - root*s2 = cn^2 + (1 - root)*s2, and 1 - root = 2 k'_i / (1 + k'_i).
    const double one_minus_root = 2.0 * comp[i] / (1.0 + comp[i]);
    const double next_dn = (cn * cn + one_minus_root * s2) / denom;
    const double next_cn = cn * dn / denom;
    sn = (1.0 + root) * sn / denom;
    cn = next_cn;
    dn = next_dn;
  }
  return {sn, cn, dn};
}

double jacobi_sc(double z, EllipticModulus k) {
  if (k.kprime() == 0.0) return std::sinh(z);
  const double quarter = complete_K(k);
  const double pole = nearest_pole(z, quarter, 2.0 * quarter);
  if (std::abs(z - pole) < kPoleProximity) throw_pole("jacobi_sc", z, pole);
  const JacobiTriple t = jacobi_triple(z, k);
  return t.sn / t.cn;
}

double jacobi_sc_derivative(double z, EllipticModulus k) {
  if (k.kprime() == 0.0) return std::cosh(z);
  const double quarter = complete_K(k);
  const double pole = nearest_pole(z, quarter, 2.0 * quarter);
  if (std::abs(z - pole) < kPoleProximity) {
    throw_pole("jacobi_sc_derivative", z, pole);
  }
  const JacobiTriple t = jacobi_triple(z, k);
  return t.dn / (t.cn * t.cn);
}

double jacobi_ds(double z, EllipticModulus k) {
  double pole = 0.0;
  if (k.kprime() != 0.0) {
    pole = nearest_pole(z, 0.0, 2.0 * complete_K(k));
  }
  if (std::abs(z - pole) < kPoleProximity) throw_pole("jacobi_ds", z, pole);
  if (k.kprime() == 0.0) return 1.0 / std::sinh(z);
  const JacobiTriple t = jacobi_triple(z, k);
  return t.dn / t.sn;
}

}  // namespace casimir
