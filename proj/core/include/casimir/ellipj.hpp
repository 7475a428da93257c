#pragma once

// Jacobi elliptic functions of real argument and real modulus 0 <= k <= 1,
// computed with the descending Landen transformation, plus the complete
// elliptic integral of the first kind via the arithmetic-geometric mean.

namespace casimir {

/// Elliptic modulus k together with its complement k' = sqrt(1 - k^2).
///
/// Both are stored because the condensate solutions frequently need a
/// modulus of the form sqrt(1 - q^2); building it with from_complement(q)
/// keeps k' exact instead of recovering it through a cancelling square root.
class EllipticModulus {
 public:
  /// Throws DomainError unless 0 <= k <= 1.
  static EllipticModulus from_k(double k);
  /// Modulus whose complement is `kprime`. Throws DomainError unless 0 <= kprime <= 1.
  static EllipticModulus from_complement(double kprime);

  double k() const noexcept { return k_; }
  double kprime() const noexcept { return kprime_; }

 private:
  EllipticModulus(double k, double kprime) : k_(k), kprime_(kprime) {}
  double k_;
  double kprime_;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// Distance (argument units) below which sc/ds refuse to evaluate.
inline constexpr double kPoleProximity = 1e-9;

/// Quarter period K(k). Throws DomainError for k = 1, where K diverges.
double complete_K(EllipticModulus k);

/// (sn, cn, dn) at real z. Exact sin/cos/1 at k = 0 and tanh/sech/sech at k = 1.
JacobiTriple jacobi_triple(double z, EllipticModulus k);

/// sn/cn. Poles at z = K (mod 2K); throws PoleProximity within kPoleProximity.
double jacobi_sc(double z, EllipticModulus k);

/// dn/sn. Poles at z = 0 (mod 2K); throws PoleProximity within kPoleProximity.
double jacobi_ds(double z, EllipticModulus k);

/// d/dz sc = dc * nc = dn / cn^2, with the same pole guard as jacobi_sc.
double jacobi_sc_derivative(double z, EllipticModulus k);

}  // namespace casimir
