#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested too close to a pole of a Jacobi ratio.
class PoleProximity : public Error {
 public:
  PoleProximity(const std::string& what, double pole)
      : Error(what), pole_(pole) {}
  double pole() const noexcept { return pole_; }

 private:
  double pole_;
};

/// The parameters are subcritical: the linear problem has no unstable mode.
class NoCriticalMode : public Error {
 public:
  using Error::Error;
};

/// No critical regime exists for any interval length (kappa <= m).
class NoCriticalRegime : public Error {
 public:
  using Error::Error;
};

/// Two homogeneous solutions are linearly dependent (vanishing Wronskian).
class SingularOperator : public Error {
 public:
  SingularOperator(const std::string& what, double wronskian)
      : Error(what), wronskian_(wronskian) {}
  double wronskian() const noexcept { return wronskian_; }

 private:
  double wronskian_;
};

/// A matching condition has no admissible root. Carries the sampled residuals.
class NoSolution : public Error {
 public:
  NoSolution(const std::string& what,
             std::vector<std::pair<double, double>> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<std::pair<double, double>>& trace() const noexcept {
    return trace_;
  }

 private:
  std::vector<std::pair<double, double>> trace_;
};

/// Robin model inside the k-gap: no nonsingular elliptic modulus exists.
class KGapError : public Error {
 public:
  KGapError(const std::string& what, std::vector<double> rejected)
      : Error(what), rejected_(std::move(rejected)) {}
  const std::vector<double>& rejected_roots() const noexcept {
    return rejected_;
  }

 private:
  std::vector<double> rejected_;
};

/// A closed-form expression hits a removable or logarithmic singularity.
class Singularity : public Error {
 public:
  using Error::Error;
};

/// Critical Robin parameters handed to the condensate-free pipeline.
class CriticalWithoutCondensate : public Error {
 public:
  using Error::Error;
};

/// The mode-generating function vanishes on [m, inf): the background is unstable.
class UnstableSpectrum : public Error {
 public:
  UnstableSpectrum(const std::string& what, std::vector<double> zeros)
      : Error(what), zeros_(std::move(zeros)) {}
  const std::vector<double>& zeros() const noexcept { return zeros_; }

 private:
  std::vector<double> zeros_;
};

/// A finite-difference stencil straddles two solution branches.
class BranchCrossing : public Error {
 public:
  using Error::Error;
};

/// Quadrature or ODE integration did not reach the requested accuracy.
class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
