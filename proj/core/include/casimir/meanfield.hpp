#pragma once

#include <memory>

#include "casimir/models.hpp"

namespace casimir {

/// Solution of the linear bound-state problem (-d^2 + m^2 + V) phi = -eps^2 phi
/// together with the quantities of the variational mean-field approximation.
///
/// The profile is kept in the unnormalized forms
///   delta: exp(-kappa |x|)
///   robin: exp(-q x) - exp(q (x - 2L))
///   hole:  exp(-q R) sin(p x) for x < R,  sin(p R) exp(-q x) for x >= R
/// and the condensate estimate is mu * phi_bs.
class BoundStateSolution {
 public:
  BoundStateSolution(ModelConfig model, PhysicalParams params, double epsilon);

  const ModelConfig& model() const noexcept { return model_; }
  const PhysicalParams& params() const noexcept { return params_; }

  /// Binding energy (inverse length).
  double epsilon() const noexcept { return epsilon_; }
  /// Decay constant sqrt(eps^2 + m^2) outside any potential.
  double q() const noexcept { return q_; }
  /// Inner wave number sqrt(U0 - q^2); hole model only, 0 otherwise.
  double p() const noexcept { return p_; }
  /// Integral of phi_bs^2 over the domain.
  double a() const noexcept { return a_; }
  /// Integral of phi_bs^4 over the domain.
  double b() const noexcept { return b_; }
  /// Variational amplitude minimizing the mean-field energy.
  double mu() const noexcept { return mu_; }

  double value(double x) const;
  double derivative(double x) const;

 private:
  ModelConfig model_;
  PhysicalParams params_;
  double epsilon_;
  double q_;
  double p_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double mu_ = 0.0;
};

/// Critical bound state of the model. The delta model is closed form;
/// Robin and hole binding energies are bracketed on an epsilon grid and
/// bisected. Throws NoCriticalMode for subcritical parameters.
BoundStateSolution bound_state(const ModelConfig& cfg, const PhysicalParams& params);

struct NormConstants {
  double a;
  double b;
};

/// (a, b) = (int phi_bs^2, int phi_bs^4) from their exact antiderivatives.
NormConstants norm_constants(const BoundStateSolution& bs);

/// Same integrals by adaptive quadrature; an independent cross-check.
NormConstants norm_constants_quadrature(const BoundStateSolution& bs,
                                        double rel_tol = 1e-12);

/// E(mu) = -eps^2 mu^2 a / 2 + lambda mu^4 b / 4.
double meanfield_energy_at(double mu, double a, double b, double eps,
                           double lambda);

/// mu = sqrt(eps^2 a / (lambda b)), the minimizer of meanfield_energy_at.
double variational_mu(double a, double b, double eps, double lambda);

/// E_bs = -eps^4 a^2 / (4 lambda b).
double meanfield_energy(const BoundStateSolution& bs);

/// Model-specific closed forms of the mean-field energy, written directly in
/// terms of kappa, q, p, L, R without going through a and b.
double meanfield_energy_closed_form(const BoundStateSolution& bs);

/// Green's function of -d^2 + m^2 + V at zero spectral parameter with the
/// model's boundary conditions: G(x, x') = -u_L(min) u_R(max) / W.
///
/// In the critical regime this operator has the negative eigenvalue -eps^2;
/// G exists whenever W != 0 but is not sign-definite.
class GreensFunction {
 public:
  GreensFunction(const ModelConfig& cfg, const PhysicalParams& params);

  double operator()(double x, double xp) const;
  /// d/dx G(x, x'); at x == x' the right-sided limit.
  double dx(double x, double xp) const;
  double wronskian() const noexcept { return wronskian_; }

  /// Homogeneous solution satisfying the left boundary condition.
  double left(double x) const;
  double left_derivative(double x) const;
  /// Homogeneous solution satisfying the right boundary condition.
  double right(double x) const;
  double right_derivative(double x) const;

 private:
  ModelConfig model_;
  PhysicalParams params_;
  double wronskian_ = 0.0;
};

/// First iterate of the integral equation for the correction to mu * phi_bs:
///   dphi(x) = int G(x, x') [-eps^2 mu phi_bs - lambda mu^3 phi_bs^3] dx'.
class FirstOrderCorrection {
 public:
  FirstOrderCorrection(BoundStateSolution bs, double rel_tol = 1e-8);

  double operator()(double x) const;
  double wronskian() const noexcept { return green_.wronskian(); }
  const BoundStateSolution& bound_state() const noexcept { return bs_; }

 private:
  BoundStateSolution bs_;
  GreensFunction green_;
  double rel_tol_;
};

/// Throws SingularOperator when the Wronskian vanishes (the model sits
/// exactly at its threshold).
FirstOrderCorrection first_order_correction(const BoundStateSolution& bs,
                                            double rel_tol = 1e-8);

/// Leading behaviour E ~ -coefficient * delta^2 near threshold, with
/// delta = kappa - threshold (delta, Robin) or U0 - threshold (hole).
struct ThresholdExpansion {
  double coefficient;
  double threshold;
};

/// Robin and hole use the geometry in cfg (L or R); the strength parameter
/// in cfg (kappa or U0) is ignored.
ThresholdExpansion threshold_expansion(const ModelConfig& cfg,
                                       const PhysicalParams& params);

/// kappa_c(L) = m / tanh(m L).
double robin_critical_kappa(double L, double m);

}  // namespace casimir
