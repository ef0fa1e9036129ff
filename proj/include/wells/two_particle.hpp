#pragma once

#include "wells/well.hpp"

namespace wells {

/// Inner product of two real states by adaptive quadrature over the
/// intersection of their supports. Disjoint supports short-circuit to
/// an exact 0 — the idealized-well case.
double overlap(const Eigenstate& f, const Eigenstate& g, double abs_tol = 1e-10);

/// The cross term of the two-particle density. For real stationary
/// states both factor integrals equal overlap(psi1, psi2), so the term
/// is its square. Zero exactly for non-overlapping infinite wells,
/// strictly positive whenever the tails overlap.
double interference_term(const Eigenstate& psi1, const Eigenstate& psi2,
                         double abs_tol = 1e-10);

enum class Symmetry { Antisymmetric, Symmetric };

/// The (anti-)symmetrized pair state
///   psi12(a,b) = (psi1(a) psi2(b) -+ psi1(b) psi2(a)) / sqrt(2).
class TwoParticleState {
 public:
  TwoParticleState(Eigenstate left, Eigenstate right,
                   Symmetry symmetry = Symmetry::Antisymmetric);

  double evaluate(double a, double b) const;
  double density(double a, double b) const;

  const Eigenstate& left() const { return left_; }
  const Eigenstate& right() const { return right_; }
  Symmetry symmetry() const { return symmetry_; }

 private:
  Eigenstate left_;
  Eigenstate right_;
  Symmetry symmetry_;
};

/// Uniform sample grid used per axis by the decomposition residual and
/// the density normalization check.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int points = 200;
};

/// Grid spanning the union of both supports.
GridSpec default_grid(const TwoParticleState& state, int points = 200);

/// Max over grid pairs (a,b) of
///   | |psi12(a,b)|^2 - 1/2 |psi1(a)psi2(b)|^2 - 1/2 |psi1(b)psi2(a)|^2 |,
/// i.e. how far the density is from splitting into the two per-well
/// probabilities. Vanishes exactly when the cross term does.
double probability_decomposition_residual(const TwoParticleState& state,
                                          const GridSpec& grid);

/// Delta-x times Delta-p in units of hbar, by quadrature. Momentum
/// variance uses the derivative form integral(psi'^2), valid for real
/// bound states. Falls back to central differences when the state
/// carries no derivative evaluator.
double uncertainty_product(const Eigenstate& e, double abs_tol = 1e-10);

/// lambda = h / p with h = 2 pi hbar.
double debroglie_wavelength(double momentum, double hbar = 1.0);

}  // namespace wells
