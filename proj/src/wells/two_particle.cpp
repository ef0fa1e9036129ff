#include "wells/two_particle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wells/quadrature.hpp"

namespace wells {

double overlap(const Eigenstate& f, const Eigenstate& g, double abs_tol) {
  if (!f.psi || !g.psi) throw DomainError("overlap requires evaluators");
  const double lo = std::max(f.support.lo, g.support.lo);
  const double hi = std::min(f.support.hi, g.support.hi);
  if (!(lo < hi)) {
    // Disjoint supports: the product vanishes identically (infinite
    // wells) or below the tail truncation threshold (finite wells).
    return 0.0;
  }
  return integrate([&](double x) { return f.psi(x) * g.psi(x); }, lo, hi, abs_tol);
}

double interference_term(const Eigenstate& psi1, const Eigenstate& psi2,
                         double abs_tol) {
  const double ov = overlap(psi1, psi2, abs_tol);
  return ov * ov;
}

TwoParticleState::TwoParticleState(Eigenstate left, Eigenstate right,
                                   Symmetry symmetry)
    : left_(std::move(left)), right_(std::move(right)), symmetry_(symmetry) {
  if (!left_.psi || !right_.psi) {
    throw DomainError("two-particle state requires evaluators");
  }
}

double TwoParticleState::evaluate(double a, double b) const {
  static const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double direct = left_.psi(a) * right_.psi(b);
  const double exchanged = left_.psi(b) * right_.psi(a);
  return symmetry_ == Symmetry::Antisymmetric
             ? inv_sqrt2 * (direct - exchanged)
             : inv_sqrt2 * (direct + exchanged);
}

double TwoParticleState::density(double a, double b) const {
  const double v = evaluate(a, b);
  return v * v;
}

GridSpec default_grid(const TwoParticleState& state, int points) {
  GridSpec grid;
  grid.lo = std::min(state.left().support.lo, state.right().support.lo);
  grid.hi = std::max(state.left().support.hi, state.right().support.hi);
  grid.points = points;
  return grid;
}

double probability_decomposition_residual(const TwoParticleState& state,
                                          const GridSpec& grid) {
  if (state.symmetry() != Symmetry::Antisymmetric) {
    throw DomainError("decomposition residual is defined for the antisymmetric state");
  }
  if (grid.points < 2) throw DomainError("grid needs at least two points");
  if (!(grid.lo < grid.hi)) throw DomainError("grid interval is empty");

  const auto& psi1 = state.left().psi;
  const auto& psi2 = state.right().psi;
  const double step = (grid.hi - grid.lo) / (grid.points - 1);

  double residual = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    const double a = grid.lo + i * step;
    const double p1a = psi1(a);
    const double p2a = psi2(a);
    for (int j = 0; j < grid.points; ++j) {
      const double b = grid.lo + j * step;
      const double direct = p1a * psi2(b);
      const double exchanged = psi1(b) * p2a;
      const double amplitude = (direct - exchanged) / std::numbers::sqrt2;
      const double split = 0.5 * direct * direct + 0.5 * exchanged * exchanged;
      residual = std::max(residual, std::abs(amplitude * amplitude - split));
    }
  }
  return residual;
}

double uncertainty_product(const Eigenstate& e, double abs_tol) {
  if (!e.psi) throw DomainError("uncertainty needs a wavefunction evaluator");
  const double lo = e.support.lo;
  const double hi = e.support.hi;
  if (!(lo < hi)) throw DomainError("state has an empty support");

  std::function<double(double)> dpsi = e.dpsi;
  if (!dpsi) {
    const double h = (hi - lo) * 1e-7;
    auto psi = e.psi;
    dpsi = [psi, h](double x) { return (psi(x + h) - psi(x - h)) / (2.0 * h); };
  }

  const double norm = integrate([&](double x) { return e.psi(x) * e.psi(x); },
                                lo, hi, abs_tol);
  if (!(norm > 0) || !std::isfinite(norm)) {
    throw NumericError("state norm is not resolvable on the support");
  }
  const double mean_x =
      integrate([&](double x) { return x * e.psi(x) * e.psi(x); }, lo, hi, abs_tol) /
      norm;
  const double mean_x2 =
      integrate([&](double x) { return x * x * e.psi(x) * e.psi(x); }, lo, hi,
                abs_tol) /
      norm;
  const double var_x = mean_x2 - mean_x * mean_x;

  // <p> = 0 for a real bound state; <p^2> = hbar^2 integral(psi'^2).
  const double p2 =
      e.hbar * e.hbar *
      integrate([&](double x) { return dpsi(x) * dpsi(x); }, lo, hi, abs_tol) / norm;
  if (!(var_x >= 0) || !(p2 >= 0) || !std::isfinite(p2)) {
    throw NumericError("uncertainty integrals are not resolvable on the grid");
  }
  return std::sqrt(var_x) * std::sqrt(p2) / e.hbar;
}

double debroglie_wavelength(double momentum, double hbar) {
  if (!(hbar > 0)) throw DomainError("hbar must be positive");
  if (momentum == 0.0) throw DomainError("de Broglie wavelength requires p != 0");
  return 2.0 * std::numbers::pi * hbar / momentum;
}

}  // namespace wells
