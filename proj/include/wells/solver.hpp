#pragma once

#include <vector>

#include "wells/well.hpp"

namespace wells {

/// n-th stationary state of an infinite square well:
///   psi_n(x) = sqrt(1/eps) sin(n pi (x - left) / (2 eps)) inside,
///   identically zero outside;  E_n = n^2 pi^2 hbar^2 / (2 m (2 eps)^2).
Eigenstate infinite_well_eigenstate(const WellSpec& w, int n);

/// All bound states of a finite square well, ordered by energy.
/// Solves the even/odd matching conditions
///   z tan z = sqrt(z0^2 - z^2)   and   -z cot z = sqrt(z0^2 - z^2)
/// with z = k eps and z0 = eps sqrt(2 m V0) / hbar, by bracketed
/// bisection to 1e-12 in z. A 1-D finite well always binds at least one
/// state. Wavefunctions are sinusoidal inside with exponential tails,
/// normalized in closed form.
std::vector<Eigenstate> finite_well_bound_states(const WellSpec& w);

}  // namespace wells
