#include "wells/sweep.hpp"

#include <cstdio>

#include "wells/solver.hpp"
#include "wells/two_particle.hpp"

namespace wells {

namespace {

Eigenstate state_for(const WellSpec& spec, int n) {
  if (spec.infinite()) return infinite_well_eigenstate(spec, n);
  auto states = finite_well_bound_states(spec);
  if (n < 1 || static_cast<std::size_t>(n) > states.size()) {
    throw DomainError("requested quantum number has no bound state at this depth");
  }
  return states[n - 1];
}

std::string format_value(double v) {
  if (v == kInfiniteDepth) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> separation_sweep(const WellPair& base,
                                       const std::vector<double>& separations,
                                       const std::vector<double>& depths,
                                       double abs_tol) {
  if (separations.empty()) throw DomainError("separation list is empty");
  double prev = 0.0;
  for (double s : separations) {
    if (!(s > 0)) throw DomainError("separations must be positive");
    if (!(s > prev)) throw DomainError("separations must be strictly increasing");
    prev = s;
  }
  if (depths.empty()) throw DomainError("depth list is empty");
  for (double d : depths) {
    if (d != kInfiniteDepth && !(d > 0)) {
      throw DomainError("depths must be positive or infinite");
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(separations.size() * depths.size());
  for (double separation : separations) {
    for (double depth : depths) {
      WellSpec left = base.left;
      WellSpec right = base.right;
      left.center = -separation / 2.0;
      right.center = separation / 2.0;
      left.depth = depth;
      right.depth = depth;

      Eigenstate psi1 = state_for(left, base.n);
      Eigenstate psi2 = state_for(right, base.n);
      TwoParticleState pair(psi1, psi2, Symmetry::Antisymmetric);

      SweepRow row;
      row.separation = separation;
      row.depth = depth;
      row.interference = interference_term(psi1, psi2, abs_tol);
      row.residual = probability_decomposition_residual(pair, default_grid(pair));
      rows.push_back(row);
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "separation,depth,interference,residual\n";
  for (const SweepRow& row : rows) {
    out += format_value(row.separation);
    out += ',';
    out += format_value(row.depth);
    out += ',';
    out += format_value(row.interference);
    out += ',';
    out += format_value(row.residual);
    out += '\n';
  }
  return out;
}

}  // namespace wells
