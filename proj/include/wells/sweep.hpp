#pragma once

#include <string>
#include <vector>

#include "wells/well.hpp"

namespace wells {

/// A symmetric pair of wells plus the quantum number used for the
/// single-particle states (ground states by default).
struct WellPair {
  WellSpec left;
  WellSpec right;
  int n = 1;
};

struct SweepRow {
  double separation = 0.0;
  double depth = 0.0;  // kInfiniteDepth for the idealized rows
  double interference = 0.0;
  double residual = 0.0;
};

/// Parameter study over center separations and depths. For each row the
/// base pair is re-centered at -+ separation/2 and given the row's
/// depth; interference and the decomposition residual are computed for
/// the antisymmetric pair state. Separations must be positive and
/// strictly increasing. Row order is separations outer, depths inner,
/// both in input order.
std::vector<SweepRow> separation_sweep(const WellPair& base,
                                       const std::vector<double>& separations,
                                       const std::vector<double>& depths,
                                       double abs_tol = 1e-10);

/// CSV with the fixed header "separation,depth,interference,residual".
/// Infinite depths print as "inf".
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace wells
