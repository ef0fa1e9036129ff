#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsets/cloud.hpp"

namespace qsets {

/// A finite lattice given extensionally: named elements, the order
/// relation, and full meet/join tables.
class FiniteLattice {
 public:
  /// Builds from a partial order; meet and join are computed as the
  /// unique greatest lower / least upper bounds. Throws DomainError if
  /// the relation is not a partial order or some pair has no unique
  /// meet or join.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  std::vector<std::vector<bool>> leq);

  /// Builds from explicit tables (used by the cloud-lattice
  /// construction, whose operations are intersection and
  /// cloud-of-union). No law checking here; see check_lattice_laws.
  static FiniteLattice from_tables(std::vector<std::string> names,
                                   std::vector<std::vector<bool>> leq,
                                   std::vector<std::vector<int>> meet,
                                   std::vector<std::vector<int>> join);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  bool leq(int i, int j) const { return leq_[i][j]; }
  int meet(int i, int j) const { return meet_[i][j]; }
  int join(int i, int j) const { return join_[i][j]; }

 private:
  FiniteLattice() = default;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> join_;
};

/// Result of an exhaustive law check. The witness holds element indices
/// of the first violating triple in lexicographic order, so reruns are
/// deterministic.
struct LawReport {
  bool holds = true;
  std::optional<std::array<int, 3>> witness;
};

/// a ^ (b v c) == (a ^ b) v (a ^ c) over all triples.
LawReport check_distributive(const FiniteLattice& lattice);

/// a <= c  implies  a v (b ^ c) == (a v b) ^ c, over all triples.
LawReport check_modular(const FiniteLattice& lattice);

/// Commutativity, associativity, idempotence and absorption of the
/// tables, checked exhaustively. Violations are described as text.
struct LatticeLawsReport {
  bool ok = true;
  std::vector<std::string> violations;
};
LatticeLawsReport check_lattice_laws(const FiniteLattice& lattice);

/// The lattice of cloud extents of all composition-distinct subqsets of
/// the ambient, ordered by inclusion. Meet is plain intersection of
/// extents; join is the cloud of the union. Throws ResourceError when
/// qcard(ambient) exceeds the bound.
FiniteLattice build_cloud_lattice(const Qset& ambient, long qcard_bound = 12);

}  // namespace qsets
