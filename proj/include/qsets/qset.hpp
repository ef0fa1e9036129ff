#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsets/universe.hpp"

namespace qsets {

// Designates one element of a carrier qset without granting it an
// identity. The index is an opaque internal token: every public
// predicate must be invariant under reindexing within a quantum
// species. For classical species the index selects a label (in sorted
// label order), which is observable anyway.
struct ElementHandle {
  std::string species;
  std::uint32_t index = 0;
};

/// A collection over a universe: per-species counts for quantum species
/// (no element records — counting is possible, labeling is not) plus an
/// ordinary labeled set per classical species.
///
/// Values are immutable after construction; all operations are pure.
class Qset {
 public:
  Qset(UniversePtr universe, std::map<std::string, long> counts,
       std::map<std::string, std::set<std::string>> members = {});

  static Qset empty(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }

  /// Quasi-cardinal: total quantum count plus classical member count.
  long qcard() const;
  bool is_empty() const { return qcard() == 0; }

  long count(const std::string& species) const;
  const std::set<std::string>& members(const std::string& species) const;
  const std::map<std::string, long>& counts() const { return counts_; }
  const std::map<std::string, std::set<std::string>>& all_members() const {
    return members_;
  }

  /// Subqset relation: per-species counts dominated, labels included.
  bool contains(const Qset& other) const;

  /// Handle to one element; quantum indices are interchangeable tokens.
  ElementHandle element(const std::string& species, std::uint32_t index) const;

  /// Canonical text form, e.g. "{e:2, person:{Paul,Peter}}".
  /// Deterministic; used as sort key and in reports.
  std::string describe() const;

 private:
  friend Qset permute_internal_labels(const Qset& q, const std::string& species,
                                      const std::vector<std::size_t>& perm);

  UniversePtr universe_;
  std::map<std::string, long> counts_;                    // nonzero entries only
  std::map<std::string, std::set<std::string>> members_;  // nonempty only
  // Internal element tokens per quantum species. Carried only so the
  // test harness can permute them and assert that no public output
  // changes; nothing below ever reads them back into a result.
  std::map<std::string, std::vector<std::uint32_t>> tokens_;
};

bool same_universe(const Qset& a, const Qset& b);

long qcard(const Qset& q);

/// True iff the compositions agree and the classical member sets agree.
/// Indiscernible qsets are interchangeable in every public operation.
bool indiscernible(const Qset& a, const Qset& b);

/// Union with additive count semantics, saturating at the ambient count
/// (exact for disjoint operands). Classical members take the set union.
Qset unite(const Qset& a, const Qset& b);

/// Per-species minimum of counts; set intersection of labels.
Qset intersect(const Qset& a, const Qset& b);

/// Counts subtract, floored at zero; set difference of labels.
Qset subtract(const Qset& a, const Qset& b);

/// All composition-distinct subqsets of q with quasi-cardinal eta,
/// in deterministic order. Choices of which indiscernible element goes
/// where do not produce distinct subqsets.
std::vector<Qset> subqsets_of_qcard(const Qset& q, long eta);

/// Pairwise-disjoint subqsets of q with the requested quasi-cardinals,
/// allocated greedily in species order. Disjointness is guaranteed by
/// the allocation (no ambient element is spent twice): per species the
/// part counts sum to at most q's count, and classical labels are
/// literally disjoint.
std::vector<Qset> disjoint_partition(const Qset& q,
                                     const std::vector<long>& parts);

/// Executes (A - {x}) U {y} for one element of the given species, with
/// x taken from A and y from outside A, and reports whether the result
/// is indiscernible from A. Quantum species always yield true; classical
/// species always yield false, since the inserted individual is a
/// different one.
bool swap_indiscernibility_check(const Qset& a, const std::string& species);

/// Reorders the internal tokens of a quantum species. The result must
/// be observationally identical to q; this operation exists so property
/// tests can assert exactly that.
Qset permute_internal_labels(const Qset& q, const std::string& species,
                             const std::vector<std::size_t>& perm);

}  // namespace qsets
