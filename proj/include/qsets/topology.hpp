#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsets/cloud.hpp"

namespace qsets {

/// A carrier qset with a finite family of opens (cloud extents).
struct QTopology {
  Qset carrier;
  std::vector<Qset> opens;
};

struct AxiomViolation {
  int axiom = 0;  // 1: empty/carrier, 2: pairwise intersection, 3: unions
  std::string detail;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;
  // How axiom 3 was established: every subfamily, or pairs plus a
  // random sample of subfamilies (for families too large to exhaust).
  bool exhaustive_unions = true;
  int sampled_subfamilies = 0;
};

struct VerifyOptions {
  // Exhaust all 2^n subfamilies while the family has at most this many
  // opens; beyond that, check all pairwise unions plus a seeded sample.
  std::size_t exhaustive_open_limit = 16;
  int sample_subfamilies = 200;
  std::uint64_t seed = 0;
};

AxiomReport verify_axioms(const QTopology& topology, VerifyOptions options = {});

/// Closure of all cloud extents of subqsets of the carrier under
/// finite intersections and unions. Throws ResourceError when
/// qcard(carrier) exceeds the bound.
QTopology generate_cloud_topology(const Qset& carrier, long qcard_bound = 12);

/// Outcome of looking for disjoint opens around two points. Exactly one
/// of witness_opens / obstruction is set.
struct SeparationResult {
  bool separable = false;
  std::optional<std::pair<Qset, Qset>> witness_opens;
  std::optional<std::string> obstruction;
};

/// Membership of a quantum handle in an open means its species has
/// positive count there; individuals are not observable. Classical
/// handles resolve to their label.
SeparationResult separation_test(const QTopology& topology, const ElementHandle& p,
                                 const ElementHandle& q);

/// Species-level description of a failing pair; internal indices never
/// appear in reports.
struct HausdorffReport {
  bool hausdorff = true;
  std::vector<std::pair<std::string, std::string>> failing_pairs;
  int pairs_checked = 0;
};

/// Runs separation_test over all distinct-point pairs, modulo species
/// symmetry (two handles of the same quantum species are
/// interchangeable, so one representative pair suffices).
HausdorffReport hausdorff_report(const QTopology& topology);

}  // namespace qsets
