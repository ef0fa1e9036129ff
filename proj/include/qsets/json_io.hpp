#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "qsets/lattice.hpp"
#include "qsets/topology.hpp"

namespace qsets {

/// A parsed universe declaration plus its named qsets.
///
/// Schema:
///   {"species": [{"name": "e", "kind": "m"}],
///    "ambient": {"e": 6, "person": ["Paul", "Peter"]},
///    "qsets":   {"A": {"e": 2}}}
/// Quantum species ("m") take counts; classical species ("M") take
/// label arrays. "qsets" is optional.
struct UniverseBundle {
  UniversePtr universe;
  std::map<std::string, Qset> named;
};

UniverseBundle parse_universe(const nlohmann::json& j);
nlohmann::json universe_to_json(const UniverseBundle& bundle);

nlohmann::json qset_to_json(const Qset& q);
Qset parse_qset(const UniversePtr& universe, const nlohmann::json& j);

/// Lattice adjacency form: {"elements": [...], "leq": [["0","a"], ...]}.
/// Edges are order pairs; the reflexive-transitive closure is taken.
FiniteLattice parse_lattice(const nlohmann::json& j);

/// Fixed report shape: {"distributive": b, "modular": b, "witness": [...]}.
/// The witness names the first distributivity violation when there is
/// one, otherwise the first modularity violation, otherwise it is empty.
nlohmann::json lattice_report_json(const FiniteLattice& lattice);

/// Topology spec: a universe declaration plus an optional "carrier"
/// composition (default: the whole ambient) and an optional "opens"
/// list of compositions (default: generate the cloud topology).
struct TopologySpec {
  UniversePtr universe;
  Qset carrier;
  std::optional<std::vector<Qset>> opens;
};

TopologySpec parse_topology_spec(const nlohmann::json& j);

nlohmann::json topology_report_json(const AxiomReport& axioms,
                                    const HausdorffReport& hausdorff);

}  // namespace qsets
