#include "qsets/json_io.hpp"

#include <algorithm>

namespace qsets {

using nlohmann::json;

namespace {

DomainError field_error(const std::string& where, const std::string& what) {
  return DomainError(where + ": " + what);
}

std::map<std::string, long> counts_of(const UniversePtr& u, const json& j,
                                      const std::string& where,
                                      std::map<std::string, std::set<std::string>>* members) {
  if (!j.is_object()) throw field_error(where, "expected an object");
  std::map<std::string, long> counts;
  for (const auto& [name, value] : j.items()) {
    if (!u->has_species(name)) {
      throw field_error(where + "." + name, "unknown species");
    }
    const Species& s = u->species_named(name);
    if (s.kind == SpeciesKind::Quantum) {
      if (!value.is_number_integer()) {
        throw field_error(where + "." + name, "expected an integer count");
      }
      counts[name] = value.get<long>();
    } else {
      if (!value.is_array()) {
        throw field_error(where + "." + name, "expected an array of labels");
      }
      std::set<std::string> labels;
      for (const auto& label : value) {
        if (!label.is_string()) {
          throw field_error(where + "." + name, "labels must be strings");
        }
        labels.insert(label.get<std::string>());
      }
      (*members)[name] = std::move(labels);
    }
  }
  return counts;
}

}  // namespace

UniverseBundle parse_universe(const json& j) {
  if (!j.is_object()) throw DomainError("universe: expected an object");
  if (!j.contains("species") || !j["species"].is_array()) {
    throw DomainError("universe.species: expected an array");
  }

  Universe::Decl decl;
  std::size_t i = 0;
  for (const auto& sp : j["species"]) {
    const std::string where = "species[" + std::to_string(i) + "]";
    if (!sp.is_object() || !sp.contains("name") || !sp.contains("kind")) {
      throw field_error(where, "expected {\"name\", \"kind\"}");
    }
    if (!sp["name"].is_string() || !sp["kind"].is_string()) {
      throw field_error(where, "name and kind must be strings");
    }
    const std::string kind = sp["kind"].get<std::string>();
    if (kind != "m" && kind != "M") {
      throw field_error(where + ".kind", "expected 'm' (quantum) or 'M' (classical)");
    }
    decl.species.push_back({sp["name"].get<std::string>(),
                            kind == "m" ? SpeciesKind::Quantum
                                        : SpeciesKind::Classical});
    ++i;
  }

  if (j.contains("ambient")) {
    if (!j["ambient"].is_object()) throw DomainError("ambient: expected an object");
    std::map<std::string, bool> kinds;
    for (const Species& s : decl.species) {
      kinds[s.name] = s.kind == SpeciesKind::Quantum;
    }
    for (const auto& [name, value] : j["ambient"].items()) {
      auto it = kinds.find(name);
      if (it == kinds.end()) throw field_error("ambient." + name, "unknown species");
      if (it->second) {
        if (!value.is_number_integer()) {
          throw field_error("ambient." + name, "expected an integer count");
        }
        decl.quantum_counts[name] = value.get<long>();
      } else {
        if (!value.is_array()) {
          throw field_error("ambient." + name, "expected an array of labels");
        }
        std::vector<std::string> labels;
        for (const auto& label : value) {
          if (!label.is_string()) {
            throw field_error("ambient." + name, "labels must be strings");
          }
          labels.push_back(label.get<std::string>());
        }
        decl.classical_members[name] = std::move(labels);
      }
    }
  }

  UniverseBundle bundle;
  bundle.universe = Universe::declare(std::move(decl));

  if (j.contains("qsets")) {
    if (!j["qsets"].is_object()) throw DomainError("qsets: expected an object");
    for (const auto& [name, spec] : j["qsets"].items()) {
      bundle.named.emplace(name, parse_qset(bundle.universe, spec));
    }
  }
  return bundle;
}

Qset parse_qset(const UniversePtr& universe, const json& j) {
  std::map<std::string, std::set<std::string>> members;
  std::map<std::string, long> counts = counts_of(universe, j, "qset", &members);
  return Qset(universe, std::move(counts), std::move(members));
}

nlohmann::json qset_to_json(const Qset& q) {
  json out = json::object();
  for (const auto& [name, n] : q.counts()) out[name] = n;
  for (const auto& [name, labels] : q.all_members()) {
    out[name] = json::array();
    for (const auto& label : labels) out[name].push_back(label);
  }
  return out;
}

nlohmann::json universe_to_json(const UniverseBundle& bundle) {
  json out;
  out["species"] = json::array();
  json ambient = json::object();
  for (const Species& s : bundle.universe->species()) {
    out["species"].push_back(
        {{"name", s.name}, {"kind", s.kind == SpeciesKind::Quantum ? "m" : "M"}});
    if (s.kind == SpeciesKind::Quantum) {
      long n = bundle.universe->quantum_ambient(s.name);
      if (n > 0) ambient[s.name] = n;
    } else {
      const auto& labels = bundle.universe->classical_ambient(s.name);
      if (!labels.empty()) {
        ambient[s.name] = json::array();
        for (const auto& label : labels) ambient[s.name].push_back(label);
      }
    }
  }
  out["ambient"] = std::move(ambient);
  json qsets = json::object();
  for (const auto& [name, q] : bundle.named) qsets[name] = qset_to_json(q);
  out["qsets"] = std::move(qsets);
  return out;
}

FiniteLattice parse_lattice(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq")) {
    throw DomainError("lattice: expected {\"elements\", \"leq\"}");
  }
  if (!j["elements"].is_array()) throw DomainError("lattice.elements: expected an array");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw DomainError("lattice.elements: names must be strings");
    std::string name = e.get<std::string>();
    if (index.count(name)) throw DomainError("lattice.elements: duplicate '" + name + "'");
    index[name] = static_cast<int>(names.size());
    names.push_back(std::move(name));
  }
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  if (!j["leq"].is_array()) throw DomainError("lattice.leq: expected an array of pairs");
  for (const auto& edge : j["leq"]) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
        !edge[1].is_string()) {
      throw DomainError("lattice.leq: each entry must be a pair of element names");
    }
    auto a = index.find(edge[0].get<std::string>());
    auto b = index.find(edge[1].get<std::string>());
    if (a == index.end() || b == index.end()) {
      throw DomainError("lattice.leq: pair references an unknown element");
    }
    leq[a->second][b->second] = true;
  }
  // transitive closure
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (int m = 0; m < n; ++m) {
        if (leq[k][m]) leq[i][m] = true;
      }
    }
  }
  return FiniteLattice::from_order(std::move(names), std::move(leq));
}

nlohmann::json lattice_report_json(const FiniteLattice& lattice) {
  LawReport dist = check_distributive(lattice);
  LawReport mod = check_modular(lattice);
  json witness = json::array();
  const auto chosen = !dist.holds ? dist.witness : mod.witness;
  if (chosen) {
    for (int idx : *chosen) witness.push_back(lattice.name(idx));
  }
  return json{{"distributive", dist.holds},
              {"modular", mod.holds},
              {"witness", std::move(witness)}};
}

TopologySpec parse_topology_spec(const json& j) {
  UniverseBundle bundle = parse_universe(j);
  TopologySpec spec{bundle.universe, bundle.universe->ambient(), std::nullopt};
  if (j.contains("carrier")) {
    spec.carrier = parse_qset(bundle.universe, j["carrier"]);
  }
  if (j.contains("opens")) {
    if (!j["opens"].is_array()) throw DomainError("opens: expected an array");
    std::vector<Qset> opens;
    for (const auto& o : j["opens"]) opens.push_back(parse_qset(bundle.universe, o));
    spec.opens = std::move(opens);
  }
  return spec;
}

nlohmann::json topology_report_json(const AxiomReport& axioms,
                                    const HausdorffReport& hausdorff) {
  json violations = json::array();
  for (const AxiomViolation& v : axioms.violations) {
    violations.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  }
  json failing = json::array();
  for (const auto& [a, b] : hausdorff.failing_pairs) {
    failing.push_back(json::array({a, b}));
  }
  return json{{"axioms_ok", axioms.ok},
              {"violations", std::move(violations)},
              {"exhaustive_unions", axioms.exhaustive_unions},
              {"hausdorff", hausdorff.hausdorff},
              {"failing_pairs", std::move(failing)},
              {"pairs_checked", hausdorff.pairs_checked}};
}

}  // namespace qsets
