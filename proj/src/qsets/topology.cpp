#include "qsets/topology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace qsets {

namespace {

bool family_has(const std::vector<Qset>& family, const Qset& q) {
  return std::any_of(family.begin(), family.end(),
                     [&](const Qset& f) { return indiscernible(f, q); });
}

Qset union_of_subfamily(const QTopology& t, const std::vector<int>& picks) {
  Qset acc = t.carrier.universe()->empty_qset();
  for (int i : picks) acc = unite(acc, t.opens[i]);
  return acc;
}

struct ResolvedHandle {
  std::string species;
  bool quantum = true;
  std::string label;  // classical only
  std::string description;
};

ResolvedHandle resolve(const Qset& carrier, const ElementHandle& h) {
  const Species& s = carrier.universe()->species_named(h.species);
  ResolvedHandle r;
  r.species = h.species;
  if (s.kind == SpeciesKind::Quantum) {
    if (static_cast<long>(h.index) >= carrier.count(h.species)) {
      throw DomainError("handle does not designate an element of the carrier");
    }
    r.quantum = true;
    r.description = h.species;
  } else {
    const auto& labels = carrier.members(h.species);
    if (h.index >= labels.size()) {
      throw DomainError("handle does not designate an element of the carrier");
    }
    r.quantum = false;
    r.label = *std::next(labels.begin(), h.index);
    r.description = h.species + ":" + r.label;
  }
  return r;
}

bool open_contains(const Qset& open, const ResolvedHandle& h) {
  if (h.quantum) return open.count(h.species) > 0;
  return open.members(h.species).count(h.label) > 0;
}

SeparationResult separate_resolved(const QTopology& t, const ResolvedHandle& p,
                                   const ResolvedHandle& q) {
  for (const Qset& u : t.opens) {
    if (!open_contains(u, p)) continue;
    for (const Qset& v : t.opens) {
      if (!open_contains(v, q)) continue;
      if (intersect(u, v).is_empty()) {
        SeparationResult r;
        r.separable = true;
        r.witness_opens = std::make_pair(u, v);
        return r;
      }
    }
  }
  SeparationResult r;
  r.separable = false;
  r.obstruction = "every open containing " + p.description +
                  " intersects every open containing " + q.description;
  return r;
}

}  // namespace

AxiomReport verify_axioms(const QTopology& t, VerifyOptions options) {
  AxiomReport report;
  auto violate = [&](int axiom, std::string detail) {
    report.ok = false;
    report.violations.push_back({axiom, std::move(detail)});
  };

  for (const Qset& open : t.opens) {
    if (!t.carrier.contains(open)) {
      violate(1, "open " + open.describe() + " is not contained in the carrier");
    }
  }
  if (!family_has(t.opens, t.carrier.universe()->empty_qset())) {
    violate(1, "the empty qset is not among the opens");
  }
  if (!family_has(t.opens, t.carrier)) {
    violate(1, "the carrier is not among the opens");
  }

  const int n = static_cast<int>(t.opens.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Qset both = intersect(t.opens[i], t.opens[j]);
      if (!family_has(t.opens, both)) {
        violate(2, "intersection of " + t.opens[i].describe() + " and " +
                       t.opens[j].describe() + " is missing");
      }
    }
  }

  auto check_union = [&](const std::vector<int>& picks) {
    Qset u = union_of_subfamily(t, picks);
    if (!family_has(t.opens, u)) {
      std::ostringstream detail;
      detail << "union of a subfamily of " << picks.size()
             << " opens is missing: " << u.describe();
      violate(3, detail.str());
      return false;
    }
    return true;
  };

  if (t.opens.size() <= options.exhaustive_open_limit) {
    report.exhaustive_unions = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> picks;
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) picks.push_back(i);
      }
      check_union(picks);
      if (report.violations.size() > 32) break;  // enough evidence
    }
  } else {
    report.exhaustive_unions = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) check_union({i, j});
    }
    std::mt19937_64 rng(options.seed);
    for (int s = 0; s < options.sample_subfamilies; ++s) {
      std::vector<int> picks;
      for (int i = 0; i < n; ++i) {
        if (rng() & 1u) picks.push_back(i);
      }
      check_union(picks);
      ++report.sampled_subfamilies;
    }
  }
  return report;
}

QTopology generate_cloud_topology(const Qset& carrier, long qcard_bound) {
  if (carrier.qcard() > qcard_bound) {
    std::ostringstream msg;
    msg << "carrier qcard " << carrier.qcard()
        << " exceeds the topology enumeration bound " << qcard_bound;
    throw ResourceError(msg.str());
  }

  std::map<std::string, Qset> family;
  auto add = [&](const Qset& q) { return family.emplace(q.describe(), q).second; };

  add(carrier.universe()->empty_qset());
  add(carrier);
  for (long eta = 0; eta <= carrier.qcard(); ++eta) {
    for (const Qset& sub : subqsets_of_qcard(carrier, eta)) {
      add(cloud(carrier, sub).extent);
    }
  }

  // Fixpoint closure under binary unions and intersections; finite
  // unions reduce to iterated binary ones.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Qset> snapshot;
    snapshot.reserve(family.size());
    for (const auto& [key, q] : family) {
      (void)key;
      snapshot.push_back(q);
    }
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (add(unite(snapshot[i], snapshot[j]))) grew = true;
        if (add(intersect(snapshot[i], snapshot[j]))) grew = true;
      }
    }
  }

  std::vector<std::pair<long, std::string>> keys;
  for (const auto& [key, q] : family) keys.emplace_back(q.qcard(), key);
  std::sort(keys.begin(), keys.end());
  std::vector<Qset> opens;
  opens.reserve(keys.size());
  for (const auto& [card, key] : keys) {
    (void)card;
    opens.push_back(family.at(key));
  }
  return QTopology{carrier, std::move(opens)};
}

SeparationResult separation_test(const QTopology& t, const ElementHandle& p,
                                 const ElementHandle& q) {
  ResolvedHandle rp = resolve(t.carrier, p);
  ResolvedHandle rq = resolve(t.carrier, q);
  return separate_resolved(t, rp, rq);
}

HausdorffReport hausdorff_report(const QTopology& t) {
  HausdorffReport report;

  struct Point {
    ElementHandle handle;
    std::string description;
    bool quantum;
  };
  std::vector<Point> representatives;
  std::vector<std::pair<ElementHandle, ElementHandle>> same_species_pairs;

  for (const Species& s : t.carrier.universe()->species()) {
    if (s.kind == SpeciesKind::Quantum) {
      long n = t.carrier.count(s.name);
      if (n >= 1) representatives.push_back({{s.name, 0}, s.name, true});
      if (n >= 2) same_species_pairs.push_back({{s.name, 0}, {s.name, 1}});
    } else {
      const auto& labels = t.carrier.members(s.name);
      std::uint32_t i = 0;
      for (const auto& label : labels) {
        representatives.push_back({{s.name, i}, s.name + ":" + label, false});
        ++i;
      }
    }
  }

  auto run_pair = [&](const ElementHandle& a, const ElementHandle& b,
                      const std::string& da, const std::string& db) {
    ++report.pairs_checked;
    SeparationResult r = separation_test(t, a, b);
    if (!r.separable) {
      report.hausdorff = false;
      report.failing_pairs.emplace_back(da, db);
    }
  };

  // One pair per quantum species with two or more elements; such a pair
  // stands for every same-species pair, since membership only sees the
  // species.
  for (const auto& [a, b] : same_species_pairs) {
    run_pair(a, b, a.species, b.species);
  }
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    for (std::size_t j = i + 1; j < representatives.size(); ++j) {
      run_pair(representatives[i].handle, representatives[j].handle,
               representatives[i].description, representatives[j].description);
    }
  }
  return report;
}

}  // namespace qsets
