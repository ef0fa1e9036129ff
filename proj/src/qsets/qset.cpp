#include "qsets/qset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qsets {

namespace {

void require_same_universe(const Qset& a, const Qset& b) {
  if (!same_universe(a, b)) {
    throw DomainError("operands belong to different universes");
  }
}

}  // namespace

Qset::Qset(UniversePtr universe, std::map<std::string, long> counts,
           std::map<std::string, std::set<std::string>> members)
    : universe_(std::move(universe)) {
  if (!universe_) throw DomainError("qset requires a universe");
  for (const auto& [name, n] : counts) {
    const Species& s = universe_->species_named(name);
    if (s.kind != SpeciesKind::Quantum) {
      throw DomainError("species '" + name + "' is classical; give labels, not a count");
    }
    if (n < 0) throw DomainError("count for '" + name + "' is negative");
    if (n > universe_->quantum_ambient(name)) {
      throw DomainError("count for '" + name + "' exceeds the ambient");
    }
    if (n > 0) counts_[name] = n;
  }
  for (const auto& [name, labels] : members) {
    const Species& s = universe_->species_named(name);
    if (s.kind != SpeciesKind::Classical) {
      throw DomainError("species '" + name + "' is quantum; give a count, not labels");
    }
    const auto& ambient = universe_->classical_ambient(name);
    for (const auto& label : labels) {
      if (!ambient.count(label)) {
        throw DomainError("label '" + label + "' is not in the ambient of '" + name + "'");
      }
    }
    if (!labels.empty()) members_[name] = labels;
  }
  for (const auto& [name, n] : counts_) {
    std::vector<std::uint32_t> t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0u);
    tokens_[name] = std::move(t);
  }
}

Qset Qset::empty(UniversePtr universe) { return Qset(std::move(universe), {}, {}); }

long Qset::qcard() const {
  long total = 0;
  for (const auto& [name, n] : counts_) total += n;
  for (const auto& [name, labels] : members_) total += static_cast<long>(labels.size());
  return total;
}

long Qset::count(const std::string& species) const {
  auto it = counts_.find(species);
  return it == counts_.end() ? 0 : it->second;
}

const std::set<std::string>& Qset::members(const std::string& species) const {
  static const std::set<std::string> kEmpty;
  auto it = members_.find(species);
  return it == members_.end() ? kEmpty : it->second;
}

bool Qset::contains(const Qset& other) const {
  require_same_universe(*this, other);
  for (const auto& [name, n] : other.counts_) {
    if (count(name) < n) return false;
  }
  for (const auto& [name, labels] : other.members_) {
    const auto& mine = members(name);
    if (!std::includes(mine.begin(), mine.end(), labels.begin(), labels.end()))
      return false;
  }
  return true;
}

ElementHandle Qset::element(const std::string& species, std::uint32_t index) const {
  const Species& s = universe_->species_named(species);
  if (s.kind == SpeciesKind::Quantum) {
    if (static_cast<long>(index) >= count(species)) {
      throw DomainError("element index out of range for species '" + species + "'");
    }
  } else {
    if (index >= members(species).size()) {
      throw DomainError("element index out of range for species '" + species + "'");
    }
  }
  return ElementHandle{species, index};
}

std::string Qset::describe() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Species& s : universe_->species()) {
    if (s.kind == SpeciesKind::Quantum) {
      long n = count(s.name);
      if (n == 0) continue;
      out << (first ? "" : ", ") << s.name << ':' << n;
      first = false;
    } else {
      const auto& labels = members(s.name);
      if (labels.empty()) continue;
      out << (first ? "" : ", ") << s.name << ":{";
      bool inner_first = true;
      for (const auto& label : labels) {
        out << (inner_first ? "" : ",") << label;
        inner_first = false;
      }
      out << '}';
      first = false;
    }
  }
  out << '}';
  return out.str();
}

bool same_universe(const Qset& a, const Qset& b) {
  return a.universe() == b.universe();
}

long qcard(const Qset& q) { return q.qcard(); }

bool indiscernible(const Qset& a, const Qset& b) {
  require_same_universe(a, b);
  return a.counts() == b.counts() && a.all_members() == b.all_members();
}

Qset unite(const Qset& a, const Qset& b) {
  require_same_universe(a, b);
  std::map<std::string, long> counts = a.counts();
  for (const auto& [name, n] : b.counts()) {
    long cap = a.universe()->quantum_ambient(name);
    counts[name] = std::min(counts[name] + n, cap);
  }
  std::map<std::string, std::set<std::string>> members = a.all_members();
  for (const auto& [name, labels] : b.all_members()) {
    members[name].insert(labels.begin(), labels.end());
  }
  return Qset(a.universe(), std::move(counts), std::move(members));
}

Qset intersect(const Qset& a, const Qset& b) {
  require_same_universe(a, b);
  std::map<std::string, long> counts;
  for (const auto& [name, n] : a.counts()) {
    counts[name] = std::min(n, b.count(name));
  }
  std::map<std::string, std::set<std::string>> members;
  for (const auto& [name, labels] : a.all_members()) {
    const auto& other = b.members(name);
    std::set<std::string> common;
    std::set_intersection(labels.begin(), labels.end(), other.begin(),
                          other.end(), std::inserter(common, common.begin()));
    if (!common.empty()) members[name] = std::move(common);
  }
  return Qset(a.universe(), std::move(counts), std::move(members));
}

Qset subtract(const Qset& a, const Qset& b) {
  require_same_universe(a, b);
  std::map<std::string, long> counts;
  for (const auto& [name, n] : a.counts()) {
    counts[name] = std::max(n - b.count(name), 0L);
  }
  std::map<std::string, std::set<std::string>> members;
  for (const auto& [name, labels] : a.all_members()) {
    const auto& other = b.members(name);
    std::set<std::string> rest;
    std::set_difference(labels.begin(), labels.end(), other.begin(), other.end(),
                        std::inserter(rest, rest.begin()));
    if (!rest.empty()) members[name] = std::move(rest);
  }
  return Qset(a.universe(), std::move(counts), std::move(members));
}

namespace {

struct Slot {
  std::string species;
  bool quantum = true;
  long max_count = 0;                   // quantum
  std::vector<std::string> labels;      // classical, sorted
};

std::vector<Slot> slots_of(const Qset& q) {
  std::vector<Slot> slots;
  for (const Species& s : q.universe()->species()) {
    if (s.kind == SpeciesKind::Quantum) {
      long n = q.count(s.name);
      if (n > 0) slots.push_back({s.name, true, n, {}});
    } else {
      const auto& m = q.members(s.name);
      if (!m.empty()) slots.push_back({s.name, false, 0, {m.begin(), m.end()}});
    }
  }
  return slots;
}

// Combinations of `labels` of size k, lexicographic, passed to sink.
void for_each_combination(const std::vector<std::string>& labels, long k,
                          const std::function<void(const std::set<std::string>&)>& sink) {
  std::set<std::string> chosen;
  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long left) {
    if (left == 0) {
      sink(chosen);
      return;
    }
    if (from >= labels.size()) return;
    if (static_cast<long>(labels.size() - from) < left) return;
    chosen.insert(labels[from]);
    rec(from + 1, left - 1);
    chosen.erase(labels[from]);
    rec(from + 1, left);
  };
  rec(0, k);
}

}  // namespace

std::vector<Qset> subqsets_of_qcard(const Qset& q, long eta) {
  if (eta < 0) throw DomainError("quasi-cardinal must be non-negative");
  if (eta > q.qcard()) {
    throw DomainError("requested quasi-cardinal exceeds qcard of the qset");
  }
  std::vector<Slot> slots = slots_of(q);
  std::vector<Qset> out;
  std::map<std::string, long> counts;
  std::map<std::string, std::set<std::string>> members;

  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == slots.size()) {
      if (left == 0) out.push_back(Qset(q.universe(), counts, members));
      return;
    }
    const Slot& slot = slots[i];
    if (slot.quantum) {
      long take_max = std::min(slot.max_count, left);
      for (long t = 0; t <= take_max; ++t) {
        if (t > 0) counts[slot.species] = t;
        rec(i + 1, left - t);
        counts.erase(slot.species);
      }
    } else {
      long take_max = std::min<long>(static_cast<long>(slot.labels.size()), left);
      for (long t = 0; t <= take_max; ++t) {
        for_each_combination(slot.labels, t, [&](const std::set<std::string>& chosen) {
          if (!chosen.empty()) members[slot.species] = chosen;
          rec(i + 1, left - t);
          members.erase(slot.species);
        });
      }
    }
  };
  rec(0, eta);
  return out;
}

std::vector<Qset> disjoint_partition(const Qset& q, const std::vector<long>& parts) {
  long total = 0;
  for (long p : parts) {
    if (p < 0) throw DomainError("part quasi-cardinals must be non-negative");
    total += p;
  }
  if (total > q.qcard()) {
    throw DomainError("requested parts exceed the qcard of the qset");
  }

  std::map<std::string, long> remaining_counts = q.counts();
  std::map<std::string, std::set<std::string>> remaining_members = q.all_members();

  std::vector<Qset> out;
  out.reserve(parts.size());
  for (long target : parts) {
    long need = target;
    std::map<std::string, long> counts;
    std::map<std::string, std::set<std::string>> members;
    for (auto& [name, n] : remaining_counts) {
      if (need == 0) break;
      long take = std::min(n, need);
      if (take > 0) {
        counts[name] = take;
        n -= take;
        need -= take;
      }
    }
    for (auto& [name, labels] : remaining_members) {
      if (need == 0) break;
      std::set<std::string> taken;
      while (need > 0 && !labels.empty()) {
        auto first = labels.begin();
        taken.insert(*first);
        labels.erase(first);
        --need;
      }
      if (!taken.empty()) members[name] = std::move(taken);
    }
    out.push_back(Qset(q.universe(), std::move(counts), std::move(members)));
  }
  return out;
}

bool swap_indiscernibility_check(const Qset& a, const std::string& species) {
  const Species& s = a.universe()->species_named(species);
  if (s.kind == SpeciesKind::Quantum) {
    if (a.count(species) < 1) {
      throw DomainError("species '" + species + "' has no element in the qset");
    }
    if (a.universe()->quantum_ambient(species) - a.count(species) < 1) {
      throw DomainError("no element of '" + species + "' exists outside the qset");
    }
    Qset one(a.universe(), {{species, 1}});
    Qset swapped = unite(subtract(a, one), one);
    return indiscernible(swapped, a);
  }

  const auto& mine = a.members(species);
  if (mine.empty()) {
    throw DomainError("species '" + species + "' has no member in the qset");
  }
  const auto& ambient = a.universe()->classical_ambient(species);
  std::vector<std::string> outside;
  std::set_difference(ambient.begin(), ambient.end(), mine.begin(), mine.end(),
                      std::back_inserter(outside));
  if (outside.empty()) {
    throw DomainError("no member of '" + species + "' exists outside the qset");
  }
  Qset removed(a.universe(), {}, {{species, {*mine.begin()}}});
  Qset inserted(a.universe(), {}, {{species, {outside.front()}}});
  Qset swapped = unite(subtract(a, removed), inserted);
  return indiscernible(swapped, a);
}

Qset permute_internal_labels(const Qset& q, const std::string& species,
                             const std::vector<std::size_t>& perm) {
  const Species& s = q.universe()->species_named(species);
  if (s.kind != SpeciesKind::Quantum) {
    throw DomainError("internal labels exist only for quantum species");
  }
  const long n = q.count(species);
  if (static_cast<long>(perm.size()) != n) {
    throw DomainError("permutation size does not match the species count");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  Qset out = q;
  if (n > 0) {
    const std::vector<std::uint32_t>& old = q.tokens_.at(species);
    std::vector<std::uint32_t> fresh(old.size());
    for (std::size_t i = 0; i < perm.size(); ++i) fresh[i] = old[perm[i]];
    out.tokens_[species] = std::move(fresh);
  }
  return out;
}

}  // namespace qsets
