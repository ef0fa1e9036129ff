#include "qsets/universe.hpp"

#include <algorithm>

#include "qsets/qset.hpp"

namespace qsets {

std::shared_ptr<const Universe> Universe::declare(Decl decl) {
  auto u = std::shared_ptr<Universe>(new Universe());

  std::sort(decl.species.begin(), decl.species.end(),
            [](const Species& a, const Species& b) { return a.name < b.name; });
  for (std::size_t i = 0; i + 1 < decl.species.size(); ++i) {
    if (decl.species[i].name == decl.species[i + 1].name) {
      throw DomainError("duplicate species name '" + decl.species[i].name + "'");
    }
  }
  for (const Species& s : decl.species) {
    if (s.name.empty()) throw DomainError("species name must be non-empty");
  }
  u->species_ = std::move(decl.species);

  for (const auto& [name, n] : decl.quantum_counts) {
    const Species& s = u->species_named(name);
    if (s.kind != SpeciesKind::Quantum) {
      throw DomainError("species '" + name + "' is classical; declare labels, not a count");
    }
    if (n < 0) throw DomainError("ambient count for '" + name + "' is negative");
    if (n > 0) u->quantum_[name] = n;
  }
  for (const auto& [name, labels] : decl.classical_members) {
    const Species& s = u->species_named(name);
    if (s.kind != SpeciesKind::Classical) {
      throw DomainError("species '" + name + "' is quantum; declare a count, not labels");
    }
    std::set<std::string> set(labels.begin(), labels.end());
    if (set.size() != labels.size()) {
      throw DomainError("duplicate label among members of '" + name + "'");
    }
    if (!set.empty()) u->classical_[name] = std::move(set);
  }
  return u;
}

bool Universe::has_species(const std::string& name) const {
  return std::any_of(species_.begin(), species_.end(),
                     [&](const Species& s) { return s.name == name; });
}

const Species& Universe::species_named(const std::string& name) const {
  for (const Species& s : species_) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown species '" + name + "'");
}

long Universe::quantum_ambient(const std::string& name) const {
  const Species& s = species_named(name);
  if (s.kind != SpeciesKind::Quantum) {
    throw DomainError("species '" + name + "' is not quantum");
  }
  auto it = quantum_.find(name);
  return it == quantum_.end() ? 0 : it->second;
}

const std::set<std::string>& Universe::classical_ambient(
    const std::string& name) const {
  static const std::set<std::string> kEmpty;
  const Species& s = species_named(name);
  if (s.kind != SpeciesKind::Classical) {
    throw DomainError("species '" + name + "' is not classical");
  }
  auto it = classical_.find(name);
  return it == classical_.end() ? kEmpty : it->second;
}

long Universe::qcard() const {
  long total = 0;
  for (const auto& [name, n] : quantum_) total += n;
  for (const auto& [name, labels] : classical_) total += static_cast<long>(labels.size());
  return total;
}

Qset Universe::ambient() const {
  std::map<std::string, std::set<std::string>> members;
  for (const auto& [name, labels] : classical_) members[name] = labels;
  return Qset(shared_from_this(), quantum_, std::move(members));
}

Qset Universe::empty_qset() const { return Qset(shared_from_this(), {}, {}); }

}  // namespace qsets
