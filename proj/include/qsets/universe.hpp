#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsets {

// Precondition violation: bad arguments, mixed universes, unknown species.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration bound was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quantum species hold mutually indiscernible elements: they can be
// counted but not told apart. Classical species hold labeled members,
// each one an ordinary individual.
enum class SpeciesKind { Quantum, Classical };

struct Species {
  std::string name;
  SpeciesKind kind = SpeciesKind::Quantum;
};

class Qset;

/// A fixed finite ambient: the species roster plus how much of each
/// species exists. Declared once up front; every qset lives inside one
/// universe, and operations never mix universes.
class Universe : public std::enable_shared_from_this<Universe> {
 public:
  struct Decl {
    std::vector<Species> species;
    // ambient count per quantum species (absent means 0)
    std::map<std::string, long> quantum_counts;
    // ambient labels per classical species (absent means none)
    std::map<std::string, std::vector<std::string>> classical_members;
  };

  static std::shared_ptr<const Universe> declare(Decl decl);

  const std::vector<Species>& species() const { return species_; }
  bool has_species(const std::string& name) const;
  const Species& species_named(const std::string& name) const;

  long quantum_ambient(const std::string& name) const;
  const std::set<std::string>& classical_ambient(const std::string& name) const;

  long qcard() const;
  Qset ambient() const;
  Qset empty_qset() const;

 private:
  Universe() = default;

  std::vector<Species> species_;  // sorted by name
  std::map<std::string, long> quantum_;
  std::map<std::string, std::set<std::string>> classical_;
};

using UniversePtr = std::shared_ptr<const Universe>;

}  // namespace qsets
