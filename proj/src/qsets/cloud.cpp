#include "qsets/cloud.hpp"

namespace qsets {

Cloud cloud(const Qset& ambient, const Qset& core) {
  if (!ambient.contains(core)) {
    throw DomainError("core is not a subqset of the ambient");
  }
  std::map<std::string, long> counts;
  for (const auto& [name, n] : core.counts()) {
    (void)n;  // any positive count pulls in the whole ambient class
    counts[name] = ambient.count(name);
  }
  return Cloud{ambient, core,
               Qset(ambient.universe(), std::move(counts), core.all_members())};
}

bool clouds_intersect(const Cloud& c1, const Cloud& c2) {
  if (!same_universe(c1.ambient, c2.ambient) ||
      !indiscernible(c1.ambient, c2.ambient)) {
    throw DomainError("clouds are relative to different ambients");
  }
  return !intersect(c1.extent, c2.extent).is_empty();
}

}  // namespace qsets
