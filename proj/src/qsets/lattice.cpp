#include "qsets/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qsets {

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        std::vector<std::vector<bool>> leq) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(leq.size()) != n) {
    throw DomainError("order matrix size does not match element count");
  }
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("order matrix is not square");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!leq[i][i]) throw DomainError("order is not reflexive at '" + names[i] + "'");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) {
        throw DomainError("order is not antisymmetric on '" + names[i] + "', '" +
                          names[j] + "'");
      }
      for (int k = 0; k < n; ++k) {
        if (leq[i][j] && leq[j][k] && !leq[i][k]) {
          throw DomainError("order is not transitive via '" + names[j] + "'");
        }
      }
    }
  }

  auto unique_bound = [&](int i, int j, bool lower) -> int {
    std::vector<int> bounds;
    for (int k = 0; k < n; ++k) {
      bool is_bound = lower ? (leq[k][i] && leq[k][j]) : (leq[i][k] && leq[j][k]);
      if (is_bound) bounds.push_back(k);
    }
    for (int b : bounds) {
      bool extreme = true;
      for (int other : bounds) {
        bool dominated = lower ? leq[other][b] : leq[b][other];
        if (!dominated) {
          extreme = false;
          break;
        }
      }
      if (extreme) return b;
    }
    return -1;
  };

  FiniteLattice out;
  out.meet_.assign(n, std::vector<int>(n, -1));
  out.join_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = unique_bound(i, j, /*lower=*/true);
      int v = unique_bound(i, j, /*lower=*/false);
      if (m < 0) {
        throw DomainError("not a lattice: no meet of '" + names[i] + "' and '" +
                          names[j] + "'");
      }
      if (v < 0) {
        throw DomainError("not a lattice: no join of '" + names[i] + "' and '" +
                          names[j] + "'");
      }
      out.meet_[i][j] = m;
      out.join_[i][j] = v;
    }
  }
  out.names_ = std::move(names);
  out.leq_ = std::move(leq);
  return out;
}

FiniteLattice FiniteLattice::from_tables(std::vector<std::string> names,
                                         std::vector<std::vector<bool>> leq,
                                         std::vector<std::vector<int>> meet,
                                         std::vector<std::vector<int>> join) {
  const int n = static_cast<int>(names.size());
  auto check_square = [&](const auto& table, const char* what) {
    if (static_cast<int>(table.size()) != n) {
      throw DomainError(std::string(what) + " table size mismatch");
    }
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) {
        throw DomainError(std::string(what) + " table is not square");
      }
    }
  };
  check_square(leq, "order");
  check_square(meet, "meet");
  check_square(join, "join");
  for (const auto& row : meet) {
    for (int v : row) {
      if (v < 0 || v >= n) throw DomainError("meet table entry out of range");
    }
  }
  for (const auto& row : join) {
    for (int v : row) {
      if (v < 0 || v >= n) throw DomainError("join table entry out of range");
    }
  }
  FiniteLattice out;
  out.names_ = std::move(names);
  out.leq_ = std::move(leq);
  out.meet_ = std::move(meet);
  out.join_ = std::move(join);
  return out;
}

LawReport check_distributive(const FiniteLattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        int lhs = l.meet(a, l.join(b, c));
        int rhs = l.join(l.meet(a, b), l.meet(a, c));
        if (lhs != rhs) return {false, std::array<int, 3>{a, b, c}};
      }
    }
  }
  return {true, std::nullopt};
}

LawReport check_modular(const FiniteLattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!l.leq(a, c)) continue;
        int lhs = l.join(a, l.meet(b, c));
        int rhs = l.meet(l.join(a, b), c);
        if (lhs != rhs) return {false, std::array<int, 3>{a, b, c}};
      }
    }
  }
  return {true, std::nullopt};
}

LatticeLawsReport check_lattice_laws(const FiniteLattice& l) {
  LatticeLawsReport report;
  const int n = l.size();
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  for (int a = 0; a < n; ++a) {
    if (l.meet(a, a) != a) fail("meet not idempotent at " + l.name(a));
    if (l.join(a, a) != a) fail("join not idempotent at " + l.name(a));
    for (int b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a))
        fail("meet not commutative on " + l.name(a) + ", " + l.name(b));
      if (l.join(a, b) != l.join(b, a))
        fail("join not commutative on " + l.name(a) + ", " + l.name(b));
      if (l.meet(a, l.join(a, b)) != a)
        fail("absorption a^(avb) fails on " + l.name(a) + ", " + l.name(b));
      if (l.join(a, l.meet(a, b)) != a)
        fail("absorption av(a^b) fails on " + l.name(a) + ", " + l.name(b));
      for (int c = 0; c < n; ++c) {
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c))
          fail("meet not associative on " + l.name(a) + ", " + l.name(b) + ", " +
               l.name(c));
        if (l.join(a, l.join(b, c)) != l.join(l.join(a, b), c))
          fail("join not associative on " + l.name(a) + ", " + l.name(b) + ", " +
               l.name(c));
      }
    }
  }
  return report;
}

namespace {

std::vector<Qset> all_subqsets(const Qset& q) {
  std::vector<Qset> out;
  for (long eta = 0; eta <= q.qcard(); ++eta) {
    auto level = subqsets_of_qcard(q, eta);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

FiniteLattice build_cloud_lattice(const Qset& ambient, long qcard_bound) {
  if (ambient.qcard() > qcard_bound) {
    std::ostringstream msg;
    msg << "ambient qcard " << ambient.qcard()
        << " exceeds the lattice enumeration bound " << qcard_bound;
    throw ResourceError(msg.str());
  }

  // Collect the distinct cloud extents, canonically ordered.
  std::map<std::string, Qset> extents;
  for (const Qset& sub : all_subqsets(ambient)) {
    Qset extent = cloud(ambient, sub).extent;
    extents.emplace(extent.describe(), extent);
  }
  std::vector<Qset> elements;
  std::vector<std::pair<long, std::string>> order_keys;
  for (const auto& [key, extent] : extents) {
    order_keys.emplace_back(extent.qcard(), key);
  }
  std::sort(order_keys.begin(), order_keys.end());
  for (const auto& [card, key] : order_keys) {
    (void)card;
    elements.push_back(extents.at(key));
  }

  const int n = static_cast<int>(elements.size());
  auto index_of = [&](const Qset& q) -> int {
    const std::string key = q.describe();
    for (int i = 0; i < n; ++i) {
      if (elements[i].describe() == key) return i;
    }
    throw std::logic_error("cloud extent family not closed under lattice ops");
  };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq[i][j] = elements[j].contains(elements[i]);
      meet[i][j] = index_of(intersect(elements[i], elements[j]));
      join[i][j] = index_of(cloud(ambient, unite(elements[i], elements[j])).extent);
    }
  }

  std::vector<std::string> names;
  names.reserve(elements.size());
  for (const Qset& e : elements) names.push_back(e.describe());
  return FiniteLattice::from_tables(std::move(names), std::move(leq),
                                    std::move(meet), std::move(join));
}

}  // namespace qsets
