#pragma once

#include <stdexcept>
#include <vector>

namespace nqm {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite union of pairwise-disjoint real intervals with flagged
/// endpoints — the fragment of the Borel sets every check here needs.
class Borelian {
 public:
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;
  };

  /// Sorts the intervals and validates pairwise disjointness.
  explicit Borelian(std::vector<Interval> intervals);

  static Borelian real_line();
  static Borelian closed(double lo, double hi);

  bool contains(double x) const;
  const std::vector<Interval>& intervals() const { return intervals_; }

  /// Union with another Borelian; the result must still be disjoint
  /// (touching closed endpoints count as overlap and are rejected).
  Borelian united_with(const Borelian& other) const;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace nqm
