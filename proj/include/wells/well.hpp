#pragma once

#include <functional>
#include <limits>
#include <stdexcept>

namespace wells {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kInfiniteDepth = std::numeric_limits<double>::infinity();

/// One square well on the x axis: V = 0 for |x - center| < half_width,
/// V = depth outside. Natural units hbar = m = 1 by default.
struct WellSpec {
  double center = 0.0;
  double half_width = 0.5;
  double depth = kInfiniteDepth;
  double mass = 1.0;
  double hbar = 1.0;

  bool infinite() const { return depth == kInfiniteDepth; }
};

void validate(const WellSpec& w);

/// True iff the well interiors do not overlap: the right edge of the
/// leftmost well lies strictly left of the left edge of the other.
bool non_overlapping(const WellSpec& a, const WellSpec& b);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool intersects(const Interval& other) const {
    return lo < other.hi && other.lo < hi;
  }
};

/// A normalized bound state. `psi` evaluates the real stationary
/// wavefunction; `dpsi` its spatial derivative. Outside `support` the
/// amplitude is exactly zero when `compact_support` is set, otherwise
/// it has decayed below 1e-16 of the peak and is treated as zero.
struct Eigenstate {
  int quantum_number = 1;
  double energy = 0.0;
  std::function<double(double)> psi;
  std::function<double(double)> dpsi;
  Interval support;
  bool compact_support = false;
  double hbar = 1.0;
  double mass = 1.0;
};

}  // namespace wells
