#include "wells/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wells {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectTol = 1e-12;

// Amplitude below this fraction of the peak is treated as zero when
// truncating exponential tails.
constexpr double kTailCut = 1e-16;

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int iter = 0; iter < 200 && hi - lo > kBisectTol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((flo <= 0) == (fmid <= 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Finds the root of f inside (lo, hi), scanning for the sign change
// first; the matching functions are monotone enough per branch that a
// moderate scan is reliable.
bool find_root(const std::function<double(double)>& f, double lo, double hi,
               double* root) {
  if (!(lo < hi)) return false;
  const int scan = 128;
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= scan; ++i) {
    const double x = lo + (hi - lo) * i / scan;
    const double fx = f(x);
    if ((prev_f <= 0) != (fx <= 0)) {
      *root = bisect(f, prev_x, x);
      return true;
    }
    prev_x = x;
    prev_f = fx;
  }
  return false;
}

}  // namespace

void validate(const WellSpec& w) {
  if (!(w.half_width > 0)) throw DomainError("well half_width must be positive");
  if (!(w.mass > 0)) throw DomainError("mass must be positive");
  if (!(w.hbar > 0)) throw DomainError("hbar must be positive");
  if (!w.infinite() && !(w.depth > 0)) {
    throw DomainError("finite well depth must be positive");
  }
}

bool non_overlapping(const WellSpec& a, const WellSpec& b) {
  const WellSpec& left = a.center <= b.center ? a : b;
  const WellSpec& right = a.center <= b.center ? b : a;
  return left.center + left.half_width < right.center - right.half_width;
}

Eigenstate infinite_well_eigenstate(const WellSpec& w, int n) {
  validate(w);
  if (!w.infinite()) {
    throw DomainError("infinite_well_eigenstate requires an infinite depth");
  }
  if (n < 1) throw DomainError("quantum number must be >= 1");

  const double eps = w.half_width;
  const double width = 2.0 * eps;
  const double left = w.center - eps;
  const double right = w.center + eps;
  const double k = n * kPi / width;
  const double amp = std::sqrt(1.0 / eps);

  Eigenstate state;
  state.quantum_number = n;
  state.energy = (n * n * kPi * kPi * w.hbar * w.hbar) / (2.0 * w.mass * width * width);
  state.psi = [=](double x) {
    if (x <= left || x >= right) return 0.0;
    return amp * std::sin(k * (x - left));
  };
  state.dpsi = [=](double x) {
    if (x < left || x > right) return 0.0;
    return amp * k * std::cos(k * (x - left));
  };
  state.support = {left, right};
  state.compact_support = true;
  state.hbar = w.hbar;
  state.mass = w.mass;
  return state;
}

std::vector<Eigenstate> finite_well_bound_states(const WellSpec& w) {
  validate(w);
  if (w.infinite()) {
    throw DomainError("finite_well_bound_states requires a finite depth");
  }

  const double a = w.half_width;
  const double z0 = a * std::sqrt(2.0 * w.mass * w.depth) / w.hbar;

  auto rhs = [&](double z) { return std::sqrt(std::max(z0 * z0 - z * z, 0.0)); };
  auto even_eq = [&](double z) { return z * std::tan(z) - rhs(z); };
  auto odd_eq = [&](double z) { return -z / std::tan(z) - rhs(z); };

  struct Root {
    double z;
    bool even;
  };
  std::vector<Root> roots;
  const double margin = 1e-9;
  for (int j = 0;; ++j) {
    const double start = j * kPi;
    if (start >= z0) break;
    double root;
    if (find_root(even_eq, start + margin,
                  std::min(start + kPi / 2.0, z0) - margin, &root)) {
      roots.push_back({root, true});
    }
  }
  for (int j = 0;; ++j) {
    const double start = j * kPi + kPi / 2.0;
    if (start >= z0) break;
    double root;
    if (find_root(odd_eq, start + margin, std::min(start + kPi, z0) - margin,
                  &root)) {
      roots.push_back({root, false});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Root& x, const Root& y) { return x.z < y.z; });

  std::vector<Eigenstate> states;
  states.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double z = roots[i].z;
    const bool even = roots[i].even;
    const double k = z / a;
    const double energy = w.hbar * w.hbar * k * k / (2.0 * w.mass);
    const double kappa = std::sqrt(2.0 * w.mass * (w.depth - energy)) / w.hbar;

    // Interior amplitude 1 before normalization; tails continue the
    // boundary value. The derivative match is the eigencondition.
    const double edge = even ? std::cos(z) : std::sin(z);
    const double interior = even ? (a + std::sin(2.0 * z) / (2.0 * k))
                                 : (a - std::sin(2.0 * z) / (2.0 * k));
    const double norm = std::sqrt(interior + edge * edge / kappa);

    const double c = w.center;
    Eigenstate state;
    state.quantum_number = static_cast<int>(i) + 1;
    state.energy = energy;
    state.psi = [=](double x) {
      const double u = x - c;
      if (std::abs(u) <= a) {
        return (even ? std::cos(k * u) : std::sin(k * u)) / norm;
      }
      const double tail = edge * std::exp(-kappa * (std::abs(u) - a)) / norm;
      if (even) return tail;
      return u > 0 ? tail : -tail;
    };
    state.dpsi = [=](double x) {
      const double u = x - c;
      if (std::abs(u) <= a) {
        return (even ? -k * std::sin(k * u) : k * std::cos(k * u)) / norm;
      }
      const double mag = edge * std::exp(-kappa * (std::abs(u) - a)) / norm;
      const double value = even ? mag : (u > 0 ? mag : -mag);
      // tails decay toward both infinities
      return u > 0 ? -kappa * value : kappa * value;
    };
    const double reach = a - std::log(kTailCut) / kappa;
    state.support = {c - reach, c + reach};
    state.compact_support = false;
    state.hbar = w.hbar;
    state.mass = w.mass;
    states.push_back(std::move(state));
  }
  return states;
}

}  // namespace wells
