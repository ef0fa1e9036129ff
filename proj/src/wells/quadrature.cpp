#include "wells/quadrature.hpp"

#include <cmath>

namespace wells {

namespace {

double check_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw NumericError(std::string("quadrature: non-finite ") + what);
  }
  return v;
}

struct Panel {
  double a, fa, b, fb, m, fm, estimate;
};

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, Panel p, double tol,
             int depth) {
  if (depth > 60) {
    throw NumericError("quadrature failed to converge (max depth reached)");
  }
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = check_finite(f(lm), "integrand value");
  const double frm = check_finite(f(rm), "integrand value");
  const double left = simpson(p.a, p.fa, p.m, p.fm, flm);
  const double right = simpson(p.m, p.fm, p.b, p.fb, frm);
  const double err = left + right - p.estimate;
  if (std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  Panel lp{p.a, p.fa, p.m, p.fm, lm, flm, left};
  Panel rp{p.m, p.fm, p.b, p.fb, rm, frm, right};
  return adapt(f, lp, tol / 2.0, depth + 1) + adapt(f, rp, tol / 2.0, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
  if (!(abs_tol > 0)) throw DomainError("quadrature tolerance must be positive");
  if (!(lo <= hi)) throw DomainError("quadrature interval is reversed");
  if (lo == hi) return 0.0;

  // Seed with several base panels so structure away from the endpoints
  // cannot hide from the first Simpson estimate.
  const int base = 8;
  const double h = (hi - lo) / base;
  double total = 0.0;
  for (int i = 0; i < base; ++i) {
    const double a = lo + i * h;
    const double b = (i == base - 1) ? hi : a + h;
    const double m = 0.5 * (a + b);
    Panel p{a, check_finite(f(a), "integrand value"),
            b, check_finite(f(b), "integrand value"),
            m, check_finite(f(m), "integrand value"), 0.0};
    p.estimate = simpson(p.a, p.fa, p.b, p.fb, p.fm);
    total += adapt(f, p, abs_tol / base, 0);
  }
  return total;
}

double integrate_simpson(const std::function<double(double)>& f, double lo,
                         double hi, int n) {
  if (!(lo <= hi)) throw DomainError("quadrature interval is reversed");
  if (lo == hi) return 0.0;
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (hi - lo) / n;
  double sum = check_finite(f(lo), "integrand value") +
               check_finite(f(hi), "integrand value");
  for (int i = 1; i < n; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * check_finite(f(lo + i * h), "integrand value");
  }
  return sum * h / 3.0;
}

}  // namespace wells
