#include "fluct/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fluct/errors.hpp"

namespace fluct {

namespace {

constexpr const char* kModule = "quad";
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMaxScales = 1e30;
constexpr int kMaxBisections = 12;

struct BudgetExhausted {};

// Wraps an integrand with evaluation counting, a budget and a NaN check.
class Counted {
 public:
  Counted(const Integrand& f, std::int64_t budget) : f_(f), budget_(budget) {}

  double operator()(double x) const {
    if (++count_ > budget_) throw BudgetExhausted{};
    const double v = f_(x);
    if (std::isnan(v)) {
      throw DomainError(kModule, "integrand returned NaN at x = " + format_number(x));
    }
    return v;
  }

  std::int64_t count() const { return count_; }

 private:
  const Integrand& f_;
  std::int64_t budget_;
  mutable std::int64_t count_ = 0;
};

struct RawResult {
  double value;
  double error;  // raw difference of the last two levels
  double l1;
};

// Integrates u(t, tc) over (lo, hi), tc being the signed distance to the
// nearest endpoint, with the requested engine.
// Boost convention: a - t near the left end, b - t near the right end.
double signed_distance(double t, double lo, double hi) {
  return t - lo < hi - t ? lo - t : hi - t;
}

// This Boost version stops refining double-precision tanh-sinh after the
// precomputed rows, so panels that miss the tolerance are bisected instead.
// Complements are passed through at the outer endpoints only.
template <class F2>
RawResult tanh_sinh_bisect(const F2& u, double a, double b, double lo, double hi,
                           const QuadratureSpec& spec, int depth) {
  thread_local boost::math::quadrature::tanh_sinh<double> engine(20);
  const auto g = [&](double t, double tc) {
    if (tc < 0.0 && a == lo) return u(t, tc);
    if (tc > 0.0 && b == hi) return u(t, tc);
    return u(t, signed_distance(t, lo, hi));
  };
  RawResult out{0.0, 0.0, 0.0};
  std::size_t levels = 0;
  out.value = engine.integrate(g, a, b, spec.rel_tol, &out.error, &out.l1, &levels);
  const bool converged = out.error <= spec.rel_tol * out.l1 ||
                         out.error <= spec.abs_tol * (b - a) / (hi - lo) ||
                         out.error <= 64.0 * kEps * out.l1;
  if (converged || depth >= kMaxBisections) return out;
  const double mid = 0.5 * (a + b);
  const RawResult left = tanh_sinh_bisect(u, a, mid, lo, hi, spec, depth + 1);
  const RawResult right = tanh_sinh_bisect(u, mid, b, lo, hi, spec, depth + 1);
  return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
}

template <class F2>
RawResult run_engine(const F2& u, double lo, double hi, const QuadratureSpec& spec) {
  RawResult out{0.0, 0.0, 0.0};
  switch (spec.method) {
    case QuadMethod::tanh_sinh:
      out = tanh_sinh_bisect(u, lo, hi, lo, hi, spec, 0);
      break;
    case QuadMethod::adaptive_subdivision: {
      const auto g = [&](double t) { return u(t, signed_distance(t, lo, hi)); };
      out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          g, lo, hi, 30, spec.rel_tol, &out.error, &out.l1);
      break;
    }
    case QuadMethod::mapped_gauss: {
      using Rule = boost::math::quadrature::gauss<double, 20>;
      const auto g = [&](double t) { return u(t, signed_distance(t, lo, hi)); };
      double previous = Rule::integrate(g, lo, hi, &out.l1);
      for (int panels = 2;; panels *= 2) {
        const double width = (hi - lo) / panels;
        double sum = 0.0;
        double l1 = 0.0;
        for (int p = 0; p < panels; ++p) {
          double piece_l1 = 0.0;
          sum += Rule::integrate(g, lo + p * width, lo + (p + 1) * width, &piece_l1);
          l1 += piece_l1;
        }
        out.value = sum;
        out.l1 = l1;
        out.error = std::abs(sum - previous);
        previous = sum;
        if (out.error <= spec.rel_tol * l1 || out.error <= spec.abs_tol) break;
        if (panels >= (1 << 20)) break;
      }
      break;
    }
  }
  return out;
}

template <class F2>
EnergyResult integrate_mapped(const F2& u, double lo, double hi, const QuadratureSpec& spec,
                              const Counted& counted) {
  RawResult raw{};
  try {
    raw = run_engine(u, lo, hi, spec);
  } catch (const BudgetExhausted&) {
    throw ConvergenceError(kModule, "evaluation budget of " + std::to_string(spec.max_evals) +
                                        " exhausted");
  }
  const double target = std::max(spec.abs_tol, spec.rel_tol * raw.l1);
  // A few ulps of slack: a level difference sitting at the roundoff floor
  // is converged even if it nominally exceeds a very tight target.
  if (!(raw.error <= target) && !(raw.error <= 64.0 * kEps * raw.l1)) {
    throw ConvergenceError(kModule, "quadrature did not converge: error " +
                                        format_number(raw.error) + " > target " +
                                        format_number(target));
  }
  EnergyResult r;
  r.value = raw.value;
  r.error_estimate = std::max(2.0 * raw.error, 8.0 * kEps * raw.l1);
  r.evaluations = counted.count();
  return r;
}

EnergyResult add(EnergyResult a, const EnergyResult& b) {
  a.value += b.value;
  a.error_estimate += b.error_estimate;
  a.evaluations += b.evaluations;
  return a;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError(kModule, "quadrature tolerances must be positive");
  }
  if (max_evals < 100) throw DomainError(kModule, "max_evals must be at least 100");
}

QuadratureSpec QuadratureSpec::with_scale(double scale) const {
  QuadratureSpec s = *this;
  if (!(s.decay_scale > 0.0)) s.decay_scale = scale;
  return s;
}

void MatsubaraSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError(kModule, "Matsubara rel_tol must be positive");
  if (n_max < 1) throw DomainError(kModule, "Matsubara n_max must be >= 1");
  if (consecutive_small < 1) throw DomainError(kModule, "consecutive_small must be >= 1");
}

EnergyResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec) {
  spec.validate();
  const double s = spec.decay_scale > 0.0 ? spec.decay_scale : 1.0;
  const Counted counted(f, spec.max_evals);
  // tc > 0 near t = 1 (tc = 1 - t), tc < 0 near t = 0 (tc = -t).
  const auto u = [&](double t, double tc) {
    const double one_minus_t = tc > 0.0 ? tc : 1.0 - t;
    if (!(one_minus_t > 0.0)) return 0.0;
    const double x = s * t / one_minus_t;
    // Beyond 1e30 decay scales an integrable tail is far below double
    // precision; skipping it avoids inf * 0 in polynomial-times-exponential f.
    if (!(x < kMaxScales * s)) return 0.0;
    const double jac = s / (one_minus_t * one_minus_t);
    const double v = counted(x);
    return v == 0.0 ? 0.0 : v * jac;
  };
  return integrate_mapped(u, 0.0, 1.0, spec, counted);
}

EnergyResult integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError(kModule, "integrate_interval requires finite a < b");
  }
  const Counted counted(f, spec.max_evals);
  const auto u = [&](double x, double) { return counted(x); };
  return integrate_mapped(u, a, b, spec, counted);
}

namespace {

// int_lo^hi [h(w) - h(pole)]/(pole - w) dw with lo < pole < hi, split at the pole.
EnergyResult subtracted_pole_integral(const Integrand& h, double pole, double lo, double hi,
                                      const QuadratureSpec& spec) {
  const double h_pole = h(pole);
  const double width = std::max(pole - lo, hi - pole);
  // Central-difference slope used where the quotient is numerically 0/0.
  const double step = 1e-4 * std::min(pole - lo, hi - pole);
  const double slope = (h(pole + step) - h(pole - step)) / (2.0 * step);
  const auto regular = [&](double w) {
    const double d = pole - w;
    if (std::abs(d) < 1e-7 * width) return -slope;
    return (h(w) - h_pole) / d;
  };
  EnergyResult left = integrate_interval(regular, lo, pole, spec);
  EnergyResult right = integrate_interval(regular, pole, hi, spec);
  EnergyResult out = add(left, right);
  out.evaluations += 3;
  return out;
}

}  // namespace

EnergyResult integrate_pv_interval(const Integrand& f, double pole, double lo, double hi,
                                   const QuadratureSpec& spec) {
  spec.validate();
  if (!(lo < pole && pole < hi)) {
    throw DomainError(kModule, "principal value requires lo < pole < hi");
  }
  EnergyResult out = subtracted_pole_integral(f, pole, lo, hi, spec);
  out.value += f(pole) * std::log((pole - lo) / (hi - pole));
  return out;
}

EnergyResult integrate_pv(const Integrand& f, double pole, double window,
                          const QuadratureSpec& spec) {
  spec.validate();
  if (!(pole > 0.0)) throw DomainError(kModule, "principal value pole must be positive");
  if (!(window > 0.0 && window < pole)) {
    throw DomainError(kModule, "principal value window must satisfy 0 < window < pole");
  }
  const double a2 = pole * pole;
  const auto direct = [&](double w) { return f(w) / (a2 - w * w); };

  // 1/(a^2 - w^2) = [1/(a + w)] / (a - w): a simple pole with a regular numerator.
  const auto numerator = [&](double w) { return f(w) / (pole + w); };
  EnergyResult out = subtracted_pole_integral(numerator, pole, pole - window, pole + window, spec);

  out = add(out, integrate_interval(direct, 0.0, pole - window, spec));

  const double start = pole + window;
  const auto tail = [&](double x) { return direct(start + x); };
  out = add(out, integrate_semi_infinite(tail, spec.with_scale(pole)));
  return out;
}

EnergyResult matsubara_sum(const Integrand& g, double temperature, const MatsubaraSpec& spec,
                           const QuadratureSpec& tail_spec) {
  spec.validate();
  if (!(temperature > 0.0)) throw DomainError(kModule, "temperature must be positive");
  const double step = 2.0 * std::numbers::pi * temperature;

  EnergyResult out;
  double sum = 0.5 * g(0.0);
  double last = sum;
  out.evaluations = 1;
  int small = 0;
  std::int64_t n = 1;
  for (; n <= spec.n_max; ++n) {
    const double term = g(step * static_cast<double>(n));
    ++out.evaluations;
    if (std::isnan(term)) throw DomainError(kModule, "Matsubara summand returned NaN");
    sum += term;
    last = term;
    if (std::abs(term) <= spec.rel_tol * std::abs(sum)) {
      if (++small >= spec.consecutive_small) break;
    } else {
      small = 0;
    }
  }
  // Reaching the cap is not an error by itself: the tail integral below
  // either converges (algebraic decay) or raises.
  const std::int64_t last_n = std::min(n, spec.n_max);

  // Remainder sum_{n > N} g(xi_n) ~ (1/step) int_{xi_N + step/2}^inf g.
  const double start = step * (static_cast<double>(last_n) + 0.5);
  QuadratureSpec qs = tail_spec;
  qs.rel_tol = std::min(qs.rel_tol, spec.rel_tol);
  qs = qs.with_scale(std::max(start, step));
  EnergyResult tail;
  try {
    tail = integrate_semi_infinite([&](double x) { return g(start + x); }, qs);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(kModule, "Matsubara tail did not converge after n = " +
                                        std::to_string(last_n) + ": " + e.what());
  }
  out.evaluations += tail.evaluations;

  out.value = temperature * sum + tail.value / (2.0 * std::numbers::pi);
  out.error_estimate = temperature * std::abs(last) +
                       tail.error_estimate / (2.0 * std::numbers::pi) +
                       std::abs(tail.value) / (2.0 * std::numbers::pi) * spec.rel_tol;
  return out;
}

}  // namespace fluct
