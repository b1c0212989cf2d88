#include "betaspec/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <thread>

namespace betaspec {

bool RootSet::certified() const {
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (residuals[i] > bounds[i]) return false;
  }
  return true;
}

namespace {

constexpr double kRotation = 0.6180339887498949;  // (sqrt(5) - 1) / 2 radians

using CoefficientSource = std::function<PrecPoly(Precision)>;

// ------------------------------------------------------------- double phase

struct DoublePoly {
  std::vector<std::complex<double>> forward;   // c_0..c_d
  std::vector<std::complex<double>> reversed;  // c_d..c_0
};

/// Newton ratio p(z)/p'(z); for |z| > 1 evaluates the reversed polynomial at
/// 1/z so that z^d never overflows.
std::complex<double> newton_ratio(const DoublePoly& poly, std::complex<double> z) {
  const std::size_t d = poly.forward.size() - 1;
  const auto horner = [](const std::vector<std::complex<double>>& c, std::complex<double> x,
                         std::complex<double>& p, std::complex<double>& dp) {
    p = c.back();
    dp = 0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
  };
  std::complex<double> p;
  std::complex<double> dp;
  if (std::abs(z) <= 1.0) {
    horner(poly.forward, z, p, dp);
    return p / dp;
  }
  const std::complex<double> u = 1.0 / z;
  horner(poly.reversed, u, p, dp);
  return z * p / (static_cast<double>(d) * p - u * dp);
}

std::vector<std::complex<double>> initial_circle(const std::vector<std::complex<double>>& c) {
  const std::size_t d = c.size() - 1;
  double bound = 0;
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(c[k] / c[d]));
  const double radius = 1.0 + bound;
  std::vector<std::complex<double>> z(d);
  for (std::size_t j = 0; j < d; ++j) {
    z[j] = std::polar(radius, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(d) + kRotation);
  }
  return z;
}

/// Gauss-Seidel Aberth sweeps in double precision. Returns false if the
/// iterate left the finite range.
bool double_aberth(const DoublePoly& poly, std::vector<std::complex<double>>& z, unsigned max_sweeps) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  for (unsigned sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const std::complex<double> ratio = newton_ratio(poly, z[i]);
      std::complex<double> s = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      }
      const std::complex<double> w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) <= 4e-15 * std::abs(z[i])) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return std::all_of(z.begin(), z.end(), [](std::complex<double> v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

// ---------------------------------------------------------- multiprecision

/// Scratch registers for one worker.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t p) {
    for (auto& r : regs_) mpfr_init2(r, p);
  }
  ~Scratch() {
    for (auto& r : regs_) mpfr_clear(r);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  mpfr_ptr operator[](std::size_t k) { return regs_[k]; }

 private:
  mpfr_t regs_[18];
};

enum Reg : std::size_t { PR, PI, DR, DI, TR, TI, SR, SI, AR, AI, DEN, WR, WI, ER, EI, MOD, SCALE, LIM };

struct Iterate {
  std::vector<Real> re;
  std::vector<Real> im;
};

class AberthLevel {
 public:
  AberthLevel(const PrecPoly& poly, Iterate start, unsigned threads)
      : prec_(static_cast<mpfr_prec_t>(poly.coeff(0).precision().bits())),
        degree_(poly.degree()),
        z_(std::move(start)),
        next_(z_),
        frozen_(degree_, 0),
        threads_(threads) {
    const Precision p(static_cast<unsigned long>(prec_));
    for (const auto& c : poly.coeffs()) {
      const Complex cp = c.at(p);
      cre_.push_back(cp.re());
      cim_.push_back(cp.im());
      cabs_.push_back(abs(cp));
    }
    for (auto& v : z_.re) v = v.at(p);
    for (auto& v : z_.im) v = v.at(p);
    next_ = z_;
  }

  /// Runs sweeps until every root is frozen. Returns the number of sweeps, or
  /// max_sweeps + 1 on failure.
  unsigned run(unsigned max_sweeps) {
    for (unsigned sweep = 1; sweep <= max_sweeps; ++sweep) {
      sweep_once();
      if (std::all_of(frozen_.begin(), frozen_.end(), [](char f) { return f != 0; })) return sweep;
    }
    return max_sweeps + 1;
  }

  const Iterate& iterate() const { return z_; }

 private:
  void sweep_once() {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (frozen_[i] == 0) active.push_back(i);
    }
    std::vector<char> freeze(degree_, 0);
    const auto work = [&](std::size_t begin, std::size_t end) {
      Scratch s(prec_);
      for (std::size_t k = begin; k < end; ++k) update_root(active[k], s, freeze);
    };
    const std::size_t count = active.size();
    const std::size_t workers = std::min<std::size_t>(threads_, std::max<std::size_t>(1, count / 16));
    if (workers <= 1) {
      work(0, count);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (count + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
      }
    }
    for (const std::size_t i : active) {
      mpfr_set(z_.re[i].get(), next_.re[i].get(), MPFR_RNDN);
      mpfr_set(z_.im[i].get(), next_.im[i].get(), MPFR_RNDN);
      if (freeze[i] != 0) frozen_[i] = 1;
    }
  }

  /// Computes the Aberth step for root i from the current iterate z_ and
  /// writes the result to next_. Reads only shared state; writes only slot i.
  void update_root(std::size_t i, Scratch& s, std::vector<char>& freeze) {
    const mpfr_rnd_t rnd = MPFR_RNDN;
    mpfr_srcptr zr = z_.re[i].get();
    mpfr_srcptr zi = z_.im[i].get();

    // p and p' by Horner.
    mpfr_set(s[PR], cre_[degree_].get(), rnd);
    mpfr_set(s[PI], cim_[degree_].get(), rnd);
    mpfr_set_zero(s[DR], 1);
    mpfr_set_zero(s[DI], 1);
    for (std::size_t k = degree_; k-- > 0;) {
      mpfr_fmms(s[TR], s[DR], zr, s[DI], zi, rnd);
      mpfr_fmma(s[TI], s[DR], zi, s[DI], zr, rnd);
      mpfr_add(s[DR], s[TR], s[PR], rnd);
      mpfr_add(s[DI], s[TI], s[PI], rnd);
      mpfr_fmms(s[TR], s[PR], zr, s[PI], zi, rnd);
      mpfr_fmma(s[TI], s[PR], zi, s[PI], zr, rnd);
      mpfr_add(s[PR], s[TR], cre_[k].get(), rnd);
      mpfr_add(s[PI], s[TI], cim_[k].get(), rnd);
    }

    // Rounding-level residual: |p| <= 2^-(P-8) * d * sum |c_k| |z|^k.
    mpfr_hypot(s[MOD], zr, zi, rnd);
    mpfr_set(s[SCALE], cabs_[degree_].get(), rnd);
    for (std::size_t k = degree_; k-- > 0;) {
      mpfr_mul(s[SCALE], s[SCALE], s[MOD], rnd);
      mpfr_add(s[SCALE], s[SCALE], cabs_[k].get(), rnd);
    }
    mpfr_mul_ui(s[LIM], s[SCALE], static_cast<unsigned long>(degree_), rnd);
    mpfr_mul_2si(s[LIM], s[LIM], -(static_cast<long>(prec_) - 8), rnd);
    mpfr_hypot(s[AR], s[PR], s[PI], rnd);
    if (mpfr_lessequal_p(s[AR], s[LIM])) {
      mpfr_set(next_.re[i].get(), zr, rnd);
      mpfr_set(next_.im[i].get(), zi, rnd);
      freeze[i] = 1;
      return;
    }

    // S = sum_{j != i} 1 / (z_i - z_j)
    mpfr_set_zero(s[SR], 1);
    mpfr_set_zero(s[SI], 1);
    for (std::size_t j = 0; j < degree_; ++j) {
      if (j == i) continue;
      mpfr_sub(s[AR], zr, z_.re[j].get(), rnd);
      mpfr_sub(s[AI], zi, z_.im[j].get(), rnd);
      mpfr_fmma(s[DEN], s[AR], s[AR], s[AI], s[AI], rnd);
      if (mpfr_zero_p(s[DEN])) continue;
      mpfr_div(s[AR], s[AR], s[DEN], rnd);
      mpfr_div(s[AI], s[AI], s[DEN], rnd);
      mpfr_add(s[SR], s[SR], s[AR], rnd);
      mpfr_sub(s[SI], s[SI], s[AI], rnd);
    }

    // w = p / (p' - p S)
    mpfr_fmms(s[TR], s[PR], s[SR], s[PI], s[SI], rnd);
    mpfr_fmma(s[TI], s[PR], s[SI], s[PI], s[SR], rnd);
    mpfr_sub(s[ER], s[DR], s[TR], rnd);
    mpfr_sub(s[EI], s[DI], s[TI], rnd);
    mpfr_fmma(s[DEN], s[ER], s[ER], s[EI], s[EI], rnd);
    if (mpfr_zero_p(s[DEN])) {
      mpfr_set(next_.re[i].get(), zr, rnd);
      mpfr_set(next_.im[i].get(), zi, rnd);
      return;
    }
    mpfr_fmma(s[WR], s[PR], s[ER], s[PI], s[EI], rnd);
    mpfr_fmms(s[WI], s[PI], s[ER], s[PR], s[EI], rnd);
    mpfr_div(s[WR], s[WR], s[DEN], rnd);
    mpfr_div(s[WI], s[WI], s[DEN], rnd);

    mpfr_sub(next_.re[i].get(), zr, s[WR], rnd);
    mpfr_sub(next_.im[i].get(), zi, s[WI], rnd);

    // Relative correction below 2^-(P-32) freezes the root.
    mpfr_hypot(s[AR], s[WR], s[WI], rnd);
    mpfr_mul_2si(s[LIM], s[MOD], -(static_cast<long>(prec_) - 32), rnd);
    if (mpfr_lessequal_p(s[AR], s[LIM])) freeze[i] = 1;
  }

  mpfr_prec_t prec_;
  std::size_t degree_;
  std::vector<Real> cre_;
  std::vector<Real> cim_;
  std::vector<Real> cabs_;
  Iterate z_;
  Iterate next_;
  std::vector<char> frozen_;
  unsigned threads_;
};

unsigned pick_threads(unsigned requested) {
  if (mpfr_buildopt_tls_p() == 0) return 1;
  if (requested != 0) return requested;
  return std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
}

Iterate starting_iterate(const PrecPoly& poly, Precision p, bool warm_start) {
  const std::size_t d = poly.degree();
  DoublePoly dp;
  for (const auto& c : poly.coeffs()) dp.forward.push_back(c.to_complex_double());
  dp.reversed.assign(dp.forward.rbegin(), dp.forward.rend());
  const bool representable = std::all_of(dp.forward.begin(), dp.forward.end(), [](std::complex<double> c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  }) && std::abs(dp.forward.back()) > 0;

  Iterate it;
  if (representable) {
    auto z = initial_circle(dp.forward);
    if (!warm_start || double_aberth(dp, z, 500)) {
      for (const auto& v : z) {
        it.re.emplace_back(v.real(), p);
        it.im.emplace_back(v.imag(), p);
      }
      return it;
    }
    z = initial_circle(dp.forward);
    for (const auto& v : z) {
      it.re.emplace_back(v.real(), p);
      it.im.emplace_back(v.imag(), p);
    }
    return it;
  }
  // Coefficients outside double range: Cauchy circle at full precision.
  Real bound(p);
  const Real lead = abs(poly.leading().at(p));
  for (std::size_t k = 0; k < d; ++k) bound = max(bound, abs(poly.coeff(k).at(p)) / lead);
  const Real radius = bound + Real(1, p);
  const Real two_pi = pi(p) * 2L;
  for (std::size_t j = 0; j < d; ++j) {
    const Real theta = two_pi * Real(static_cast<long>(j), p) / Real(static_cast<long>(d), p) + Real(kRotation, p);
    it.re.push_back(radius * cos(theta));
    it.im.push_back(radius * sin(theta));
  }
  return it;
}

void certify(RootSet& set, const PrecPoly& poly, unsigned digits) {
  const Precision p(set.precision_bits);
  const Real lead = abs(poly.leading().at(p));
  const Real tol = ten_to_minus(digits, p);
  set.residuals.clear();
  set.bounds.clear();
  std::vector<Real> scaled;
  for (const auto& c : poly.coeffs()) scaled.push_back(abs(c.at(p)) / lead);
  for (const auto& z : set.roots) {
    set.residuals.push_back(abs(evaluate(poly, z)) / lead);
    const Real r = abs(z);
    Real acc(p);
    for (std::size_t k = scaled.size(); k-- > 0;) acc = acc * r + scaled[k];
    set.bounds.push_back(tol * acc);
  }
}

RootSet solve_ladder(const CoefficientSource& source, std::size_t degree, const SolveOptions& options) {
  if (degree == 0) fail(ErrorCode::invalid_parameter, "solve_all needs a polynomial of degree >= 1");
  const Precision base = max(options.precision, Precision::for_digits(options.target_digits, 32));
  const unsigned threads = pick_threads(options.threads);
  const unsigned levels = std::max(options.max_levels, 2U);

  RootSet previous;
  bool have_previous = false;
  unsigned total_sweeps = 0;
  Iterate seed;
  Precision p = base;
  for (unsigned level = 0; level < levels; ++level, p = p.doubled()) {
    const PrecPoly poly = source(p);
    RootSet current;
    current.precision_bits = p.bits();

    if (degree == 1) {
      current.roots.push_back(-(poly.coeff(0) / poly.coeff(1)));
    } else {
      Iterate start = level == 0 ? starting_iterate(poly, p, options.warm_start) : seed;
      AberthLevel aberth(poly, std::move(start), threads);
      const unsigned sweeps = aberth.run(options.max_sweeps);
      total_sweeps += std::min(sweeps, options.max_sweeps);
      seed = aberth.iterate();
      for (std::size_t i = 0; i < degree; ++i) current.roots.emplace_back(seed.re[i], seed.im[i]);
      current.iterations = total_sweeps;
      if (sweeps > options.max_sweeps) {
        certify(current, poly, options.target_digits);
        throw ConvergenceFailure("Aberth iteration did not converge within " + std::to_string(options.max_sweeps) +
                                     " sweeps at " + std::to_string(p.bits()) + " bits",
                                 std::move(current));
      }
    }
    current.iterations = total_sweeps;
    certify(current, poly, options.target_digits);

    if (have_previous) {
      const Real tol = ten_to_minus(options.target_digits, p);
      bool agree = true;
      for (std::size_t i = 0; i < degree && agree; ++i) {
        const Real scale = max(Real(1, p), abs(current.roots[i]));
        agree = abs(current.roots[i] - previous.roots[i].at(p)) <= tol * scale;
      }
      if (agree && current.certified()) return current;
    }
    previous = std::move(current);
    have_previous = true;
  }
  throw ConvergenceFailure("precision ladder exhausted before two rungs agreed to " +
                               std::to_string(options.target_digits) + " digits",
                           std::move(previous));
}

// ------------------------------------------------------------- real Newton

struct RealPoly {
  std::vector<Real> c;
};

RealPoly real_coefficients(const PrecPoly& poly, Precision p) {
  RealPoly out;
  for (const auto& c : poly.coeffs()) {
    if (!c.im().is_zero()) fail(ErrorCode::invalid_parameter, "refine_real_root requires real coefficients");
    out.c.push_back(c.re().at(p));
  }
  return out;
}

Real newton_at(const RealPoly& poly, Real x, unsigned digits) {
  const Precision p = x.precision();
  const std::size_t d = poly.c.size() - 1;
  const Real tol = ten_to_minus(digits, p);
  const auto relative_residual = [&](const Real& at, Real& value, Real& slope) {
    value = poly.c[d];
    slope = Real(p);
    Real scale = abs(poly.c[d]);
    const Real r = abs(at);
    for (std::size_t k = d; k-- > 0;) {
      slope = slope * at + value;
      value = value * at + poly.c[k];
      scale = scale * r + abs(poly.c[k]);
    }
    return scale.is_zero() ? abs(value) : abs(value) / scale;
  };

  Real value(p);
  Real slope(p);
  for (int iter = 0; iter < 400; ++iter) {
    const Real residual = relative_residual(x, value, slope);
    if (value.is_zero()) return x;
    if (slope.is_zero()) fail(ErrorCode::refinement_failure, "Newton refinement: derivative vanished");
    const Real step = value / slope;
    x -= step;
    if (!x.is_finite()) fail(ErrorCode::refinement_failure, "Newton refinement diverged");
    const Real limit = ldexp(max(abs(x), ldexp(Real(1, p), -static_cast<long>(p.bits()))),
                             -static_cast<long>(p.bits()) + 16);
    if (abs(step) <= limit) {
      if (relative_residual(x, value, slope) > tol && residual > tol) {
        fail(ErrorCode::refinement_failure, "Newton refinement stalled above the residual target");
      }
      return x;
    }
  }
  fail(ErrorCode::refinement_failure, "Newton refinement did not converge");
}

Real refine_with(const std::function<PrecPoly(Precision)>& source, const Real& seed, unsigned digits) {
  const Precision base = max(Precision::for_digits(digits, 64), Precision(256));
  Real x = seed.at(base);
  Real previous(base);
  Precision p = base;
  for (int level = 0; level < 4; ++level, p = p.doubled()) {
    const RealPoly poly = real_coefficients(source(p), p);
    if (poly.c.size() < 2) fail(ErrorCode::invalid_parameter, "refine_real_root needs degree >= 1");
    x = newton_at(poly, x.at(p), digits);
    if (level > 0) {
      const Real scale = max(Real(1, p), abs(x));
      if (abs(x - previous.at(p)) <= ten_to_minus(digits, p) * scale) return x;
    }
    previous = x;
  }
  fail(ErrorCode::refinement_failure, "Newton refinement: precision rungs disagree");
}

}  // namespace

RootSet solve_all(const ExactPoly& poly, const SolveOptions& options) {
  return solve_ladder([&](Precision p) { return to_precision(poly, p); }, poly.degree(), options);
}

RootSet solve_all(const PrecPoly& poly, const SolveOptions& options) {
  return solve_ladder(
      [&](Precision p) {
        std::vector<Complex> c;
        for (const auto& x : poly.coeffs()) c.push_back(x.at(max(p, x.precision())).at(p));
        return PrecPoly(std::move(c));
      },
      poly.degree(), options);
}

Real refine_real_root(const ExactPoly& poly, const Real& seed, unsigned target_digits) {
  if (!has_real_coefficients(poly)) fail(ErrorCode::invalid_parameter, "refine_real_root requires real coefficients");
  return refine_with([&](Precision p) { return to_precision(poly, p); }, seed, target_digits);
}

Real refine_real_root(const PrecPoly& poly, const Real& seed, unsigned target_digits) {
  return refine_with(
      [&](Precision p) {
        std::vector<Complex> c;
        for (const auto& x : poly.coeffs()) c.push_back(x.at(p));
        return PrecPoly(std::move(c));
      },
      seed, target_digits);
}

std::vector<std::size_t> report_order(const std::vector<Complex>& roots) {
  std::vector<Real> args;
  std::vector<Real> mods;
  for (const auto& z : roots) {
    args.push_back(arg(z));
    mods.push_back(abs(z));
  }
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (args[a] < args[b]) return true;
    if (args[b] < args[a]) return false;
    return mods[a] < mods[b];
  });
  return order;
}

}  // namespace betaspec
