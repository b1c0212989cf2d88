#include <doctest.h>

#include <algorithm>

#include "betaspec/charpoly.hpp"
#include "betaspec/spectra.hpp"
#include "oracles.hpp"

using namespace betaspec;

namespace {

BetaParam beta_of(const char* text) { return BetaParam::parse(text); }

std::size_t count_far_from_one(const std::vector<Real>& sigma, const char* tol) {
  return static_cast<std::size_t>(std::count_if(sigma.begin(), sigma.end(), [&](const Real& s) {
    return abs(s - Real(1, s.precision())) > Real(tol, s.precision());
  }));
}

}  // namespace

TEST_CASE("cluster partition") {
  const BetaParam five = beta_of("5");
  const ClusterReport one = cluster_count(spectrum(five, 1), 0.1, five);
  CHECK(one.n == 1);
  CHECK(one.outside_count == 1);
  CHECK(abs(one.outside_points[0].re() - Real(Rational(-4, 5), Precision(128))) < Real(1e-30, Precision(128)));
  CHECK(cluster_count(spectrum(five, 1), 0.25, five).outside_count == 0);
  CHECK_THROWS_AS(cluster_count(spectrum(five, 3), 0.0, five), Error);

  const RootSet r = spectrum(beta_of("4/3"), 60);
  const ClusterReport c = cluster_count(r, 0.05, beta_of("4/3"));
  CHECK(c.inside_count + c.outside_count == 60);
  for (const auto& z : c.outside_points) CHECK(abs(abs(z) - Real(1, z.precision())) > Real(0.05, z.precision()));
}

TEST_CASE("cluster counts are invariant under conjugation") {
  const BetaParam beta = beta_of("4/3");
  RootSet r = spectrum(beta, 40);
  const std::size_t before = cluster_count(r, 0.1, beta).outside_count;
  for (auto& z : r.roots) z = z.conj();
  CHECK(cluster_count(r, 0.1, beta).outside_count == before);
}

TEST_CASE("no outliers for beta >= 2 at moderate order") {
  for (const char* text : {"2", "3", "5"}) {
    for (std::size_t n : {50, 100}) {
      const RootSet r = spectrum(beta_of(text), n);
      CHECK(cluster_count(r, 0.1, beta_of(text)).outside_count == 0);
      CHECK(cluster_count(r, 0.05, beta_of(text)).outside_count == 0);
    }
  }
}

TEST_CASE("two outliers for beta in (1, 2)") {
  const BetaParam beta = beta_of("4/3");
  CHECK(cluster_count(spectrum(beta, 100), 0.1, beta).outside_count == 2);
  const OutlierRecord r = find_outliers(beta, 100, 50);
  REQUIRE(r.present());
  CHECK(agreeing_digits(*r.large, Real("2.9999999999988454072132625253185082984139093876636", r.large->precision())) >= 49);
  CHECK(*r.small < Real(Rational(1, 3), r.small->precision()) + Real("1e-4", r.small->precision()));
  CHECK(*r.err_small < Real("1e-4", r.small->precision()));
  CHECK(r.diagnostic.empty());
}

TEST_CASE("small outlier of order 50 is close to 1/3") {
  const OutlierRecord r = find_outliers(beta_of("4/3"), 50, 30);
  REQUIRE(r.present());
  CHECK(abs(*r.small - Real(Rational(1, 3), r.small->precision())) < Real("1e-4", r.small->precision()));
  // Refined values are roots of p_50.
  const auto p = to_precision(charpoly_closed_form(beta_of("4/3"), 50), r.small->precision());
  CHECK(abs(evaluate(p, Complex(*r.small))) < Real("1e-25", r.small->precision()));
}

TEST_CASE("outlier errors shrink with n") {
  const BetaParam beta = beta_of("3/2");
  Real prev_small(1, Precision(64));
  Real prev_large(1, Precision(64));
  for (std::size_t n : {40, 80, 160}) {
    const OutlierRecord r = find_outliers(beta, n, 80);
    REQUIRE(r.present());
    CHECK(*r.err_small < prev_small);
    CHECK(*r.err_large < prev_large);
    prev_small = *r.err_small;
    prev_large = *r.err_large;
  }
}

TEST_CASE("outlier preconditions and diagnostics") {
  CHECK_THROWS_AS(find_outliers(beta_of("3"), 50, 20), Error);
  CHECK_THROWS_AS(find_outliers(beta_of("1"), 50, 20), Error);
  CHECK_THROWS_AS(find_outliers(beta_of("4/3"), 1, 20), Error);
  // Order 2 at a wide annulus: fewer than two real positive outliers.
  const OutlierRecord tiny = find_outliers(beta_of("4/3"), 2, 20, 0.6);
  CHECK_FALSE(tiny.present());
  CHECK_FALSE(tiny.diagnostic.empty());
  // Before separation many eigenvalues sit off the annulus.
  try {
    find_outliers(beta_of("4/3"), 30, 20);
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::inconsistency);
  }
}

TEST_CASE("singular values: dense and structured routes agree with an SVD oracle") {
  for (const char* text : {"3", "4/3", "1", "1+i", "-2"}) {
    const BetaParam beta = beta_of(text);
    for (std::size_t n : {1, 2, 5, 24}) {
      const auto dense = singular_values(beta, n, Precision(128), SvdMethod::dense);
      const auto structured = singular_values(beta, n, Precision(128), SvdMethod::structured);
      const auto reference = oracle::singular_values(BetaMatrix(beta, n));
      REQUIRE(dense.size() == n);
      REQUIRE(structured.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        // The structured route works with sigma^2, so a zero sigma (beta = 1)
        // is only resolved to about half the working precision.
        INFO("beta=", std::string(text), " n=", n, " i=", i);
        CHECK(abs(dense[i] * dense[i] - structured[i] * structured[i]) < Real("1e-30", Precision(128)));
        CHECK(std::abs(dense[i].to_double() - reference[i]) < 1e-12);
        if (i > 0) CHECK(dense[i] <= dense[i - 1]);
      }
    }
  }
}

TEST_CASE("order one singular value") {
  const auto s = singular_values(beta_of("2"), 1, Precision(128));
  REQUIRE(s.size() == 1);
  CHECK(s[0] == Real(Rational(1, 2), Precision(128)));
}

TEST_CASE("singular values bracket the extreme eigenvalue moduli") {
  const BetaParam beta = beta_of("4/3");
  const auto s = singular_values(beta, 50, Precision(256));
  const RootSet r = spectrum(beta, 50);
  Real largest(Precision(256));
  Real smallest(10, Precision(256));
  for (const auto& z : r.roots) {
    largest = max(largest, abs(z));
    smallest = min(smallest, abs(z));
  }
  CHECK(s.front() >= largest);
  CHECK(s.back() <= smallest);
}

TEST_CASE("at most three singular values differ from one") {
  // A rank-one change of the shift (singular values 1,...,1,0) moves at most
  // three singular values by interlacing.
  for (const char* text : {"4/3", "3", "5", "1+i"}) {
    for (std::size_t n : {60, 100, 200}) {
      CHECK(count_far_from_one(singular_values(beta_of(text), n, Precision(256)), "1e-8") <= 3);
    }
  }
  // beta = 3, n = 100: at least 97 values within 1e-10 of 1.
  CHECK(count_far_from_one(singular_values(beta_of("3"), 100, Precision(256)), "1e-10") <= 3);
}

TEST_CASE("test function family") {
  CHECK(parse_test_function("radial_bump") == TestFunction::radial_bump);
  CHECK_THROWS_AS(parse_test_function("nope"), Error);
  for (const TestFunction f : all_test_functions()) CHECK(parse_test_function(test_function_name(f)) == f);

  const Precision p(128);
  CHECK(evaluate_test_function(TestFunction::radial_bump, Complex(Real(1, p))) == Real(1, p));
  CHECK(evaluate_test_function(TestFunction::radial_bump, Complex(Real(2, p))).is_zero());
  CHECK(evaluate_test_function(TestFunction::unit_ball, Complex(Real(3, p))) == Real(1, p));
  CHECK(evaluate_test_function(TestFunction::unit_ball, Complex(Real(6, p))).is_zero());
  const Real mid = evaluate_test_function(TestFunction::unit_ball, Complex(Real(Rational(9, 2), p)));
  CHECK(abs(mid - Real(0.5, p)) < Real(1e-30, p));
}

TEST_CASE("constant test function on a covering ball has zero gap") {
  const RootSet r = spectrum(beta_of("3"), 40);
  const WeylReport w = weyl_sum(r.roots, TestFunction::unit_ball, WeylKind::eigen);
  CHECK(w.empirical == Real(1, w.empirical.precision()));
  CHECK(w.gap < Real(1e-30, w.gap.precision()));
}

TEST_CASE("real moment equals trace / n") {
  for (const char* text : {"3", "4/3"}) {
    const BetaParam beta = beta_of(text);
    const std::size_t n = 50;
    const RootSet r = spectrum(beta, n);
    const WeylReport w = weyl_sum(r.roots, TestFunction::re_moment, WeylKind::eigen);
    const Real expected = Real(BetaMatrix(beta, n).trace().re(), w.empirical.precision()) / static_cast<long>(n);
    CHECK(abs(w.empirical - expected) < Real(1e-25, expected.precision()));
    CHECK(abs(w.reference) < Real(1e-30, expected.precision()));
  }
}

TEST_CASE("eigenvalue Weyl gap for the radial bump decreases (beta = 3)") {
  Real prev(1, Precision(64));
  for (std::size_t n : {25, 50, 100}) {
    const WeylReport w = weyl_sum(spectrum(beta_of("3"), n).roots, TestFunction::radial_bump, WeylKind::eigen);
    CHECK(w.gap < prev);
    prev = w.gap;
  }
}

TEST_CASE("singular Weyl gap is of order 1/n") {
  for (std::size_t n : {50, 100}) {
    const auto s = singular_values(beta_of("3"), n, Precision(128));
    for (const TestFunction f : all_test_functions()) {
      const WeylReport w = weyl_sum(s, f, WeylKind::singular);
      CHECK(w.gap <= Real(5.0 / static_cast<double>(n), Precision(128)));
    }
  }
  CHECK_THROWS_AS(weyl_sum(std::vector<Real>{}, TestFunction::unit_ball, WeylKind::singular), Error);
}

TEST_CASE("quasi-normality gap") {
  CHECK(quasi_normality_gap(beta_of("3"), 1, Precision(128)).is_zero());
  const Real g25 = quasi_normality_gap(beta_of("3"), 25, Precision(256));
  const Real g50 = quasi_normality_gap(beta_of("3"), 50, Precision(256));
  CHECK(g50 < g25);
  CHECK_THROWS_AS(quasi_normality_gap(beta_of("1/2"), 10, Precision(128)), Error);
}

TEST_CASE("quasi-normality gap for beta = 4/3 is of order 1/n") {
  const std::size_t n = 100;
  const Real g = quasi_normality_gap(beta_of("4/3"), n, Precision(256));
  CHECK(g * static_cast<long>(n) < Real(20, g.precision()));
}

TEST_CASE("conditioning bound") {
  const ConditionCheck two = condition_bound_check(beta_of("2"), 30, Precision(128));
  CHECK(two.bound == Real(1, Precision(128)));
  CHECK(two.satisfied);
  const ConditionCheck three = condition_bound_check(beta_of("3"), 100, Precision(128));
  CHECK(three.bound == Real(4, Precision(128)));
  CHECK(three.satisfied);
  const ConditionCheck c = condition_bound_check(beta_of("4/3"), 100, Precision(128));
  CHECK(c.bound == Real(9, Precision(128)));
  CHECK(c.kappa >= Real(Rational(882, 100), Precision(128)));
  CHECK_THROWS_AS(condition_bound_check(beta_of("1"), 10, Precision(128)), Error);
}
