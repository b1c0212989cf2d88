#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "betaspec/betamatrix.hpp"
#include "betaspec/limitcase.hpp"
#include "oracles.hpp"

using namespace betaspec;

TEST_CASE("kernel vector of order 2 and 3") {
  const auto w2 = kernel_vector(2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == 1);
  CHECK(w2[1] == -2);
  const auto w3 = kernel_vector(3);
  REQUIRE(w3.size() == 3);
  CHECK(w3[0] == 1);
  CHECK_THROWS_AS(kernel_vector(1), Error);
}

TEST_CASE("kernel vector is annihilated exactly") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto w = kernel_vector(n);
    std::vector<ExactComplex> x(w.begin(), w.end());
    const auto y = BetaMatrix(BetaParam::parse("1"), n).apply(x);
    for (const auto& v : y) CHECK(v.is_zero());
  }
}

TEST_CASE("rank of B_n at beta = 1 is n - 1") {
  for (std::size_t n : {3, 6, 12}) {
    const Eigen::MatrixXcd m = oracle::dense_double(BetaMatrix(BetaParam::parse("1"), n));
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    lu.setThreshold(1e-10);
    CHECK(lu.rank() == static_cast<Eigen::Index>(n - 1));
  }
}

TEST_CASE("power trace first components match the closed forms") {
  for (std::size_t n : {10, 50, 100}) {
    const PowerTrace t = power_method_trace(n, 6);
    REQUIRE(t.first_components.size() == 7);
    REQUIRE(t.ratios.size() == 6);
    CHECK(t.first_components[0] == 1);
    for (unsigned k = 1; k <= 5; ++k) {
      CHECK(t.first_components[k] == table_first_component(k, Integer(static_cast<unsigned long>(n))));
    }
  }
  CHECK_THROWS_AS(power_method_trace(2, 3), Error);
  CHECK_THROWS_AS(power_method_trace(5, 0), Error);
  CHECK_THROWS_AS(table_first_component(6, Integer(10)), Error);
}

TEST_CASE("ratio closed forms") {
  for (long n : {10L, 50L, 100L}) {
    const PowerTrace t = power_method_trace(static_cast<std::size_t>(n), 6);
    const Rational N(n);
    CHECK(t.ratios[1] == N - Rational(1) / (N - 1));
    CHECK(t.ratios[2] == N - N / (N * N - N - 1));
    CHECK(t.ratios[3] == N - (N - 1) / (N * (N - 2)));
    CHECK(t.ratios[4] == N - (N * N * N - 2 * N - 1) / (N * N * N * N - N * N * N - 3 * N * N + 1));
  }
}

TEST_CASE("ratio sequence shape around lambda_M") {
  // At n = 10 the subdominant complex pair makes r_9 dip below lambda_M, so
  // the monotone shape is only asserted over the first iterates.
  for (std::size_t n : {10, 50}) {
    const PowerTrace t = power_method_trace(n, 8);
    const AsymptoticFit fit = lambda_max_beta1(n, 40);
    const Precision p = fit.lambda_max.precision();
    CHECK(Real(t.ratios[0], p) < fit.lambda_max);
    for (std::size_t k = 1; k < t.ratios.size(); ++k) {
      CHECK(Real(t.ratios[k], p) >= fit.lambda_max);
      if (k > 1) CHECK(t.ratios[k] < t.ratios[k - 1]);
    }
    const Real last = Real(t.ratios.back(), p);
    CHECK(abs(last - fit.lambda_max) < Real(1e-8, p));
  }
}

TEST_CASE("dominant eigenvalue small orders") {
  const AsymptoticFit two = lambda_max_beta1(2, 30);
  CHECK(two.lambda_max == Real(1, two.lambda_max.precision()));
  const AsymptoticFit three = lambda_max_beta1(3, 30);
  const Precision p = three.lambda_max.precision();
  CHECK(abs(three.lambda_max - (Real(1, p) + sqrt(Real(2, p)))) < Real("1e-28", p));
  CHECK_THROWS_AS(lambda_max_beta1(1, 30), Error);
}

TEST_CASE("dominant eigenvalue agrees with a dense eigensolver") {
  for (std::size_t n : {4, 10, 30, 60}) {
    const auto eigs = oracle::eigenvalues(BetaMatrix(BetaParam::parse("1"), n));
    double largest = 0;
    for (const auto& z : eigs) largest = std::max(largest, z.real());
    CHECK(std::abs(lambda_max_beta1(n, 30).lambda_max.to_double() - largest) < 1e-9 * n);
  }
}

TEST_CASE("asymptotic table values") {
  struct Row {
    std::size_t n;
    const char* c0;
    const char* c1;
  };
  for (const Row& r : {Row{50, "-0.0204166702", "-1.0208335106"}, Row{100, "-0.0101020409", "-1.0102040921"},
                       Row{200, "-0.0050252525", "-1.0050505056"}, Row{400, "-0.0025062814", "-1.0025125628"}}) {
    const AsymptoticFit fit = lambda_max_beta1(r.n, 30);
    const Precision p = fit.c0_est.precision();
    // The printed digits are truncated, not rounded.
    CHECK(abs(fit.c0_est - Real(r.c0, p)) < Real("1e-10", p));
    CHECK(abs(fit.c1_est - Real(r.c1, p)) < Real("1e-10", p));
    CHECK(fit.lambda_max < Real(static_cast<long>(r.n), p));
  }
}

TEST_CASE("upper bound n on lambda_M") {
  for (std::size_t n : {3, 10, 100}) CHECK(gerschgorin_check(n));
}

TEST_CASE("Richardson step on c2") {
  std::vector<AsymptoticFit> fits;
  for (std::size_t n : {100, 200}) fits.push_back(lambda_max_beta1(n, 30));
  const Real c2 = richardson_c2(fits);
  // d(n) = n^2 (lambda_M - n + 1/n) recomputed from the two fits.
  const Precision p = c2.precision();
  auto d = [&](const AsymptoticFit& f) {
    const Real n(static_cast<long>(f.n), p);
    return n * n * (f.c0_est + Real(1, p) / n);
  };
  const Real expected = (d(fits[1]) * 200L - d(fits[0]) * 100L) / 100L;
  CHECK(abs(c2 - expected) < Real("1e-15", p));
  CHECK_THROWS_AS(richardson_c2({fits[0]}), Error);
}
