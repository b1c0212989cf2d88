#include <doctest.h>

#include "betaspec/charpoly.hpp"

using namespace betaspec;

namespace {

BetaParam beta_of(const char* text) { return BetaParam::parse(text); }

ExactPoly poly(std::initializer_list<ExactComplex> c) { return ExactPoly(std::vector<ExactComplex>(c)); }

Complex at(const char* re, const char* im, Precision p) { return Complex(Real(re, p), Real(im, p)); }

}  // namespace

TEST_CASE("order one") {
  for (const char* text : {"2", "4/3", "1+i"}) {
    const BetaParam beta = beta_of(text);
    CHECK(charpoly_closed_form(beta, 1) == poly({ExactComplex(1) - beta.inverse_power(1), ExactComplex(1)}));
  }
  CHECK_THROWS_AS(charpoly_closed_form(beta_of("2"), 0), Error);
}

TEST_CASE("constant term is 1 - 1/beta and the polynomial is monic") {
  for (const char* text : {"4/3", "3", "1", "-2+1/2i"}) {
    const BetaParam beta = beta_of(text);
    for (std::size_t n : {1, 2, 7, 40}) {
      const ExactPoly p = charpoly_closed_form(beta, n);
      CHECK(p.degree() == n);
      CHECK(p.leading() == ExactComplex(1));
      CHECK(p.coeff(0) == ExactComplex(1) - beta.inverse_power(1));
    }
  }
}

TEST_CASE("closed form equals the determinant oracle") {
  for (const char* text : {"4/3", "3/2", "2", "3", "5", "1", "1-2i"}) {
    const BetaParam beta = beta_of(text);
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(charpoly_closed_form(beta, n) == det_oracle(symbolic_shifted(beta, n)));
    }
  }
}

TEST_CASE("two by two oracle expanded by hand") {
  // det [[t + 1/2, 1/2], [-5/4, t - 1/4]] = t^2 + t/4 + 1/2
  CHECK(det_oracle(symbolic_shifted(beta_of("2"), 2)) ==
        poly({ExactComplex(Rational(1, 2)), ExactComplex(Rational(1, 4)), ExactComplex(1)}));
}

TEST_CASE("auxiliary determinant is (-1)^n sum t^i") {
  CHECK(det_oracle(symbolic_aux_matrix(1)) == poly({ExactComplex(-1), ExactComplex(-1)}));
  for (std::size_t n = 1; n <= 10; ++n) {
    const ExactComplex sign = n % 2 == 0 ? ExactComplex(1) : ExactComplex(-1);
    CHECK(det_oracle(symbolic_aux_matrix(n)) == ExactPoly(std::vector<ExactComplex>(n + 1, sign)));
  }
}

TEST_CASE("oracle refuses large matrices") {
  try {
    det_oracle(symbolic_aux_matrix(13));
    FAIL("expected size limit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit);
  }
}

TEST_CASE("closed form at rational points equals exact Gaussian elimination") {
  for (const char* text : {"4/3", "5"}) {
    const BetaParam beta = beta_of(text);
    for (std::size_t n : {5, 12, 20}) {
      const ExactPoly p = charpoly_closed_form(beta, n);
      for (const ExactComplex& t : {ExactComplex(Rational(1, 3)), ExactComplex(Rational(-7, 2)), ExactComplex(2, 1)}) {
        CHECK(evaluate(p, t) == determinant(build_shifted(beta, n, t)));
      }
    }
  }
}

TEST_CASE("split into q_n and r_n") {
  const BetaParam two = beta_of("2");
  auto [q1, r1] = split_qr(two, 1);
  CHECK(q1 == poly({ExactComplex(1), ExactComplex(1)}));
  CHECK(r1 == poly({ExactComplex(Rational(1, 2))}));
  auto [q2, r2] = split_qr(two, 2);
  CHECK(r2 == poly({ExactComplex(Rational(1, 2)), ExactComplex(Rational(3, 4))}));

  for (const char* text : {"4/3", "3", "2+i"}) {
    const BetaParam beta = beta_of(text);
    for (std::size_t n : {1, 3, 9, 15}) {
      auto [q, r] = split_qr(beta, n);
      CHECK(q - r == charpoly_closed_form(beta, n));
      CHECK(evaluate(q, ExactComplex(1)) == ExactComplex(static_cast<long>(n) + 1));
      // r_n by enumerating every (i, j) in the double sum.
      std::vector<ExactComplex> brute(n, ExactComplex(0));
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j <= n - i; ++j) brute[i + j - 1] += beta.inverse_power(static_cast<long>(i));
      }
      CHECK(r == ExactPoly(brute));
    }
  }
}

TEST_CASE("reversal") {
  const ExactPoly p = poly({ExactComplex(Rational(1, 2)), ExactComplex(1)});
  CHECK(reverse_poly(p) == poly({ExactComplex(1), ExactComplex(Rational(1, 2))}));
  const ExactPoly p9 = charpoly_closed_form(beta_of("4/3"), 9);
  CHECK(reverse_poly(reverse_poly(p9)) == p9);
  try {
    reverse_poly(poly({ExactComplex(0), ExactComplex(1)}));
    FAIL("expected zero_root");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zero_root);
  }
}

TEST_CASE("real beta gives real coefficients") {
  CHECK(has_real_coefficients(charpoly_closed_form(beta_of("4/3"), 30)));
  CHECK_FALSE(has_real_coefficients(charpoly_closed_form(beta_of("1+i"), 3)));
}

TEST_CASE("limit functions at simple points") {
  const Precision p(256);
  const Real tiny = ldexp(Real(1, p), -240);
  for (const char* text : {"4/3", "3/2", "3"}) {
    const BetaParam beta = beta_of(text);
    const Complex zero(p);
    const Complex beta_p(beta.value(), p);
    const Complex one(Real(1, p));
    const LimitFunction fp{LimitKind::p, beta};
    const LimitFunction ft{LimitKind::p_tilde, beta};
    CHECK(abs(eval_limit(fp, zero) - (beta_p - one) / beta_p) < tiny);
    CHECK(abs(eval_limit(ft, zero) - one) < tiny);
    if (beta.value().re() < 2) {
      const Complex root = beta_p - one;
      CHECK(abs(eval_limit(fp, root)) < tiny);
      CHECK(abs(eval_limit(ft, root)) < tiny);
    }
  }
}

TEST_CASE("limit derivatives agree with central differences") {
  const Precision p(256);
  const Real h = ldexp(Real(1, p), -80);
  for (const char* text : {"4/3", "3/2", "3", "7/4"}) {
    const BetaParam beta = beta_of(text);
    for (const LimitKind kind : {LimitKind::p, LimitKind::p_tilde}) {
      const LimitFunction fn{kind, beta};
      for (const Complex& t : {at("0.25", "0", p), at("-0.5", "0.3", p), at("0", "0.6", p)}) {
        const Complex step(h, Real(p));
        const Complex fd = (eval_limit(fn, t + step) - eval_limit(fn, t - step)) * (Real(1, p) / (h * 2L));
        CHECK(abs(limit_derivative(fn, t) - fd) < ldexp(Real(1, p), -120));
      }
    }
  }
}

TEST_CASE("limit derivatives at the zero beta - 1") {
  // Values implied by the general derivative formulas: p'(beta-1) = 1/(beta-2),
  // p~'(beta-1) = 1/((beta-2)(beta-1)); both nonzero for beta in (1, 2).
  const Precision p(256);
  for (const char* text : {"4/3", "3/2", "5/4"}) {
    const BetaParam beta = beta_of(text);
    const Rational b = beta.value().re();
    const Complex z(Real(Rational(b - 1), p));
    const Complex dp = limit_derivative({LimitKind::p, beta}, z);
    const Complex dt = limit_derivative({LimitKind::p_tilde, beta}, z);
    CHECK(abs(dp - Complex(Real(Rational(1 / (b - 2)), p))) < ldexp(Real(1, p), -240));
    CHECK(abs(dt - Complex(Real(Rational(1 / ((b - 2) * (b - 1))), p))) < ldexp(Real(1, p), -240));
    CHECK_FALSE(dp.is_zero());
    CHECK_FALSE(dt.is_zero());
  }
}

TEST_CASE("limit function domain errors") {
  const Precision p(128);
  const LimitFunction fn{LimitKind::p, beta_of("4/3")};
  CHECK_THROWS_AS(eval_limit(fn, Complex(Real(1, p))), Error);
  CHECK_THROWS_AS(eval_limit(fn, at("0.8", "0.8", p)), Error);
  CHECK_THROWS_AS(eval_limit({LimitKind::p, beta_of("1")}, Complex(p)), Error);
  CHECK_THROWS_AS(eval_limit({LimitKind::p, beta_of("1/2")}, Complex(p)), Error);
}

TEST_CASE("p_n and reversed p_n converge to the limit functions") {
  const Precision p(256);
  for (const char* text : {"4/3", "3"}) {
    const BetaParam beta = beta_of(text);
    for (const Complex& t : {at("0.5", "0", p), at("0", "0.5", p), at("-0.7", "0", p)}) {
      const Complex lp = eval_limit({LimitKind::p, beta}, t);
      const Complex lt = eval_limit({LimitKind::p_tilde, beta}, t);
      Real prev_p(10, p);
      Real prev_t(10, p);
      for (std::size_t n : {10, 20, 40, 80, 160}) {
        const ExactPoly pn = charpoly_closed_form(beta, n);
        const Real dp = abs(evaluate(to_precision(pn, p), t) - lp);
        const Real dt = abs(evaluate(to_precision(reverse_poly(pn), p), t) - lt);
        CHECK(dp < prev_p);
        CHECK(dt < prev_t);
        prev_p = dp;
        prev_t = dt;
      }
      CHECK(prev_p < Real(1e-10, p));
      CHECK(prev_t < Real(1e-10, p));
    }
  }
}
