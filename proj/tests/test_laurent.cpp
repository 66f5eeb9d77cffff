#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidtk/laurent.hpp"

using namespace braidtk;

TEST_CASE("one variable arithmetic") {
  const LaurentPoly1 a{{2, 1}, {0, -3}};           // t^2 - 3
  const LaurentPoly1 b{{-1, 2}, {0, 1}};           // 2 t^-1 + 1
  CHECK((a + b) == LaurentPoly1{{2, 1}, {0, -2}, {-1, 2}});
  CHECK((a - a).is_zero());
  CHECK((a * b) == LaurentPoly1{{2, 1}, {1, 2}, {0, -3}, {-1, -6}});
  CHECK(-a == LaurentPoly1{{2, -1}, {0, 3}});
  CHECK(a.shifted(3) == LaurentPoly1{{5, 1}, {3, -3}});
  CHECK(a.mirrored() == LaurentPoly1{{-2, 1}, {0, -3}});
  CHECK(a.eval_at_one() == -2);
  CHECK(a.min_exp() == 0);
  CHECK(a.max_exp() == 2);
  CHECK(LaurentPoly1(0).is_zero());
  CHECK_THROWS_AS(LaurentPoly1().min_exp(), std::domain_error);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly1 p{{3, 5}, {1, -2}};
  LaurentPoly1 q{{3, -5}, {0, 7}};
  CHECK((p + q).term_count() == 2);  // t^3 terms cancel
  CHECK((p + q).coeff(3) == 0);
  CHECK((p + q).coeff(1) == -2);
}

TEST_CASE("exact division") {
  const LaurentPoly1 q{{2, 1}, {0, -1}, {-2, 4}};
  const LaurentPoly1 d{{1, 3}, {-1, 1}};
  CHECK((q * d).div_exact(d) == q);
  const LaurentPoly1 tp1{{1, 1}, {0, 1}}, tm1{{1, 1}, {0, -1}};
  CHECK_THROWS_AS(tp1.div_exact(tm1), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly1(1).div_exact(LaurentPoly1(0)), std::domain_error);
  // coefficient divisibility failure
  const LaurentPoly1 three_t{{1, 3}}, two_tp2{{0, 2}, {1, 2}};
  CHECK_THROWS_AS(three_t.div_exact(two_tp2), std::domain_error);
}

TEST_CASE("big coefficients stay exact") {
  LaurentPoly1 p{{0, 3}};
  LaurentPoly1 acc(1);
  for (int i = 0; i < 100; ++i) acc = acc * p;
  mpz_class want;
  mpz_ui_pow_ui(want.get_mpz_t(), 3, 100);
  CHECK(acc.coeff(0) == want);
  CHECK(acc.term_count() == 1);
}

TEST_CASE("one variable printing") {
  CHECK(LaurentPoly1(0).str() == "0");
  CHECK(LaurentPoly1(1).str() == "1");
  CHECK(LaurentPoly1(-7).str() == "-7");
  CHECK(LaurentPoly1{{1, 1}}.str() == "t");
  CHECK(LaurentPoly1{{1, 2}}.str() == "2*t");
  CHECK(LaurentPoly1{{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}.str() ==
        "t^2 - t + 1 - t^-1 + t^-2");
  CHECK(LaurentPoly1{{-3, -4}}.str() == "-4*t^-3");
}

TEST_CASE("one variable json") {
  const LaurentPoly1 p{{2, 1}, {0, -3}};
  const nlohmann::json j = p.to_json();
  CHECK(j.dump() == "[[1,2],[-3,0]]");
}

TEST_CASE("two variable arithmetic and printing") {
  const LaurentPoly2 x = LaurentPoly2::monomial(1, 0, 1);
  const LaurentPoly2 t = LaurentPoly2::monomial(1, 1, 0);
  const LaurentPoly2 p = t * t * x + LaurentPoly2(1) - x * x * LaurentPoly2::monomial(3, -1, 0);
  CHECK(p.str() == "-3*t^-1*x^2 + t^2*x + 1");
  CHECK(p.coeff(2, 1) == 1);
  CHECK(p.coeff(-1, 2) == -3);
  CHECK(p.max_x_exp() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.x_coefficient(1) == LaurentPoly1{{2, 1}});
  CHECK(p.x_coefficient(0) == LaurentPoly1(1));
}

TEST_CASE("two variable print order: x descending, t ascending") {
  LaurentPoly2 p;
  p = p + LaurentPoly2::monomial(2, 5, 3) + LaurentPoly2::monomial(-1, 4, 3) +
      LaurentPoly2::monomial(1, 9, 5) + LaurentPoly2::monomial(1, 0, 0);
  CHECK(p.str() == "t^9*x^5 - t^4*x^3 + 2*t^5*x^3 + 1");
  CHECK(p.to_json().dump() == "[[1,9,5],[-1,4,3],[2,5,3],[1,0,0]]");
}

TEST_CASE("unit normalization") {
  // shift both exponents to zero, leading (x,t)-lex coefficient positive
  LaurentPoly2 p = LaurentPoly2::monomial(-1, 3, 2) + LaurentPoly2::monomial(2, 1, 1);
  const LaurentPoly2 n = p.normalized();
  CHECK(n == LaurentPoly2::monomial(1, 2, 1) + LaurentPoly2::monomial(-2, 0, 0));
  CHECK(LaurentPoly2(0).normalized().is_zero());
  // normalizing twice is stable
  CHECK(n.normalized() == n);
}
