#include <doctest.h>

#include "support.hpp"

using namespace macmp;
using namespace testsupport;

namespace {

XPoly x(int n, int i) { return XPoly::var(n, i); }

/// Divided difference of a single monomial by the finite geometric sum, as an
/// independent check of the long-division implementation.
XPoly divided_difference_oracle(const XPoly& f, int i) {
  const int n = f.nvars();
  XPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    int sign = a > b ? 1 : -1;
    int lo = std::min(a, b), hi = std::max(a, b);
    for (int k = 0; k < hi - lo; ++k) {
      Exponents g = e;
      g[i - 1] = lo + (hi - lo - 1 - k);
      g[i] = lo + k;
      out.add_term(g, c * QTRat(sign));
    }
  }
  return out;
}

XPoly demazure_oracle(const XPoly& f, int i) {
  const int n = f.nvars();
  XPoly h = divided_difference_oracle(f, i);
  return f * t() - (x(n, i) * t() - x(n, i + 1)) * h;
}

}  // namespace

TEST_SUITE("xring") {
  TEST_CASE("transpositions") {
    CHECK(apply_s(x(2, 1), 1) == x(2, 2));
    CHECK(apply_s(x(2, 1) * x(2, 2), 1) == x(2, 1) * x(2, 2));
    CHECK(apply_s(XPoly::monomial({2, 0, 1}), 2) == XPoly::monomial({2, 1, 0}));
    CHECK_THROWS_AS(apply_s(x(3, 1), 0), IndexOutOfRange);
    CHECK_THROWS_AS(apply_s(x(3, 1), 3), IndexOutOfRange);
  }

  TEST_CASE("Demazure operator examples") {
    CHECK(demazure_T(x(2, 1), 1) == x(2, 2));
    CHECK(demazure_T(XPoly::constant(2, 1), 1) == XPoly::constant(2, t()));
    CHECK(demazure_T(x(2, 2), 1) == x(2, 1) * t() + x(2, 2) * (t() - QTRat(1)));
    CHECK_THROWS_AS(demazure_T(x(2, 1), 2), IndexOutOfRange);
    CHECK(divided_difference(x(2, 1), 1) == XPoly::constant(2, 1));
  }

  TEST_CASE("inverse Demazure operator") {
    CHECK(demazure_T_inv(x(2, 2), 1) == x(2, 1));
    CHECK(demazure_T_inv(XPoly::constant(2, 1), 1) == XPoly::constant(2, QTRat(1) / t()));
    XPoly sq = XPoly::monomial({2, 0});
    CHECK(demazure_T_inv(demazure_T(sq, 1), 1) == sq);
    for (int k = 0; k < 10; ++k) {
      XPoly f = random_xpoly(3, 4, 3);
      int i = uniform(1, 2);
      CHECK(demazure_T(demazure_T_inv(f, i), i) == f);
      CHECK(demazure_T_inv(demazure_T(f, i), i) == f);
    }
  }

  TEST_CASE("Demazure operator against the geometric-sum oracle") {
    for (int k = 0; k < 25; ++k) {
      XPoly f = random_xpoly(4, 5, 4);
      int i = uniform(1, 3);
      CHECK(divided_difference(f, i) == divided_difference_oracle(f, i));
      CHECK(demazure_T(f, i) == demazure_oracle(f, i));
    }
  }

  TEST_CASE("Hecke relations on random polynomials") {
    for (int k = 0; k < 12; ++k) {
      XPoly f = random_xpoly(4, 4, 3);
      for (int i = 1; i <= 3; ++i) {
        XPoly Tf = demazure_T(f, i);
        // (T - t)(T + 1) f = 0
        XPoly g = Tf + f;
        CHECK(demazure_T(g, i) - g * t() == XPoly(4));
        CHECK(Tf.degree() == f.degree());
        if (f.is_homogeneous()) CHECK(Tf.is_homogeneous());
      }
      for (int i = 1; i <= 2; ++i)
        CHECK(demazure_T(demazure_T(demazure_T(f, i), i + 1), i) ==
              demazure_T(demazure_T(demazure_T(f, i + 1), i), i + 1));
      CHECK(demazure_T(demazure_T(f, 1), 3) == demazure_T(demazure_T(f, 3), 1));
      for (int i = 1; i <= 2; ++i) CHECK(shift_omega(demazure_T(f, i + 1)) == demazure_T(shift_omega(f), i));
    }
  }

  TEST_CASE("affine shift") {
    CHECK(shift_omega(x(3, 1)) == x(3, 3) * q());
    CHECK(shift_omega(x(3, 2)) == x(3, 1));
    CHECK(shift_omega(XPoly::monomial({2, 1, 0})) == XPoly::monomial({1, 0, 2}, q() * q()));
    XPoly f = random_xpoly(3, 4, 2);
    XPoly g = f;
    for (int k = 0; k < 3; ++k) g = shift_omega(g);
    // omega^n multiplies x^e by q^{|e|}.
    XPoly expect(3);
    for (const auto& [e, c] : f.terms()) expect.add_term(e, c * q().pow(e[0] + e[1] + e[2]));
    CHECK(g == expect);
  }

  TEST_CASE("coefficients and symmetry") {
    XPoly lead = XPoly::monomial({0, 0, 1, 1, 2, 2});
    CHECK(coeff_of(lead, {0, 0, 1, 1, 2, 2}) == QTRat(1));
    CHECK(coeff_of(lead, {0, 0, 1, 1, 2, 1}) == QTRat(0));
    CHECK(is_symmetric(x(2, 1) + x(2, 2)));
    CHECK_FALSE(is_symmetric(x(2, 1)));
    CHECK(is_symmetric(XPoly::constant(3, q())));
    CHECK(eval_at_ones(x(2, 1) * q() + x(2, 2) * t()) == q() + t());
  }

  TEST_CASE("arithmetic") {
    XPoly a = x(2, 1) + x(2, 2);
    CHECK(a * a == XPoly::monomial({2, 0}) + XPoly::monomial({1, 1}, 2) + XPoly::monomial({0, 2}));
    CHECK(a - a == XPoly(2));
    CHECK((a * q()) / q() == a);
    CHECK(a.times_monomial({1, 0}, t()) == XPoly::monomial({2, 0}, t()) + XPoly::monomial({1, 1}, t()));
    CHECK_THROWS_AS(XPoly(2) + XPoly(3), LengthMismatch);
  }

  TEST_CASE("specialization of coefficients") {
    XPoly f = x(2, 1) + x(2, 2) * (one_minus(0, 1) / one_minus(1, 1));
    CHECK(specialize(f, Specialization::q_zero()) == x(2, 1) + x(2, 2) * one_minus(0, 1));
    XPoly g = x(2, 1) * one_minus(1, 0);
    CHECK(specialize(g, Specialization::q_one()).is_zero());
  }

  TEST_CASE("text, latex and ordering") {
    XPoly a = x(2, 1) + x(2, 2);
    CHECK(to_string(a) == "x1 + x2");
    CHECK(to_string(a * a) == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(to_string(x(2, 2) + XPoly::monomial({2, 0})) == "x1^2 + x2");
    CHECK(to_string(XPoly::monomial({1, 1}, one_minus(0, 1))) == "(1 - t)*x1*x2");
    CHECK(to_string(XPoly::constant(2, 1)) == "1");
    CHECK(to_string(XPoly(2)) == "0");
    CHECK(to_string(x(2, 1) * QTRat(-1)) == "-x1");
    CHECK(to_latex(XPoly::monomial({2, 1}, one_minus(0, 1) / one_minus(1, 1))) ==
          "\\frac{1 - t}{1 - q t} x_{1}^{2} x_{2}");
  }

  TEST_CASE("json schema and round trip") {
    XPoly f = x(2, 1) + x(2, 2) * q();
    CHECK(to_json(f).dump() ==
          R"({"n":2,"terms":[{"exp":[0,1],"coef":{"num":[[1,0,1]],"den":[[0,0,1]]}},{"exp":[1,0],"coef":{"num":[[0,0,1]],"den":[[0,0,1]]}}]})");
    for (int k = 0; k < 15; ++k) {
      XPoly g = random_xpoly(3, 5, 3);
      std::string s = to_json(g).dump();
      XPoly back = xpoly_from_json(nlohmann::ordered_json::parse(s));
      CHECK(back == g);
      CHECK(to_json(back).dump() == s);
    }
  }
}
