#include <doctest.h>

#include "macmp/lattice.hpp"

using namespace macmp;

namespace {

/// Sets y = x in a polynomial over (x, y, q, t).
XYPoly diagonal(const XYPoly& p) {
  XYPoly r;
  for (const auto& term : p.terms()) {
    auto e = term.exp;
    e[0] += e[1];
    e[1] = 0;
    r += XYPoly::monomial(e, term.coef);
  }
  return r;
}

std::vector<std::string> row_strings(const OpMatrix& m) {
  std::vector<std::string> rows;
  for (int i = 0; i < m.rows; ++i) {
    std::string s;
    for (int j = 0; j < m.cols; ++j) s += (j ? " | " : "") + to_string(m.at(i, j));
    rows.push_back(s);
  }
  return rows;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("rank-1 R-matrix layout") {
    RMatrix R = build_R(1);
    using E = REntry;
    std::vector<std::vector<REntry>> expect{{E::One, E::Zero, E::Zero, E::Zero},
                                            {E::Zero, E::CMinus, E::BPlus, E::Zero},
                                            {E::Zero, E::BMinus, E::CPlus, E::Zero},
                                            {E::Zero, E::Zero, E::Zero, E::One}};
    CHECK(R.entries == expect);
    CHECK(R.dim == 4);
  }

  TEST_CASE("R-matrix entries and stochastic rows") {
    const XYPoly x = xy_x(), y = xy_y(), t = xy_t(), one(1);
    CHECK(RMatrix::denominator() == t * x - y);
    RMatrix R = build_R(1);
    CHECK(R.numerator(1, 2) == t * (x - y));
    CHECK(R.numerator(2, 1) == x - y);
    CHECK(R.numerator(1, 1) == x * (t - one));
    CHECK(R.numerator(2, 2) == y * (t - one));
    CHECK(R.numerator(1, 2) + R.numerator(2, 2) == RMatrix::denominator());
    CHECK(R.numerator(2, 1) + R.numerator(1, 1) == RMatrix::denominator());
  }

  TEST_CASE("R-matrix is the identity on the diagonal x = y") {
    for (int r = 1; r <= 3; ++r) {
      RMatrix R = build_R(r);
      CHECK(R.dim == (r + 1) * (r + 1));
      XYPoly den = diagonal(RMatrix::denominator());
      for (int i = 0; i < R.dim; ++i)
        for (int j = 0; j < R.dim; ++j) CHECK(diagonal(R.numerator(i, j)) == (i == j ? den : XYPoly()));
    }
  }

  TEST_CASE("unitarity") {
    for (int r = 1; r <= 3; ++r) CHECK(verify_unitarity(build_R(r)));
  }

  TEST_CASE("rank-2 R-matrix") {
    RMatrix R = build_R(2);
    // Pair (a, b) at a * 3 + b; (0,1) exchanges with (1,0), (1,2) with (2,1).
    CHECK(R.entries[1][1] == REntry::CMinus);
    CHECK(R.entries[1][3] == REntry::BPlus);
    CHECK(R.entries[3][1] == REntry::BMinus);
    CHECK(R.entries[3][3] == REntry::CPlus);
    CHECK(R.entries[4][4] == REntry::One);
    CHECK(R.entries[5][7] == REntry::BPlus);
    int nonzero = 0;
    for (const auto& row : R.entries)
      for (auto e : row) nonzero += e != REntry::Zero;
    CHECK(nonzero == 3 + 4 * 3);
  }

  TEST_CASE("L-matrices") {
    CHECK(row_strings(build_L(1)) == std::vector<std::string>{"1 | a[1]", "x * a'[1] | x"});
    CHECK(row_strings(build_L(2)) == std::vector<std::string>{"1 | a[1] | a[2]", "x * a'[1] k[2] | x * k[2] | 0",
                                                              "x * a'[2] | x * a[1] a'[2] | x"});
    CHECK(row_strings(build_L(3)) ==
          std::vector<std::string>{"1 | a[1] | a[2] | a[3]", "x * a'[1] k[2] k[3] | x * k[2] k[3] | 0 | 0",
                                   "x * a'[2] k[3] | x * a[1] a'[2] k[3] | x * k[3] | 0",
                                   "x * a'[3] | x * a[1] a'[3] | x * a[2] a'[3] | x"});
    OpMatrix L4 = build_L(4);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        for (const auto& term : L4.at(i, j)) CHECK(term.xdeg == (i == 0 ? 0 : 1));
  }

  TEST_CASE("reduced L-matrices") {
    CHECK(row_strings(build_tildeL(1)) == std::vector<std::string>{"1", "x"});
    CHECK(row_strings(build_tildeL(2)) == std::vector<std::string>{"1 | a[2]", "x * k[2] | 0", "x * a'[2] | x"});
    CHECK(row_strings(build_tildeL(3)) ==
          std::vector<std::string>{"1 | a[2] | a[3]", "x * k[2] k[3] | 0 | 0", "x * a'[2] k[3] | x * k[3] | 0",
                                   "x * a'[3] | x * a[2] a'[3] | x"});
  }

  TEST_CASE("column merge after trivializing the first family") {
    for (int r = 1; r <= 4; ++r) {
      OpMatrix T = trivialize_first_family(build_L(r));
      for (int i = 0; i <= r; ++i) CHECK(to_string(T.at(i, 0)) == to_string(T.at(i, 1)));
    }
  }

  TEST_CASE("ZF components") {
    auto z1 = zf_components(1);
    REQUIRE(z1.size() == 2);
    CHECK(to_string(z1[0]) == "1");
    CHECK(to_string(z1[1]) == "x");
    auto z2 = zf_components(2);
    REQUIRE(z2.size() == 3);
    CHECK(to_string(z2[0]) == "1 + x * a[2:2]");
    CHECK(to_string(z2[1]) == "x * k[2:2]");
    CHECK(to_string(z2[2]) == "x * a'[2:2] + x^2");
    CHECK(zf_components(3).size() == 4);
    // Component i carries a term of x-degree i.
    auto z3 = zf_components(3);
    for (int i = 0; i <= 3; ++i)
      CHECK(std::any_of(z3[i].begin(), z3[i].end(), [i](const OpTerm& term) { return term.xdeg == i; }));
  }

  TEST_CASE("twist") {
    CHECK(to_string(twist_term(3)) == "k[2]^(0,1) k[3]^(0,2)");
    CHECK(twist_term(1).factors.empty());
  }

  TEST_CASE("relation names") {
    for (auto k : {RelationKind::YBA, RelationKind::ReducedRLL, RelationKind::ZF, RelationKind::Twist})
      CHECK(parse_relation_kind(relation_name(k)) == k);
    CHECK_THROWS_AS(parse_relation_kind("bogus"), UsageError);
  }

  TEST_CASE("intertwining relations hold on truncated Fock spaces") {
    for (int r = 1; r <= 2; ++r)
      for (auto k : {RelationKind::YBA, RelationKind::ReducedRLL, RelationKind::ZF, RelationKind::Twist}) {
        auto rep = check_intertwining(k, r, 3);
        CHECK_MESSAGE(rep.ok, relation_name(k), " rank ", r, ": ", rep.counterexample);
      }
    for (int r = 1; r <= 3; ++r) CHECK(check_exchange(r, 4).ok);
    CHECK_THROWS_AS(check_intertwining(RelationKind::YBA, 1, 2), CutoffTooSmall);
  }

  TEST_CASE("relation check rejects broken L-matrices") {
    CHECK(check_rll_for(build_L(2), 2, 2, 4).ok);
    OpMatrix noK = build_L(2);
    noK.at(1, 1).front().factors.clear();
    CHECK_FALSE(check_rll_for(noK, 2, 2, 4).ok);
    OpMatrix scaled = build_L(2);
    scaled.at(2, 1).front().scalar = QTRat::t();
    CHECK_FALSE(check_rll_for(scaled, 2, 2, 4).ok);
    OpMatrix swapped = build_L(1);
    std::swap(swapped.at(0, 1), swapped.at(1, 0));
    CHECK_FALSE(check_rll_for(swapped, 1, 1, 4).ok);
    CHECK_THROWS_AS(check_rll_for(build_L(2), 1, 1, 4), LengthMismatch);
  }
}
