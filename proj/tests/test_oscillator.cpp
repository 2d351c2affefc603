#include <doctest.h>

#include "macmp/oracles.hpp"
#include "support.hpp"

using namespace macmp;
using namespace testsupport;

namespace {

OscWord cat(OscWord a, const OscWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

OscWord random_balanced_word(int pairs, int kpows) {
  OscWord w;
  for (int i = 0; i < pairs; ++i) {
    w.push_back(OscAtom::raise());
    w.push_back(OscAtom::lower());
  }
  for (int i = 0; i < kpows; ++i) w.push_back(OscAtom::kpow(uniform(0, 2), uniform(0, 2)));
  std::shuffle(w.begin(), w.end(), rng());
  return w;
}

bool has_decay(const OscWord& w) {
  int P = 0, Q = 0;
  for (const auto& a : w)
    if (a.kind == OscAtom::Kind::KPow) P += a.t_exp, Q += a.q_exp;
  return P + Q > 0;
}

}  // namespace

TEST_SUITE("oscillator") {
  const OscWord p21{OscAtom::kpow(2, 0), OscAtom::kpow(0, 1)};

  TEST_CASE("word parsing") {
    CHECK(parse_word("a A k^(2,1)") == OscWord{OscAtom::lower(), OscAtom::raise(), OscAtom::kpow(2, 1)});
    CHECK(parse_word("k k^3") == OscWord{OscAtom::kpow(1, 0), OscAtom::kpow(3, 0)});
    CHECK(parse_dyck("(())") == OscWord{OscAtom::lower(), OscAtom::lower(), OscAtom::raise(), OscAtom::raise()});
    CHECK(to_string(parse_word("a A k^(2,1)")) == "a A k^(2,1)");
    CHECK_THROWS_AS(parse_word("a b"), ParseError);
    CHECK(balanced(parse_word("a k A")));
    CHECK_FALSE(balanced(parse_word("a k")));
  }

  TEST_CASE("closed-form trace examples") {
    CHECK(trace_closed_form(p21) == QTRat(1) / one_minus(1, 2));
    QTRat base = trace_closed_form(p21);
    CHECK(trace_closed_form(cat(parse_word("a A"), p21)) / base == one_minus(0, 1) / one_minus(1, 3));
    CHECK(trace_closed_form(parse_word("a k")) == QTRat(0));
    QTRat ratio = trace_closed_form(cat(parse_word("a a A A"), p21)) / base;
    CHECK(ratio == bracket(2) / (bracket_shifted(3, 1) * bracket_shifted(4, 1)));
    CHECK_THROWS_AS(trace_closed_form(parse_word("a A")), DivergentTrace);
    CHECK(trace_closed_form(parse_word("k^(0,1)")) == QTRat(1) / one_minus(1, 0));
  }

  TEST_CASE("Dyck map") {
    CHECK(dyck_map(parse_dyck("(()(()))")) == std::vector<int>{1, 2, 1});
    CHECK(dyck_map(parse_dyck("()")) == std::vector<int>{1});
    CHECK(dyck_map(parse_dyck("()(())")) == std::vector<int>{2, 1});
    CHECK(dyck_map(OscWord{}).empty());
    CHECK_THROWS_AS(dyck_map(parse_dyck(")(")), NotDyck);
    CHECK_THROWS_AS(dyck_map(parse_dyck("(()")), NotDyck);
  }

  TEST_CASE("psi function") {
    QTRat x = QTRat::monomial(1, 2);
    CHECK(psi_eval({1}, x) == QTRat(1) / (QTRat(1) - x) - t() / (QTRat(1) - t() * x));
    CHECK(psi_eval({}, x) == QTRat(1) / (QTRat(1) - x));
    CHECK(psi_eval({1, 1}, x) == trace_closed_form(cat(parse_dyck("(())"), p21)));
    CHECK_THROWS_AS(psi_eval({1}, QTRat(1)), DivergentTrace);
  }

  TEST_CASE("Delta operator pipeline") {
    std::vector<QTRat> z0{QTRat(1), QTRat(0)};
    auto d = delta_t_operator(z0, 1);
    CHECK(d.size() == 2);
    CHECK(d[0].is_zero());
    CHECK(d[1].is_zero());
    std::vector<QTRat> z2{QTRat(0), QTRat(0), QTRat(1), QTRat(0)};
    auto d2 = delta_t_operator(z2, 2);
    CHECK(d2[3] == one_minus(0, 2) * one_minus(0, 2));

    // Prefix of psi_[m](x) from the Delta pipeline, checked numerically against psi_eval.
    const Specialization num = Specialization::numeric(Rational(1, 3), Rational(1, 2));
    const QTRat x = QTRat::monomial(1, 1);
    const Rational bound = Rational(1) / Rational(BigInt(1) << 40);
    for (const std::vector<int>& m : {std::vector<int>{1}, std::vector<int>{2, 1}, std::vector<int>{1, 0, 2}}) {
      const int N = 70;
      std::vector<QTRat> series(N + 1);
      QTRat xp(1);
      for (int k = 0; k + 1 <= N; ++k, xp *= x) series[k + 1] = xp;
      for (int mi : m) series = delta_t_operator(series, mi);
      QTRat partial;
      for (const auto& c : series) partial += specialize(c, num);
      Rational diff = to_rational(partial) - to_rational(specialize(psi_eval(m, x), num));
      CHECK(abs(diff) < bound);
    }
  }

  TEST_CASE("Fock matrices") {
    FockMatrix k = fock_matrix(OscAtom::kpow(1, 0), 2);
    CHECK(k.entries[0][0] == QTRat(1));
    CHECK(k.entries[1][1] == t());
    CHECK(k.entries[2][2] == t() * t());
    CHECK(k.entries[0][1].is_zero());
    CHECK_THROWS_AS(fock_matrix(OscAtom::raise(), 0), CutoffTooSmall);
  }

  TEST_CASE("oscillator relations in the polynomial representation") {
    const int M = 6, lim = M - 1;
    FockMatrix a = fock_matrix(OscAtom::lower(), M), ad = fock_matrix(OscAtom::raise(), M),
               k = fock_matrix(OscAtom::kpow(1, 0), M), I = FockMatrix::identity(M);
    CHECK((a * ad - ad * a * t()).equal_upto(I * (QTRat(1) - t()), lim));
    CHECK((a * k).equal_upto(k * a * t(), lim));
    CHECK((ad * k * t()).equal_upto(k * ad, lim));
    CHECK((a * ad).equal_upto(I - k * t(), lim));
    CHECK((ad * a).equal_upto(I - k, lim));
    CHECK(fock_matrix(parse_word("a A"), M).equal_upto(a * ad, lim));
  }

  TEST_CASE("trace invariant under cyclic rotation") {
    for (int k = 0; k < 40; ++k) {
      OscWord w = random_balanced_word(uniform(0, 3), uniform(1, 2));
      if (!has_decay(w)) continue;
      QTRat tr = trace_closed_form(w);
      for (std::size_t s = 1; s < w.size(); ++s) {
        OscWord r(w.begin() + s, w.end());
        r.insert(r.end(), w.begin(), w.begin() + s);
        CHECK(trace_closed_form(r) == tr);
      }
    }
  }

  TEST_CASE("closed form agrees with Fock-walk partial sums") {
    const Rational tn(1, 2), qn(1, 3);
    const Rational bound = Rational(1) / Rational(BigInt(1) << 40);
    for (int k = 0; k < 30; ++k) {
      OscWord w = random_balanced_word(uniform(0, 3), uniform(1, 2));
      if (!has_decay(w)) continue;
      Rational exact = to_rational(specialize(trace_closed_form(w), Specialization::numeric(qn, tn)));
      CHECK(abs(numeric_trace(w, tn, qn, 60) - exact) < bound);
    }
  }
}
