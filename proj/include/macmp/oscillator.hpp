#pragma once

// t-deformed oscillators on the polynomial Fock representation
//   a^dag|m> = |m+1>,  a|m> = (1 - t^m)|m-1>,  k|m> = t^m |m>,
// and exact traces of oscillator words as rational functions.

#include <string>
#include <vector>

#include "macmp/qtfield.hpp"

namespace macmp {

struct OscAtom {
  enum class Kind { Raise, Lower, KPow };
  Kind kind = Kind::KPow;
  int t_exp = 0;  // KPow only
  int q_exp = 0;  // KPow only

  static OscAtom raise() { return {Kind::Raise, 0, 0}; }
  static OscAtom lower() { return {Kind::Lower, 0, 0}; }
  /// Diagonal operator |m> -> t^(a m) q^(b m) |m>.
  static OscAtom kpow(int a, int b);

  bool operator==(const OscAtom&) const = default;
  auto operator<=>(const OscAtom&) const = default;
};

/// Atoms in written (operator product) order; the rightmost acts first.
using OscWord = std::vector<OscAtom>;

bool balanced(const OscWord& w);

/// Parses "a A k^(2,1)"; "A" is the dagger, "k" means k^(1,0), "k^p" means k^(p,0).
OscWord parse_word(const std::string& text);
/// Parses a parenthesis string: "(" is a, ")" is a^dag.
OscWord parse_dyck(const std::string& text);
std::string to_string(const OscAtom& a);
std::string to_string(const OscWord& w);

/// Sum over m >= 0 of <m|w|m>, as a rational function.
/// Throws DivergentTrace when a geometric denominator vanishes identically.
QTRat trace_closed_form(const OscWord& w);

/// Nesting-depth multiplicities of the parenthesis structure; KPow atoms are ignored.
std::vector<int> dyck_map(const OscWord& w);

/// sum_{n>=0} x^n prod_i (1 - t^(n+i))^(m_i).
QTRat psi_eval(const std::vector<int>& m, const QTRat& x);

/// z^n -> (1 - t^n)^m z^(n+1) on a truncated series in z (index = power of z).
std::vector<QTRat> delta_t_operator(const std::vector<QTRat>& f, int m);

struct FockMatrix {
  int cutoff = 0;
  /// entries[row][col], rows and columns indexed by occupation 0..cutoff.
  std::vector<std::vector<QTRat>> entries;

  static FockMatrix identity(int cutoff);
  static FockMatrix zero(int cutoff);
  FockMatrix operator*(const FockMatrix& o) const;
  FockMatrix operator+(const FockMatrix& o) const;
  FockMatrix operator-(const FockMatrix& o) const;
  FockMatrix operator*(const QTRat& c) const;
  /// Equality restricted to rows and columns 0..limit.
  bool equal_upto(const FockMatrix& o, int limit) const;
};

FockMatrix fock_matrix(const OscAtom& a, int cutoff);
FockMatrix fock_matrix(const OscWord& w, int cutoff);

}  // namespace macmp
