#pragma once

// R-matrix, oscillator-valued L-matrices, their rank-reduced forms, the
// nested ZF components, and truncated-Fock checks of the exchange relations.

#include <map>
#include <string>
#include <vector>

#include "macmp/oscillator.hpp"

namespace macmp {

/// Integer polynomials in x, y, q, t (exponent indices 0..3).
using XYPoly = SparsePoly<4>;

XYPoly xy_x();
XYPoly xy_y();
XYPoly xy_q();
XYPoly xy_t();
XYPoly swap_xy(const XYPoly& p);
std::string to_string(const XYPoly& p);

enum class REntry { Zero, One, BPlus, BMinus, CPlus, CMinus };

struct RMatrix {
  int rank = 0;
  int dim = 0;  // (rank + 1)^2, pair (a, b) at index a * (rank + 1) + b
  std::vector<std::vector<REntry>> entries;

  /// Entry times the common denominator t x - y.
  XYPoly numerator(int row, int col) const;
  static XYPoly denominator();
};

RMatrix build_R(int r);
std::string entry_symbol(REntry e);
/// R(x,y) R(y,x) = Id after clearing denominators.
bool verify_unitarity(const RMatrix& R);

/// Family keys: a plain family index f, or level * 100 + f inside nested products.
using FamilyWords = std::map<int, OscWord>;

struct OpTerm {
  int xdeg = 0;
  QTRat scalar = QTRat(1);
  FamilyWords factors;

  bool operator==(const OpTerm&) const = default;
};
using OpSum = std::vector<OpTerm>;

/// Operator product: x-degrees add, scalars multiply, words concatenate per family.
OpTerm operator*(const OpTerm& a, const OpTerm& b);
OpSum operator*(const OpSum& a, const OpSum& b);

struct OpMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<OpSum>> entries;

  OpMatrix() = default;
  OpMatrix(int r, int c) : rows(r), cols(c), entries(r, std::vector<OpSum>(c)) {}
  const OpSum& at(int i, int j) const { return entries[i][j]; }
  OpSum& at(int i, int j) { return entries[i][j]; }
};

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);

/// Debug text such as "x * a'[3] a[2] k[4]".
std::string to_string(const OpTerm& t);
std::string to_string(const OpSum& s);
std::string to_string(const OpMatrix& m);

OpMatrix build_L(int r);
/// L^(r) with family 1 set to a = a^dag = 1, k = 0; still square.
OpMatrix trivialize_first_family(const OpMatrix& L);
/// (r+1) x r: column b is original column 0 for b = 0, else b + 1.
OpMatrix build_tildeL(int r);
/// Moves family f to key level * 100 + f.
OpMatrix relabel_level(const OpMatrix& m, int level);
/// Components A_0..A_r of the nested product of tilde-L matrices.
std::vector<OpSum> zf_components(int r);
/// The twist s^(r): family f carries k^(0, f-1), for f = 2..r.
OpTerm twist_term(int r, int level = 0);

enum class RelationKind { YBA, ReducedRLL, ZF, Twist };
RelationKind parse_relation_kind(const std::string& s);
std::string relation_name(RelationKind k);

struct IntertwiningReport {
  bool ok = true;
  long compared = 0;
  std::string counterexample;
};

/// Exact check on truncated Fock spaces; inputs with occupations <= cutoff-2.
IntertwiningReport check_intertwining(RelationKind kind, int r, int cutoff);
bool verify_intertwining(RelationKind kind, int r, int cutoff);
/// R_out(x,y) [M(x) (x) M(y)] = [M(y) (x) M(x)] R_in(x,y) for an arbitrary (r_out+1) x (r_in+1) matrix M.
IntertwiningReport check_rll_for(const OpMatrix& M, int r_out, int r_in, int cutoff);
/// Commutation and exchange relations between pairs of ZF components.
IntertwiningReport check_exchange(int r, int cutoff);

}  // namespace macmp
