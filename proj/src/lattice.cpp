#include "macmp/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace macmp {

XYPoly xy_x() { return XYPoly::monomial({1, 0, 0, 0}); }
XYPoly xy_y() { return XYPoly::monomial({0, 1, 0, 0}); }
XYPoly xy_q() { return XYPoly::monomial({0, 0, 1, 0}); }
XYPoly xy_t() { return XYPoly::monomial({0, 0, 0, 1}); }

XYPoly swap_xy(const XYPoly& p) {
  std::vector<XYPoly::Term> terms;
  for (const auto& term : p.terms()) {
    auto e = term.exp;
    std::swap(e[0], e[1]);
    terms.push_back({e, term.coef});
  }
  return XYPoly::from_terms(std::move(terms));
}

std::string to_string(const XYPoly& p) {
  if (p.is_zero()) return "0";
  static const char* names[] = {"x", "y", "q", "t"};
  std::ostringstream os;
  bool first = true;
  for (const auto& term : p.terms()) {
    BigInt c = term.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    for (int v = 0; v < 4; ++v) {
      if (term.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (term.exp[v] != 1) mono += "^" + std::to_string(term.exp[v]);
    }
    if (mono.empty())
      os << c;
    else if (c == 1)
      os << mono;
    else
      os << c << "*" << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// R-matrix

XYPoly RMatrix::denominator() { return xy_t() * xy_x() - xy_y(); }

XYPoly RMatrix::numerator(int row, int col) const {
  const XYPoly one(1);
  switch (entries[row][col]) {
    case REntry::Zero:
      return {};
    case REntry::One:
      return denominator();
    case REntry::BPlus:
      return xy_t() * (xy_x() - xy_y());
    case REntry::BMinus:
      return xy_x() - xy_y();
    case REntry::CPlus:
      return xy_y() * (xy_t() - one);
    case REntry::CMinus:
      return xy_x() * (xy_t() - one);
  }
  return {};
}

RMatrix build_R(int r) {
  if (r < 0) throw UsageError("rank must be non-negative");
  RMatrix R;
  R.rank = r;
  const int d = r + 1;
  R.dim = d * d;
  R.entries.assign(R.dim, std::vector<REntry>(R.dim, REntry::Zero));
  auto idx = [d](int a, int b) { return a * d + b; };
  for (int a = 0; a < d; ++a) R.entries[idx(a, a)][idx(a, a)] = REntry::One;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      R.entries[idx(i, j)][idx(j, i)] = REntry::BPlus;
      R.entries[idx(j, i)][idx(i, j)] = REntry::BMinus;
      R.entries[idx(i, j)][idx(i, j)] = REntry::CMinus;
      R.entries[idx(j, i)][idx(j, i)] = REntry::CPlus;
    }
  return R;
}

std::string entry_symbol(REntry e) {
  switch (e) {
    case REntry::Zero:
      return "0";
    case REntry::One:
      return "1";
    case REntry::BPlus:
      return "b+";
    case REntry::BMinus:
      return "b-";
    case REntry::CPlus:
      return "c+";
    case REntry::CMinus:
      return "c-";
  }
  return "?";
}

bool verify_unitarity(const RMatrix& R) {
  const XYPoly d = RMatrix::denominator();
  const XYPoly scale = d * swap_xy(d);
  for (int i = 0; i < R.dim; ++i)
    for (int j = 0; j < R.dim; ++j) {
      XYPoly s;
      for (int k = 0; k < R.dim; ++k) {
        if (R.entries[i][k] == REntry::Zero || R.entries[k][j] == REntry::Zero) continue;
        s += R.numerator(i, k) * swap_xy(R.numerator(k, j));
      }
      if (!(s == (i == j ? scale : XYPoly()))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Operator matrices

OpTerm operator*(const OpTerm& a, const OpTerm& b) {
  OpTerm r;
  r.xdeg = a.xdeg + b.xdeg;
  r.scalar = a.scalar * b.scalar;
  r.factors = a.factors;
  for (const auto& [f, w] : b.factors) {
    auto& dst = r.factors[f];
    dst.insert(dst.end(), w.begin(), w.end());
  }
  return r;
}

OpSum operator*(const OpSum& a, const OpSum& b) {
  OpSum r;
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
  if (a.cols != b.rows) throw LengthMismatch("operator matrix shapes do not compose");
  OpMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k) {
        OpSum p = a.at(i, k) * b.at(k, j);
        r.at(i, j).insert(r.at(i, j).end(), p.begin(), p.end());
      }
  return r;
}

namespace {

std::string family_label(int key) {
  if (key >= 100) return std::to_string(key / 100) + ":" + std::to_string(key % 100);
  return std::to_string(key);
}

std::string atom_debug(const OscAtom& a, int key) {
  std::string f = "[" + family_label(key) + "]";
  switch (a.kind) {
    case OscAtom::Kind::Raise:
      return "a'" + f;
    case OscAtom::Kind::Lower:
      return "a" + f;
    case OscAtom::Kind::KPow:
      if (a.t_exp == 1 && a.q_exp == 0) return "k" + f;
      return "k" + f + "^(" + std::to_string(a.t_exp) + "," + std::to_string(a.q_exp) + ")";
  }
  return "";
}

}  // namespace

std::string to_string(const OpTerm& t) {
  std::vector<std::string> parts;
  if (!t.scalar.is_one()) parts.push_back("(" + to_string(t.scalar) + ")");
  if (t.xdeg == 1) parts.push_back("x");
  if (t.xdeg > 1) parts.push_back("x^" + std::to_string(t.xdeg));
  std::string ops;
  for (const auto& [f, w] : t.factors)
    for (const auto& a : w) ops += (ops.empty() ? "" : " ") + atom_debug(a, f);
  if (!ops.empty()) parts.push_back(ops);
  if (parts.empty()) return "1";
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " * ") + p;
  return s;
}

std::string to_string(const OpSum& s) {
  if (s.empty()) return "0";
  std::string r;
  for (const auto& t : s) r += (r.empty() ? "" : " + ") + to_string(t);
  return r;
}

std::string to_string(const OpMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) s += (j ? " | " : "") + to_string(m.at(i, j));
    s += "\n";
  }
  return s;
}

namespace {

OpTerm atom_term(int family, OscAtom a) {
  OpTerm t;
  t.factors[family].push_back(a);
  return t;
}

OpTerm k_tail(int i, int r) {
  OpTerm t;
  for (int m = i + 1; m <= r; ++m) t.factors[m].push_back(OscAtom::kpow(1, 0));
  return t;
}

}  // namespace

OpMatrix build_L(int r) {
  if (r < 1) throw UsageError("rank must be at least 1");
  OpMatrix L(r + 1, r + 1);
  OpTerm x;
  x.xdeg = 1;
  L.at(0, 0) = {OpTerm{}};
  for (int j = 1; j <= r; ++j) L.at(0, j) = {atom_term(j, OscAtom::lower())};
  for (int i = 1; i <= r; ++i) {
    OpTerm tail = x * k_tail(i, r);
    L.at(i, 0) = {x * atom_term(i, OscAtom::raise()) * k_tail(i, r)};
    L.at(i, i) = {tail};
    for (int j = 1; j < i; ++j)
      L.at(i, j) = {x * atom_term(j, OscAtom::lower()) * atom_term(i, OscAtom::raise()) * k_tail(i, r)};
  }
  return L;
}

OpMatrix trivialize_first_family(const OpMatrix& L) {
  OpMatrix r(L.rows, L.cols);
  for (int i = 0; i < L.rows; ++i)
    for (int j = 0; j < L.cols; ++j)
      for (OpTerm t : L.at(i, j)) {
        auto it = t.factors.find(1);
        if (it != t.factors.end()) {
          bool has_k = std::any_of(it->second.begin(), it->second.end(),
                                   [](const OscAtom& a) { return a.kind == OscAtom::Kind::KPow; });
          if (has_k) continue;
          t.factors.erase(it);
        }
        r.at(i, j).push_back(t);
      }
  return r;
}

OpMatrix build_tildeL(int r) {
  OpMatrix T = trivialize_first_family(build_L(r));
  OpMatrix out(r + 1, r);
  for (int i = 0; i <= r; ++i)
    for (int b = 0; b < r; ++b) out.at(i, b) = T.at(i, b == 0 ? 0 : b + 1);
  return out;
}

OpMatrix relabel_level(const OpMatrix& m, int level) {
  OpMatrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      for (const auto& t : m.at(i, j)) {
        OpTerm u = t;
        u.factors.clear();
        for (const auto& [f, w] : t.factors) u.factors[level * 100 + f] = w;
        out.at(i, j).push_back(u);
      }
  return out;
}

std::vector<OpSum> zf_components(int r) {
  OpMatrix A = relabel_level(build_tildeL(1), 1);
  for (int j = 2; j <= r; ++j) A = relabel_level(build_tildeL(j), j) * A;
  std::vector<OpSum> comps;
  for (int i = 0; i <= r; ++i) comps.push_back(A.at(i, 0));
  return comps;
}

OpTerm twist_term(int r, int level) {
  OpTerm t;
  for (int f = 2; f <= r; ++f) t.factors[level * 100 + f].push_back(OscAtom::kpow(0, f - 1));
  return t;
}

RelationKind parse_relation_kind(const std::string& s) {
  if (s == "yba") return RelationKind::YBA;
  if (s == "reducedRLL") return RelationKind::ReducedRLL;
  if (s == "zf") return RelationKind::ZF;
  if (s == "twist") return RelationKind::Twist;
  throw ParseError("unknown relation '" + s + "'");
}

std::string relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::YBA:
      return "yba";
    case RelationKind::ReducedRLL:
      return "reducedRLL";
    case RelationKind::ZF:
      return "zf";
    case RelationKind::Twist:
      return "twist";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Truncated Fock evaluation with coefficients in Z[x, y, q, t]

namespace {

struct ScalarOp {
  XYPoly coef;
  FamilyWords words;
};
using OpExpr = std::vector<ScalarOp>;
using State = std::vector<int>;
using Vec = std::map<State, XYPoly>;

XYPoly lift_scalar(const QTRat& c) {
  if (!c.is_polynomial()) throw InternalNonPolynomial("operator scalar " + to_string(c) + " is not polynomial");
  std::vector<XYPoly::Term> terms;
  for (const auto& term : c.num().terms()) terms.push_back({{0, 0, term.exp[0], term.exp[1]}, term.coef});
  return XYPoly::from_terms(std::move(terms));
}

/// Spectral variable 0 = x, 1 = y; q_shift multiplies the variable by q.
OpExpr lift(const OpSum& s, int var, bool q_shift = false) {
  OpExpr out;
  for (const auto& t : s) {
    XYPoly::Exponent e{0, 0, 0, 0};
    e[var] = t.xdeg;
    if (q_shift) e[2] = t.xdeg;
    out.push_back({lift_scalar(t.scalar) * XYPoly::monomial(e), t.factors});
  }
  return out;
}

OpExpr lift(const OpTerm& t) { return lift(OpSum{t}, 0); }

OpExpr mul(const OpExpr& a, const OpExpr& b) {
  OpExpr out;
  for (const auto& x : a)
    for (const auto& y : b) {
      ScalarOp p{x.coef * y.coef, x.words};
      for (const auto& [f, w] : y.words) {
        auto& dst = p.words[f];
        dst.insert(dst.end(), w.begin(), w.end());
      }
      out.push_back(std::move(p));
    }
  return out;
}

OpExpr scale(const OpExpr& a, const XYPoly& c) {
  OpExpr out;
  if (c.is_zero()) return out;
  for (const auto& x : a) out.push_back({x.coef * c, x.words});
  return out;
}

void append(OpExpr& a, const OpExpr& b) { a.insert(a.end(), b.begin(), b.end()); }

class FockChecker {
 public:
  FockChecker(std::vector<int> keys, int cutoff) : keys_(std::move(keys)), cutoff_(cutoff) {
    State s(keys_.size(), 0);
    enumerate(s, 0);
  }

  /// Compares both sides on every admissible input state.
  bool equal(const OpExpr& lhs, const OpExpr& rhs, long& compared, std::string& why) const {
    for (const auto& s : inputs_) {
      ++compared;
      Vec a = apply(lhs, s), b = apply(rhs, s);
      if (a != b) {
        std::ostringstream os;
        os << "input state (";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << "): lhs has " << a.size() << " output states, rhs has " << b.size();
        for (const auto& [st, c] : a) {
          auto it = b.find(st);
          XYPoly other = it == b.end() ? XYPoly() : it->second;
          if (!(other == c)) {
            os << "; first mismatch lhs " << to_string(c) << " vs rhs " << to_string(other);
            break;
          }
        }
        why = os.str();
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<int> keys_;
  int cutoff_;
  std::vector<State> inputs_;

  void enumerate(State& s, std::size_t k) {
    if (k == s.size()) {
      inputs_.push_back(s);
      return;
    }
    for (int m = 0; m <= cutoff_ - 2; ++m) {
      s[k] = m;
      enumerate(s, k + 1);
    }
  }

  int slot(int key) const {
    auto it = std::find(keys_.begin(), keys_.end(), key);
    if (it == keys_.end()) throw InternalAssertion("unknown oscillator family");
    return static_cast<int>(it - keys_.begin());
  }

  Vec apply(const OpExpr& e, const State& in) const {
    Vec out;
    for (const auto& op : e) {
      State s = in;
      XYPoly c = op.coef;
      for (const auto& [f, w] : op.words) {
        int& m = s[slot(f)];
        for (auto it = w.rbegin(); it != w.rend() && !c.is_zero(); ++it) {
          switch (it->kind) {
            case OscAtom::Kind::Raise:
              if (m == cutoff_) c = XYPoly();
              ++m;
              break;
            case OscAtom::Kind::Lower:
              c *= XYPoly(1) - XYPoly::monomial({0, 0, 0, m});
              --m;
              break;
            case OscAtom::Kind::KPow:
              c = c.times_monomial({0, 0, it->q_exp * m, it->t_exp * m}, 1);
              break;
          }
        }
        if (c.is_zero()) break;
      }
      if (c.is_zero()) continue;
      auto [it, inserted] = out.try_emplace(s, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    return out;
  }
};

std::vector<int> collect_keys(const std::vector<const OpMatrix*>& ms) {
  std::set<int> keys;
  for (const auto* m : ms)
    for (const auto& row : m->entries)
      for (const auto& s : row)
        for (const auto& t : s)
          for (const auto& [f, w] : t.factors) keys.insert(f);
  return {keys.begin(), keys.end()};
}

std::vector<int> collect_keys(const std::vector<OpSum>& comps) {
  std::set<int> keys;
  for (const auto& s : comps)
    for (const auto& t : s)
      for (const auto& [f, w] : t.factors) keys.insert(f);
  return {keys.begin(), keys.end()};
}

/// R_out(x,y) [M(x) (x) M(y)] = [M(y) (x) M(x)] R_in(x,y) for M of shape (a+1) x (b+1).
void check_rll(const OpMatrix& M, const RMatrix& Rout, const RMatrix& Rin, int cutoff,
               IntertwiningReport& rep) {
  FockChecker fc(collect_keys({&M}), cutoff);
  const int dr = M.rows, dc = M.cols;
  for (int a = 0; a < dr; ++a)
    for (int b = 0; b < dr; ++b)
      for (int c = 0; c < dc; ++c)
        for (int d = 0; d < dc; ++d) {
          OpExpr lhs, rhs;
          for (int e = 0; e < dr; ++e)
            for (int f = 0; f < dr; ++f) {
              if (Rout.entries[a * dr + b][e * dr + f] == REntry::Zero) continue;
              append(lhs, scale(mul(lift(M.at(e, c), 0), lift(M.at(f, d), 1)),
                                Rout.numerator(a * dr + b, e * dr + f)));
            }
          for (int e = 0; e < dc; ++e)
            for (int f = 0; f < dc; ++f) {
              if (Rin.entries[e * dc + f][c * dc + d] == REntry::Zero) continue;
              append(rhs, scale(mul(lift(M.at(a, e), 1), lift(M.at(b, f), 0)),
                                Rin.numerator(e * dc + f, c * dc + d)));
            }
          std::string why;
          if (!fc.equal(lhs, rhs, rep.compared, why)) {
            rep.ok = false;
            rep.counterexample = "aux (" + std::to_string(a) + std::to_string(b) + "),(" +
                                 std::to_string(c) + std::to_string(d) + "), " + why;
            return;
          }
        }
}

void check_zf(int r, int cutoff, IntertwiningReport& rep) {
  auto A = zf_components(r);
  RMatrix R = build_R(r);
  FockChecker fc(collect_keys(A), cutoff);
  const int d = r + 1;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      OpExpr lhs;
      for (int e = 0; e < d; ++e)
        for (int f = 0; f < d; ++f) {
          if (R.entries[a * d + b][e * d + f] == REntry::Zero) continue;
          append(lhs, scale(mul(lift(A[e], 0), lift(A[f], 1)), R.numerator(a * d + b, e * d + f)));
        }
      OpExpr rhs = scale(mul(lift(A[a], 1), lift(A[b], 0)), RMatrix::denominator());
      std::string why;
      if (!fc.equal(lhs, rhs, rep.compared, why)) {
        rep.ok = false;
        rep.counterexample = "component pair (" + std::to_string(a) + "," + std::to_string(b) + "), " + why;
        return;
      }
    }
}

void check_twist(int r, int cutoff, IntertwiningReport& rep) {
  // Single level: s tildeL_ij(qx) = q^(i-j) tildeL_ij(x) s.
  for (int level = 1; level <= r; ++level) {
    OpMatrix T = build_tildeL(level);
    FockChecker fc(collect_keys({&T}), cutoff);
    OpExpr s = lift(twist_term(level));
    for (int i = 0; i < T.rows; ++i)
      for (int j = 0; j < T.cols; ++j) {
        if (T.at(i, j).empty()) continue;
        OpExpr lhs = mul(s, lift(T.at(i, j), 0, true));
        // i - j may be negative: multiply the other side instead.
        XYPoly qi = XYPoly::monomial({0, 0, std::max(i - j, 0), 0});
        XYPoly qj = XYPoly::monomial({0, 0, std::max(j - i, 0), 0});
        std::string why;
        if (!fc.equal(scale(lhs, qj), scale(mul(lift(T.at(i, j), 0), s), qi), rep.compared, why)) {
          rep.ok = false;
          rep.counterexample = "level " + std::to_string(level) + " entry (" + std::to_string(i) + "," +
                               std::to_string(j) + "), " + why;
          return;
        }
      }
  }
  // Nested components: S A_i(qx) = q^i A_i(x) S.
  auto A = zf_components(r);
  FockChecker fc(collect_keys(A), cutoff);
  OpTerm S;
  for (int level = 2; level <= r; ++level) S = S * twist_term(level, level);
  OpExpr s = lift(S);
  for (int i = 0; i <= r; ++i) {
    OpExpr lhs = mul(s, lift(A[i], 0, true));
    OpExpr rhs = scale(mul(lift(A[i], 0), s), XYPoly::monomial({0, 0, i, 0}));
    std::string why;
    if (!fc.equal(lhs, rhs, rep.compared, why)) {
      rep.ok = false;
      rep.counterexample = "component " + std::to_string(i) + ", " + why;
      return;
    }
  }
}

}  // namespace

IntertwiningReport check_intertwining(RelationKind kind, int r, int cutoff) {
  if (r < 1) throw UsageError("rank must be at least 1");
  if (cutoff < 3) throw CutoffTooSmall("cutoff must be at least 3, got " + std::to_string(cutoff));
  IntertwiningReport rep;
  switch (kind) {
    case RelationKind::YBA: {
      OpMatrix L = build_L(r);
      RMatrix R = build_R(r);
      check_rll(L, R, R, cutoff, rep);
      break;
    }
    case RelationKind::ReducedRLL:
      check_rll(build_tildeL(r), build_R(r), build_R(r - 1), cutoff, rep);
      break;
    case RelationKind::ZF:
      check_zf(r, cutoff, rep);
      break;
    case RelationKind::Twist:
      check_twist(r, cutoff, rep);
      break;
  }
  return rep;
}

bool verify_intertwining(RelationKind kind, int r, int cutoff) { return check_intertwining(kind, r, cutoff).ok; }

IntertwiningReport check_rll_for(const OpMatrix& M, int r_out, int r_in, int cutoff) {
  if (cutoff < 3) throw CutoffTooSmall("cutoff must be at least 3, got " + std::to_string(cutoff));
  if (M.rows != r_out + 1 || M.cols != r_in + 1) throw LengthMismatch("operator matrix shape does not match the ranks");
  IntertwiningReport rep;
  check_rll(M, build_R(r_out), build_R(r_in), cutoff, rep);
  return rep;
}

IntertwiningReport check_exchange(int r, int cutoff) {
  if (cutoff < 3) throw CutoffTooSmall("cutoff must be at least 3, got " + std::to_string(cutoff));
  IntertwiningReport rep;
  auto A = zf_components(r);
  FockChecker fc(collect_keys(A), cutoff);
  const XYPoly x = xy_x(), y = xy_y(), t = xy_t();
  for (int i = 0; i <= r; ++i) {
    std::string why;
    if (!fc.equal(mul(lift(A[i], 0), lift(A[i], 1)), mul(lift(A[i], 1), lift(A[i], 0)), rep.compared, why)) {
      rep.ok = false;
      rep.counterexample = "A_" + std::to_string(i) + " does not commute with itself: " + why;
      return rep;
    }
    for (int j = i + 1; j <= r; ++j) {
      // (x-y) t A_j(x)A_i(y) - (tx-y)(A_j(x)A_i(y) - A_j(y)A_i(x)) = (x-y) A_i(x)A_j(y)
      OpExpr jx_iy = mul(lift(A[j], 0), lift(A[i], 1));
      OpExpr jy_ix = mul(lift(A[j], 1), lift(A[i], 0));
      OpExpr lhs = scale(jx_iy, t * (x - y));
      append(lhs, scale(jx_iy, y - t * x));
      append(lhs, scale(jy_ix, t * x - y));
      OpExpr rhs = scale(mul(lift(A[i], 0), lift(A[j], 1)), x - y);
      if (!fc.equal(lhs, rhs, rep.compared, why)) {
        rep.ok = false;
        rep.counterexample = "exchange of A_" + std::to_string(i) + ", A_" + std::to_string(j) + ": " + why;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace macmp
