#include "macmp/oscillator.hpp"

#include <cctype>
#include <map>

namespace macmp {

OscAtom OscAtom::kpow(int a, int b) {
  if (a < 0 || b < 0) throw UsageError("k-power exponents must be non-negative");
  return {Kind::KPow, a, b};
}

bool balanced(const OscWord& w) {
  int h = 0;
  for (const auto& a : w) {
    if (a.kind == OscAtom::Kind::Raise) ++h;
    if (a.kind == OscAtom::Kind::Lower) --h;
  }
  return h == 0;
}

namespace {

int read_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw ParseError("expected an integer at position " + std::to_string(start));
  return std::stoi(s.substr(start, i - start));
}

void expect(const std::string& s, std::size_t& i, char c) {
  if (i >= s.size() || s[i] != c)
    throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i));
  ++i;
}

}  // namespace

OscWord parse_word(const std::string& s) {
  OscWord w;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
    } else if (c == 'a') {
      w.push_back(OscAtom::lower());
      ++i;
    } else if (c == 'A') {
      w.push_back(OscAtom::raise());
      ++i;
    } else if (c == 'k') {
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '(') {
          ++i;
          int a = read_int(s, i);
          expect(s, i, ',');
          int b = read_int(s, i);
          expect(s, i, ')');
          w.push_back(OscAtom::kpow(a, b));
        } else {
          w.push_back(OscAtom::kpow(read_int(s, i), 0));
        }
      } else {
        w.push_back(OscAtom::kpow(1, 0));
      }
    } else {
      throw ParseError(std::string("unexpected '") + c + "' at position " + std::to_string(i));
    }
  }
  return w;
}

OscWord parse_dyck(const std::string& s) {
  OscWord w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(')
      w.push_back(OscAtom::lower());
    else if (s[i] == ')')
      w.push_back(OscAtom::raise());
    else
      throw ParseError(std::string("unexpected '") + s[i] + "' at position " + std::to_string(i));
  }
  return w;
}

std::string to_string(const OscAtom& a) {
  switch (a.kind) {
    case OscAtom::Kind::Raise:
      return "A";
    case OscAtom::Kind::Lower:
      return "a";
    case OscAtom::Kind::KPow:
      return "k^(" + std::to_string(a.t_exp) + "," + std::to_string(a.q_exp) + ")";
  }
  return "";
}

std::string to_string(const OscWord& w) {
  std::string s;
  for (const auto& a : w) s += (s.empty() ? "" : " ") + to_string(a);
  return s.empty() ? "1" : s;
}

namespace {

/// Multiplies the y-polynomial p (index = power of y) by (1 - c y).
void times_one_minus(std::vector<QTRat>& p, const QTRat& c) {
  p.push_back(QTRat());
  for (std::size_t k = p.size() - 1; k >= 1; --k) p[k] -= c * p[k - 1];
}

/// sum_k c_k / (1 - t^(P+k) q^Q).
QTRat geometric_sum(const std::vector<QTRat>& c, int P, int Q) {
  QTRat s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    int tp = P + static_cast<int>(k);
    if (tp == 0 && Q == 0) throw DivergentTrace("geometric sum with ratio 1");
    s += c[k] / QTRat(qt::one_minus(Q, tp));
  }
  return s;
}

}  // namespace

QTRat trace_closed_form(const OscWord& w) {
  if (!balanced(w)) return QTRat();
  int h = 0, P = 0, Q = 0;
  int prefactor_t = 0, prefactor_q = 0;
  std::vector<QTRat> poly{QTRat(1)};  // in y = t^m
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind) {
      case OscAtom::Kind::Raise:
        ++h;
        break;
      case OscAtom::Kind::Lower:
        times_one_minus(poly, QTRat::monomial(0, h));
        --h;
        break;
      case OscAtom::Kind::KPow:
        P += it->t_exp;
        Q += it->q_exp;
        prefactor_t += it->t_exp * h;
        prefactor_q += it->q_exp * h;
        break;
    }
  }
  return QTRat::monomial(prefactor_q, prefactor_t) * geometric_sum(poly, P, Q);
}

std::vector<int> dyck_map(const OscWord& w) {
  std::vector<int> m;
  int depth = 0;
  for (const auto& a : w) {
    if (a.kind == OscAtom::Kind::Lower) {
      ++depth;
      if (static_cast<int>(m.size()) < depth) m.resize(depth, 0);
      ++m[depth - 1];
    } else if (a.kind == OscAtom::Kind::Raise) {
      if (--depth < 0) throw NotDyck("closing parenthesis without a match");
    }
  }
  if (depth != 0) throw NotDyck("unclosed parenthesis");
  return m;
}

QTRat psi_eval(const std::vector<int>& m, const QTRat& x) {
  std::vector<QTRat> poly{QTRat(1)};  // in y = t^n
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int r = 0; r < m[i]; ++r) times_one_minus(poly, QTRat::monomial(0, static_cast<int>(i) + 1));
  QTRat s;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k].is_zero()) continue;
    QTRat den = QTRat(1) - x * QTRat::monomial(0, static_cast<int>(k));
    if (den.is_zero()) throw DivergentTrace("geometric sum with ratio 1");
    s += poly[k] / den;
  }
  return s;
}

std::vector<QTRat> delta_t_operator(const std::vector<QTRat>& f, int m) {
  std::vector<QTRat> r(f.size());
  for (std::size_t n = 0; n + 1 < f.size(); ++n) {
    if (f[n].is_zero()) continue;
    r[n + 1] = f[n] * QTRat(qt::one_minus(0, static_cast<int>(n))).pow(m);
  }
  return r;
}

FockMatrix FockMatrix::zero(int cutoff) {
  FockMatrix z;
  z.cutoff = cutoff;
  z.entries.assign(cutoff + 1, std::vector<QTRat>(cutoff + 1));
  return z;
}

FockMatrix FockMatrix::identity(int cutoff) {
  FockMatrix z = zero(cutoff);
  for (int i = 0; i <= cutoff; ++i) z.entries[i][i] = QTRat(1);
  return z;
}

FockMatrix FockMatrix::operator*(const FockMatrix& o) const {
  FockMatrix r = zero(cutoff);
  for (int i = 0; i <= cutoff; ++i)
    for (int k = 0; k <= cutoff; ++k) {
      if (entries[i][k].is_zero()) continue;
      for (int j = 0; j <= cutoff; ++j)
        if (!o.entries[k][j].is_zero()) r.entries[i][j] += entries[i][k] * o.entries[k][j];
    }
  return r;
}

FockMatrix FockMatrix::operator+(const FockMatrix& o) const {
  FockMatrix r = *this;
  for (int i = 0; i <= cutoff; ++i)
    for (int j = 0; j <= cutoff; ++j) r.entries[i][j] += o.entries[i][j];
  return r;
}

FockMatrix FockMatrix::operator-(const FockMatrix& o) const { return *this + o * QTRat(-1); }

FockMatrix FockMatrix::operator*(const QTRat& c) const {
  FockMatrix r = *this;
  for (auto& row : r.entries)
    for (auto& x : row) x *= c;
  return r;
}

bool FockMatrix::equal_upto(const FockMatrix& o, int limit) const {
  for (int i = 0; i <= limit; ++i)
    for (int j = 0; j <= limit; ++j)
      if (!(entries[i][j] == o.entries[i][j])) return false;
  return true;
}

FockMatrix fock_matrix(const OscAtom& a, int cutoff) {
  if (cutoff < 1) throw CutoffTooSmall("Fock cutoff must be at least 1");
  FockMatrix r = FockMatrix::zero(cutoff);
  for (int m = 0; m <= cutoff; ++m) {
    switch (a.kind) {
      case OscAtom::Kind::Raise:
        if (m < cutoff) r.entries[m + 1][m] = QTRat(1);
        break;
      case OscAtom::Kind::Lower:
        if (m > 0) r.entries[m - 1][m] = QTRat(qt::one_minus(0, m));
        break;
      case OscAtom::Kind::KPow:
        r.entries[m][m] = QTRat::monomial(a.q_exp * m, a.t_exp * m);
        break;
    }
  }
  return r;
}

FockMatrix fock_matrix(const OscWord& w, int cutoff) {
  FockMatrix r = FockMatrix::identity(cutoff);
  for (const auto& a : w) r = r * fock_matrix(a, cutoff);
  return r;
}

}  // namespace macmp
