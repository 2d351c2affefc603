#include "macmp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "macmp/hecke.hpp"
#include "macmp/lattice.hpp"
#include "macmp/matprod.hpp"
#include "macmp/oracles.hpp"

namespace macmp {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Latex };

struct Options {
  std::string target;
  std::string lambda, lambda_plus, mu, word, specialize;
  std::string format = "text";
  int rank = -1;
  int cutoff = 4;
  bool configs = false;
  bool by_transition = false;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw UsageError("unknown format '" + s + "'");
}

Composition require_composition(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  return parse_composition(text);
}

ordered_json composition_json(const Composition& c) { return ordered_json(c); }

struct Emitter {
  Format format;
  std::optional<Specialization> rule;
  std::ostream& out;

  XPoly prepare(const XPoly& f) const { return rule ? specialize(f, *rule) : f; }
  QTRat prepare(const QTRat& c) const { return rule ? specialize(c, *rule) : c; }

  std::string poly(const XPoly& f) const { return format == Format::Latex ? to_latex(f) : to_string(f); }
  std::string scalar(const QTRat& c) const { return format == Format::Latex ? to_latex(c) : to_string(c); }
};

int cmd_compute(const Options& o, const Emitter& em) {
  const std::string& what = o.target;
  if (what == "transition") {
    Composition lambda = require_composition(o.lambda, "--lambda");
    Composition mu = require_composition(o.mu, "--mu");
    if (lambda.size() != mu.size()) throw LengthMismatch("lambda and mu have different lengths");
    XPoly T = em.prepare(transition(lambda, mu, o.rank));
    if (em.format == Format::Json)
      em.out << ordered_json{{"lambda", composition_json(lambda)},
                             {"mu", composition_json(mu)},
                             {"rank", o.rank < 0 ? max_part(lambda) : o.rank},
                             {"poly", to_json(T)}}
                    .dump()
             << "\n";
    else
      em.out << em.poly(T) << "\n";
    return 0;
  }
  Composition lambda = require_composition(o.lambda, "--lambda");
  const int rank = o.rank < 0 ? max_part(lambda) : o.rank;
  XPoly f(static_cast<int>(lambda.size()));
  std::optional<QTRat> omega;
  if (what == "f") {
    f = compute_f(lambda, o.rank);
    omega = omega_norm(sort_dominant(lambda), rank);
  } else if (what == "E") {
    f = compute_E(lambda);
  } else if (what == "P") {
    f = compute_P(lambda);
  } else {
    throw UsageError("unknown compute target '" + what + "'");
  }
  f = em.prepare(f);
  if (omega) omega = em.prepare(*omega);
  if (em.format == Format::Json) {
    ordered_json j{{"lambda", composition_json(lambda)}, {"rank", rank}, {"poly", to_json(f)}};
    j["omega"] = omega ? to_json(*omega) : ordered_json(nullptr);
    em.out << j.dump() << "\n";
  } else {
    em.out << em.poly(f) << "\n";
  }
  return 0;
}

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> lines;
};

VerifyResult verify_target(const Options& o) {
  VerifyResult res;
  auto note = [&](bool pass, const std::string& line) {
    res.ok = res.ok && pass;
    res.lines.push_back(std::string(pass ? "PASS " : "FAIL ") + line);
  };
  const std::string& what = o.target;
  if (what == "qkz") {
    Composition lp = require_composition(o.lambda_plus.empty() ? o.lambda : o.lambda_plus, "--lambda-plus");
    QkzReport rep = check_qkz(lp);
    note(rep.ok, "qkz (" + composition_string(lp) + "): " + std::to_string(rep.checks) + " relations");
    for (const auto& f : rep.failures) res.lines.push_back("  counterexample: " + f);
  } else if (what == "yba" || what == "zf" || what == "twist" || what == "reducedRLL") {
    RelationKind kind = parse_relation_kind(what);
    std::vector<int> ranks;
    if (o.rank >= 0)
      ranks.push_back(o.rank);
    else
      ranks = {1, 2, 3};
    for (int r : ranks) {
      IntertwiningReport rep = check_intertwining(kind, r, o.cutoff);
      note(rep.ok, relation_name(kind) + " rank " + std::to_string(r) + " cutoff " + std::to_string(o.cutoff) +
                       ": " + std::to_string(rep.compared) + " matrix elements");
      if (!rep.ok) res.lines.push_back("  counterexample: " + rep.counterexample);
    }
  } else if (what == "eigen") {
    Composition lambda = require_composition(o.lambda, "--lambda");
    XPoly E = compute_E(lambda);
    const int n = static_cast<int>(lambda.size());
    for (int i = 1; i <= n; ++i) {
      QTRat ev = murphy_eigenvalue(lambda, i);
      bool pass = murphy_apply(i, E) == E * ev;
      note(pass, "Y" + std::to_string(i) + " eigenvalue " + to_string(ev));
    }
  } else if (what == "recursion") {
    Composition lambda = require_composition(o.lambda, "--lambda");
    RecursionReport rep = check_recursion(lambda);
    note(rep.ok, "recursion (" + composition_string(lambda) + ") rank " + std::to_string(rep.rank) + ", " +
                     std::to_string(rep.transitions.size()) + " surviving mu, prefactor " + to_string(rep.prefactor));
    if (!rep.ok) res.lines.push_back("  lhs - rhs: " + to_string(rep.lhs - rep.rhs));
  } else if (what == "oracle") {
    Composition lambda = require_composition(o.lambda, "--lambda");
    XPoly E = compute_E(lambda);
    XPoly ref = eigen_solve_E(lambda);
    note(E == ref, "E(" + composition_string(lambda) + ") matches the eigen-solve");
    if (!(E == ref)) res.lines.push_back("  difference: " + to_string(E - ref));
    if (is_partition(lambda)) {
      const int n = static_cast<int>(lambda.size());
      XPoly P = compute_P(lambda);
      note(is_symmetric(P), "P(" + composition_string(lambda) + ") is symmetric");
      note(specialize(P, Specialization::q_equals_t()) == schur(lambda, n), "P at q = t is the Schur polynomial");
      note(specialize(P, Specialization::q_zero()) == hall_littlewood(lambda, n),
           "P at q = 0 is the Hall-Littlewood polynomial");
    }
  } else {
    throw UsageError("unknown verify target '" + what + "'");
  }
  return res;
}

int cmd_verify(const Options& o, const Emitter& em) {
  VerifyResult res = verify_target(o);
  if (em.format == Format::Json)
    em.out << ordered_json{{"target", o.target}, {"ok", res.ok}, {"report", res.lines}}.dump() << "\n";
  else
    for (const auto& l : res.lines) em.out << l << "\n";
  return res.ok ? 0 : 1;
}

int cmd_expand(const Options& o, const Emitter& em) {
  Composition lambda = require_composition(o.lambda, "--lambda");
  if (o.by_transition) {
    RecursionReport rep = check_recursion(lambda);
    if (em.format == Format::Json) {
      ordered_json groups = ordered_json::array();
      for (const auto& [mu, T] : rep.transitions)
        groups.push_back({{"mu", composition_json(mu)}, {"transition", to_json(em.prepare(T))}});
      em.out << ordered_json{{"lambda", composition_json(lambda)},
                             {"rank", rep.rank},
                             {"prefactor", to_json(em.prepare(rep.prefactor))},
                             {"groups", groups}}
                    .dump()
             << "\n";
    } else {
      em.out << "prefactor " << em.scalar(em.prepare(rep.prefactor)) << "\n";
      for (const auto& [mu, T] : rep.transitions)
        em.out << "mu (" << composition_string(mu) << ") T = " << em.poly(em.prepare(T)) << "\n";
    }
    return rep.ok ? 0 : 1;
  }
  auto cs = expand_configurations(lambda, o.rank);
  if (em.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cs) {
      ordered_json words = ordered_json::object();
      for (const auto& [key, w] : c.words)
        words[std::to_string(key.first) + "." + std::to_string(key.second)] = to_string(w);
      arr.push_back({{"paths", c.row_paths},
                     {"monomial", c.monomial},
                     {"words", words},
                     {"trace", to_json(em.prepare(c.trace))}});
    }
    em.out << ordered_json{{"lambda", composition_json(lambda)}, {"count", cs.size()}, {"configurations", arr}}.dump()
           << "\n";
  } else {
    em.out << "configurations: " << cs.size() << "\n";
    if (o.configs)
      for (const auto& c : cs) em.out << to_string(c) << "\n";
  }
  return 0;
}

int cmd_trace(const Options& o, const Emitter& em) {
  if (o.word.empty()) throw UsageError("missing --word");
  OscWord w = o.word.find_first_of("()") != std::string::npos && o.word.find('k') == std::string::npos
                  ? parse_dyck(o.word)
                  : parse_word(o.word);
  QTRat v = em.prepare(trace_closed_form(w));
  if (em.format == Format::Json)
    em.out << ordered_json{{"word", to_string(w)}, {"trace", to_json(v)}}.dump() << "\n";
  else
    em.out << em.scalar(v) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-symmetric Macdonald polynomials from matrix products", "macmp"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "composition, e.g. 0,0,1,1,2,2");
    sub->add_option("--rank", o.rank, "rank override");
    sub->add_option("--format", o.format, "text | json | latex");
    sub->add_option("--specialize", o.specialize, "q=0 | q=t | q=1 | q=NUM,t=NUM");
  };
  CLI::App* compute = app.add_subcommand("compute", "compute f, E, P or a transition polynomial");
  compute->add_option("target", o.target, "f | E | P | transition")->required();
  compute->add_option("--mu", o.mu, "second composition for transition");
  common(compute);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("target", o.target, "qkz | yba | zf | twist | reducedRLL | eigen | recursion | oracle")
      ->required();
  verify->add_option("--lambda-plus", o.lambda_plus, "partition for qkz");
  verify->add_option("--cutoff", o.cutoff, "Fock cutoff");
  common(verify);
  CLI::App* expand = app.add_subcommand("expand", "list matrix product configurations");
  expand->add_flag("--configs", o.configs, "print every configuration");
  expand->add_flag("--by-transition", o.by_transition, "group by transition column");
  common(expand);
  CLI::App* trace = app.add_subcommand("trace", "closed-form trace of an oscillator word");
  trace->add_option("--word", o.word, "e.g. \"a A k^(2,1)\" or \"(())\"");
  trace->add_option("--format", o.format, "text | json | latex");
  trace->add_option("--specialize", o.specialize, "q=0 | q=t | q=1 | q=NUM,t=NUM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    Emitter em{parse_format(o.format), std::nullopt, out};
    if (!o.specialize.empty()) em.rule = Specialization::parse(o.specialize);
    if (o.cutoff < 3) throw CutoffTooSmall("cutoff must be at least 3");
    if (*compute) return cmd_compute(o, em);
    if (*verify) return cmd_verify(o, em);
    if (*expand) return cmd_expand(o, em);
    return cmd_trace(o, em);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace macmp
