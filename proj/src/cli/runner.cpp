#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"
#include "frobcore/grading.hpp"
#include "frobcore/parse.hpp"
#include "literals.hpp"
#include "report.hpp"

namespace frobcore::cli {

namespace {

json ideal_list(const std::vector<Ideal>& v) {
  json a = json::array();
  for (const auto& i : v) a.push_back(i.to_string());
  return a;
}

json poly_list(const std::vector<Polynomial>& v) {
  json a = json::array();
  for (const auto& f : v) a.push_back(f.to_string());
  return a;
}

bool same_set(std::vector<Ideal> a, std::vector<Ideal> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

struct TraceValue {
  std::string cover;
  TraceFunctional T;
};

class Interpreter {
 public:
  Interpreter(const RunOptions& opts, int depth) : opts_(opts), depth_(depth) {}

  Report run(const Scenario& sc) {
    Report r;
    r.scenario = sc.name;
    for (const auto& st : sc.statements) {
      Block b;
      b.line = st.line;
      b.command = st.text;
      try {
        execute(st, b);
      } catch (const Error& e) {
        b.fields["error"] = e.kind() + ": " + e.what();
        b.verdict = "FAIL";
        b.failed = true;
      } catch (const std::exception& e) {
        b.fields["error"] = std::string("InternalError: ") + e.what();
        b.verdict = "FAIL";
        b.failed = true;
      }
      if (b.verdict) ++r.checks;
      if (b.failed) ++r.failures;
      r.blocks.push_back(std::move(b));
    }
    r.dot = dot_.str();
    for (const auto& [name, P] : pairs_) r.pairs.emplace_back(name, P);
    return r;
  }

 private:
  // Verdict for a boolean check; expect=false turns a false value into an expected failure.
  static void verdict(Block& b, bool value, std::optional<bool> expect) {
    bool want = expect.value_or(true);
    if (want) {
      b.verdict = value ? "PASS" : "FAIL";
      b.failed = !value;
    } else {
      b.verdict = value ? "PASS (unexpected)" : "FAIL (expected)";
      b.failed = value;
    }
  }

  static void compare(Block& b, bool equal) {
    b.verdict = equal ? "PASS" : "FAIL";
    b.failed = !equal;
  }

  const Arg& arg(const Statement& st, const std::string& key) const { return *st.find(key); }

  std::optional<bool> opt_bool(const Statement& st, const std::string& key) const {
    if (const Arg* a = st.find(key)) return parse_bool(a->value, st.line, a->column);
    return std::nullopt;
  }

  template <class M>
  const typename M::mapped_type& get(const M& m, const std::string& name) const {
    auto it = m.find(name);
    if (it == m.end()) throw UnknownName("'" + name + "' was not constructed");
    return it->second;
  }

  const QuotientRing& ring(const std::string& name) const {
    if (auto it = covers_.find(name); it != covers_.end()) return it->second.total();
    return get(rings_, name);
  }
  const CartierPair& pair(const std::string& name) const { return get(pairs_, name); }
  const FiniteCover& cover(const std::string& name) const { return get(covers_, name); }
  const TraceValue& trace(const std::string& name) const { return get(traces_, name); }
  const GradedStructure& grading(const std::string& name) const { return get(gradings_, name); }

  // The ring that literals for `ctx` live in, resolved at run time.
  const QuotientRing& context(const Statement& st, const std::string& ctx) const {
    auto dot = ctx.find('.');
    std::string key = ctx.substr(0, dot);
    bool base = dot != std::string::npos;
    if (key == "self") return pair(st.name).ring();
    const std::string& name = arg(st, key).value;
    if (key == "pair") return pair(name).ring();
    if (key == "ring") return ring(name);
    if (key == "grading") return grading(name).ring();
    const FiniteCover& c = key == "trace" ? cover(trace(name).cover) : cover(name);
    return base ? c.base() : c.total();
  }

  Ideal ideal_arg(const Statement& st, const std::string& key, const std::string& ctx) const {
    const Arg& a = arg(st, key);
    const QuotientRing& R = context(st, ctx);
    if (!a.value.empty() && a.value.front() == '[')
      return R.ideal(parse_polynomial_list(R.ambient(), a.value, st.line, a.column));
    return get(ideals_, a.value);
  }

  std::vector<Ideal> ideal_list_arg(const Statement& st, const std::string& key, const QuotientRing& R) const {
    const Arg& a = arg(st, key);
    std::vector<Ideal> out;
    for (const auto& gens : parse_ideal_list(R.ambient(), a.value, st.line, a.column)) out.push_back(R.ideal(gens));
    return out;
  }

  void expect_ideal(const Statement& st, Block& b, const Ideal& value, const std::string& ctx) const {
    b.fields["result"] = value.to_string();
    if (st.find("expect")) {
      Ideal want = ideal_arg(st, "expect", ctx);
      b.fields["expected"] = want.to_string();
      compare(b, want == value);
    }
  }

  void execute(const Statement& st, Block& b) {
    const std::string& k = st.kind;
    if (k == "ring") declare_ring(st, b);
    else if (k == "ideal") {
      Ideal I = ideal_arg(st, "gens", "ring");
      b.fields["ideal"] = I.to_string();
      ideals_.insert_or_assign(st.name, I);
    } else if (k == "pair") {
      const QuotientRing& R = ring(arg(st, "ring").value);
      int e = 1;
      if (const Arg* a = st.find("e")) e = static_cast<int>(parse_int(a->value, st.line, a->column));
      const Arg& u = arg(st, "u");
      CartierPair P(R, FrobeniusExponent(R.characteristic(), e),
                    parse_polynomial(R.ambient(), u.value, st.line, u.column));
      b.fields["pair"] = P.describe();
      pairs_.insert_or_assign(st.name, P);
    } else if (k == "cover") {
      const Arg* v = st.find("var");
      const Arg& f = arg(st, "poly");
      FiniteCover c = make_simple_extension(ring(arg(st, "base").value), v ? v->value : "t", f.value);
      b.fields["cover"] = c.describe();
      b.fields["basis"] = poly_list(c.basis());
      covers_.insert_or_assign(st.name, c);
    } else if (k == "trace") declare_trace(st, b);
    else if (k == "grading") {
      const Arg& m = arg(st, "modulus");
      const Arg& d = arg(st, "degrees");
      std::vector<int> degs;
      for (long x : parse_int_list(d.value, st.line, d.column)) degs.push_back(static_cast<int>(x));
      GradedStructure G(ring(arg(st, "ring").value), static_cast<int>(parse_int(m.value, st.line, m.column)), degs);
      b.fields["modulus"] = G.modulus();
      b.fields["degrees"] = G.degrees();
      gradings_.insert_or_assign(st.name, G);
    } else if (k == "compute") compute(st, b);
    else if (k == "check") check(st, b);
    else if (k == "enumerate") enumerate(st, b);
    else if (k == "verify-main-theorem") main_theorem(st, b);
    else if (k == "examples") examples(st, b);
  }

  void declare_ring(const Statement& st, Block& b) {
    const Arg& vars = arg(st, "vars");
    auto names = parse_word_list(vars.value, st.line, vars.column);
    const Arg& p = arg(st, "p");
    auto pv = static_cast<std::uint32_t>(parse_int(p.value, st.line, p.column));
    int n = static_cast<int>(names.size());
    MonomialOrder order = MonomialOrder::degrevlex(n);
    if (const Arg* o = st.find("order"); o && o->value == "lex") order = MonomialOrder::lex(n);
    Ring A(pv, names, order);
    QuotientRing R(A);
    if (const Arg* rel = st.find("relations"))
      R = QuotientRing(A, Ideal(A, parse_polynomial_list(A, rel->value, st.line, rel->column)));
    b.fields["ring"] = R.describe();
    rings_.insert_or_assign(st.name, R);
  }

  void declare_trace(const Statement& st, Block& b) {
    const std::string& cname = arg(st, "cover").value;
    const FiniteCover& c = cover(cname);
    TraceFunctional T;
    if (st.flag("auto")) {
      T = trace_of(c);
      b.fields["kind"] = "trace form";
    } else if (const Arg* v = st.find("values")) {
      T = trace_from_values(c, parse_polynomial_list(c.base().ambient(), v->value, st.line, v->column));
      b.fields["kind"] = "values";
    } else {
      T = pi0_trace(c, grading(arg(st, "pi0").value));
      b.fields["kind"] = "degree-0 projection";
    }
    b.fields["values"] = poly_list(T.values);
    traces_.insert_or_assign(st.name, TraceValue{cname, T});
  }

  void compute(const Statement& st, Block& b) {
    const std::string& op = st.name;
    if (st.find("pair")) {
      const CartierPair& P = pair(arg(st, "pair").value);
      if (op == "f-pure-locus") return expect_ideal(st, b, f_pure_locus(P), "pair");
      if (op == "sigma" && !st.find("ideal")) return expect_ideal(st, b, P.sigma_one(), "pair");
      Ideal a = ideal_arg(st, op == "beta" ? "prime" : "ideal", "pair");
      b.fields["input"] = a.to_string();
      if (op == "transpose") return expect_ideal(st, b, transpose_ideal(P, a), "pair");
      if (op == "image") return expect_ideal(st, b, image_ideal(P, a), "pair");
      if (op == "sigma") return expect_ideal(st, b, sigma(P, a), "pair");
      if (op == "rho") return expect_ideal(st, b, rho(P, a), "pair");
      if (op == "lambda") return expect_ideal(st, b, lambda_ideal(P, a), "pair");
      if (op == "cz-closure") return expect_ideal(st, b, cz_closure(P, a), "pair");
      if (op == "beta") return expect_ideal(st, b, beta_prime(P, a), "pair");
      if (op == "kappa") {
        KappaResult K = kappa(P, a);
        b.fields["status"] = to_string(K.status);
        b.fields["route"] = K.route;
        b.fields["iterations"] = K.iterations;
        return expect_ideal(st, b, K.value, "pair");
      }
      if (op == "test-ideal") {
        TestIdealResult t = test_ideal_along(P, a);
        b.fields["status"] = to_string(t.status);
        return expect_ideal(st, b, t.value, "pair");
      }
    }
    if (op == "radical" || op == "minimal-primes") {
      Ideal a = ideal_arg(st, "ideal", "ring");
      b.fields["input"] = a.to_string();
      if (op == "radical") return expect_ideal(st, b, radical(a), "ring");
      auto mp = minimal_primes(a);
      b.fields["result"] = ideal_list(mp);
      if (st.find("expect")) compare(b, same_set(mp, ideal_list_arg(st, "expect", context(st, "ring"))));
      return;
    }
    if (op == "transpose-T" || op == "image-T" || op == "unit-T" || op == "fiber") {
      const TraceValue& tv = trace(arg(st, "trace").value);
      const FiniteCover& c = cover(tv.cover);
      if (op == "unit-T") return expect_ideal(st, b, unit_ideal_T(c, tv.T), "trace.base");
      if (op == "fiber") {
        Ideal p = ideal_arg(st, "prime", "trace.base");
        FiberReport f = fiber_report(c, tv.T, p);
        b.fields["prime"] = p.to_string();
        b.fields["mu"] = f.mu;
        b.fields["rho"] = f.rho;
        b.fields["eta"] = f.eta;
        return;
      }
      if (op == "transpose-T") {
        Ideal a = ideal_arg(st, "ideal", "trace.base");
        b.fields["input"] = a.to_string();
        return expect_ideal(st, b, transpose_T(c, tv.T, a), "trace");
      }
      Ideal a = ideal_arg(st, "ideal", "trace");
      b.fields["input"] = a.to_string();
      return expect_ideal(st, b, image_T(c, tv.T, a), "trace.base");
    }
    if (op == "contract") {
      Ideal a = ideal_arg(st, "ideal", "cover");
      b.fields["input"] = a.to_string();
      return expect_ideal(st, b, cover(arg(st, "cover").value).contract(a), "cover.base");
    }
    if (op == "homogeneous-part") {
      Ideal a = ideal_arg(st, "ideal", "grading");
      b.fields["input"] = a.to_string();
      return expect_ideal(st, b, homogeneous_part_ideal(grading(arg(st, "grading").value), a), "grading");
    }
  }

  void check(const Statement& st, Block& b) {
    const std::string& op = st.name;
    auto expect = opt_bool(st, "expect");
    bool value = false;
    if (op == "compatible") {
      Ideal a = ideal_arg(st, "ideal", "pair");
      b.fields["ideal"] = a.to_string();
      value = is_compatible(pair(arg(st, "pair").value), a);
    } else if (op == "f-pure") {
      const CartierPair& P = pair(arg(st, "pair").value);
      b.fields["sigma(1)"] = P.sigma_one().to_string();
      value = is_f_pure(P);
    } else if (op == "f-regular") {
      value = is_f_regular(pair(arg(st, "pair").value));
    } else if (op == "kappa-certified") {
      Ideal a = ideal_arg(st, "ideal", "pair");
      KappaResult K = kappa(pair(arg(st, "pair").value), a);
      b.fields["kappa"] = K.value.to_string();
      b.fields["status"] = to_string(K.status);
      b.fields["route"] = K.route;
      value = K.status != KappaStatus::Heuristic;
    } else if (op == "tame") {
      const TraceValue& tv = trace(arg(st, "trace").value);
      Ideal p = ideal_arg(st, "prime", "trace.base");
      TameCertificate t = is_tame_T_ramified(cover(tv.cover), tv.T, p);
      b.fields["prime"] = p.to_string();
      b.fields["transpose"] = t.transpose.to_string();
      b.fields["radical"] = t.radical.to_string();
      value = t.tame;
    } else if (op == "tame-random") {
      value = tame_random(st, b);
    } else if (op == "residual") {
      const TraceValue& tv = trace(arg(st, "trace").value);
      value = residual_trace_nonzero(cover(tv.cover), tv.T, ideal_arg(st, "prime", "trace.base"),
                                     ideal_arg(st, "point", "trace"));
    } else if (op == "frobenius-commutes") {
      const TraceValue& tv = trace(arg(st, "trace").value);
      value = commutes_with_frobenius(cover(tv.cover), tv.T);
    } else if (op == "diagram") {
      const TraceValue& tv = trace(arg(st, "trace").value);
      value = check_transposition_diagram(pair(arg(st, "base").value), pair(arg(st, "total").value),
                                          cover(tv.cover), tv.T);
    } else if (op == "fibered" || op == "quasi-fibered") {
      const CartierPair& R = pair(arg(st, "base").value);
      const CartierPair& S = pair(arg(st, "total").value);
      const FiniteCover& c = cover(arg(st, "cover").value);
      FiberedReport f = op == "fibered" ? fibered_check(R, S, c) : quasi_fibered_check(R, S, c);
      b.fields["failures"] = f.failures;
      b.fields["witnesses"] = ideal_list(f.witnesses);
      value = f.holds;
    } else if (op == "veronese-tame") {
      Ideal p = ideal_arg(st, "prime", "grading");
      b.fields["prime"] = p.to_string();
      value = veronese_tame_check(grading(arg(st, "grading").value), p);
    } else if (op == "cyclic-field") {
      const QuotientRing& R = ring(arg(st, "ring").value);
      const Arg& u = arg(st, "u");
      const Arg& q = arg(st, "q");
      value = cyclic_fiber_field_check(R, parse_polynomial(R.ambient(), u.value, st.line, u.column),
                                       static_cast<std::uint64_t>(parse_int(q.value, st.line, q.column)),
                                       ideal_arg(st, "prime", "ring"));
    }
    b.fields["value"] = value;
    verdict(b, value, expect);
  }

  // Random maximal primes of the base: minimal primes of (f_1(x_1), ..., f_n(x_n)) + J
  // for random monic f_i.
  bool tame_random(const Statement& st, Block& b) {
    const TraceValue& tv = trace(arg(st, "trace").value);
    const FiniteCover& c = cover(tv.cover);
    const QuotientRing& R = c.base();
    const Ring& A = R.ambient();
    int count = 10, degree = 3;
    if (const Arg* a = st.find("count")) count = static_cast<int>(parse_int(a->value, st.line, a->column));
    if (const Arg* a = st.find("degree")) degree = static_cast<int>(parse_int(a->value, st.line, a->column));
    if (count < 0 || degree < 1) throw PreconditionViolated("count must be >= 0 and degree >= 1");
    std::mt19937_64 rng(opts_.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(st.line)));
    std::uniform_int_distribution<int> deg(1, degree);
    std::uniform_int_distribution<std::int64_t> coef(0, A.characteristic() - 1);
    std::vector<Ideal> primes;
    for (int attempt = 0; static_cast<int>(primes.size()) < count && attempt < 50 * (count + 1); ++attempt) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < A.nvars(); ++i) {
        Polynomial x = Polynomial::variable(A, i);
        int d = deg(rng);
        Polynomial f = x.pow(d);
        for (int j = 0; j < d; ++j) f += Polynomial::constant(A, coef(rng)) * x.pow(j);
        gens.push_back(f);
      }
      auto mp = minimal_primes(R.ideal(gens));
      if (mp.empty()) continue;
      Ideal p = mp[std::uniform_int_distribution<std::size_t>(0, mp.size() - 1)(rng)];
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    if (static_cast<int>(primes.size()) < count)
      throw BudgetExceeded("found only " + std::to_string(primes.size()) + " distinct maximal primes");
    bool all = true;
    json rows = json::array();
    for (const auto& p : primes) {
      bool t = is_tame_T_ramified(c, tv.T, p).tame;
      all = all && t;
      rows.push_back({{"prime", p.to_string()}, {"tame", t}});
    }
    b.fields["seed"] = opts_.seed;
    b.fields["primes"] = rows;
    return all;
  }

  void enumerate(const Statement& st, Block& b) {
    const CartierPair& P = pair(st.name);
    const CompatibleLattice& L = P.lattice();
    auto schpec = L.schpec();
    b.fields["f_pure"] = L.f_pure;
    if (L.non_f_pure_locus) b.fields["non_f_pure_locus"] = L.non_f_pure_locus->to_string();
    b.fields["cspec_complete"] = L.cspec_complete;
    b.fields["schpec"] = ideal_list(schpec);
    b.fields["cspec"] = ideal_list(L.cspec());
    bool ok = true, checked = false;
    if (st.find("schpec")) {
      checked = true;
      ok = ok && same_set(schpec, ideal_list_arg(st, "schpec", P.ring()));
    }
    if (st.find("cspec")) {
      checked = true;
      ok = ok && same_set(L.cspec(), ideal_list_arg(st, "cspec", P.ring()));
    }
    if (checked) compare(b, ok);
    if (opts_.want_dot) write_dot(st.name, L);
  }

  // Hasse diagram of the radical compatible ideals, larger ideals above smaller,
  // with the unit ideal as a dashed sentinel on top.
  void write_dot(const std::string& name, const CompatibleLattice& L) {
    auto nodes = L.radical_ideals();
    const Ring& A = nodes.empty() ? L.primes.front().ring() : nodes.front().ring();
    nodes.push_back(Ideal::unit(A));
    const std::size_t top = nodes.size() - 1;
    auto below = [&](std::size_t i, std::size_t j) { return i != j && nodes[j].contains(nodes[i]) && nodes[i] != nodes[j]; };
    dot_ << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      dot_ << "  n" << i << " [label=\"" << nodes[i].to_string() << "\"";
      if (i == top) dot_ << ", style=dashed";
      else if (L.contains_prime(nodes[i])) {
        auto it = std::find(L.primes.begin(), L.primes.end(), nodes[i]);
        if (L.center[it - L.primes.begin()]) dot_ << ", peripheries=2";
      }
      dot_ << "];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (!below(i, j)) continue;
        bool cover = true;
        for (std::size_t k = 0; k < nodes.size() && cover; ++k)
          if (below(i, k) && below(k, j)) cover = false;
        if (cover) dot_ << "  n" << j << " -> n" << i << ";\n";
      }
    dot_ << "}\n";
  }

  void main_theorem(const Statement& st, Block& b) {
    const TraceValue& tv = trace(arg(st, "trace").value);
    MainTheoremReport m = main_theorem_check(pair(arg(st, "base").value), pair(arg(st, "total").value),
                                             cover(tv.cover), tv.T);
    b.fields["a"] = m.a;
    b.fields["b"] = m.b;
    b.fields["c"] = m.c;
    b.fields["fibered"] = m.fibered;
    b.fields["tau_images_match"] = m.tau_images_match;
    b.fields["tau_inclusion"] = m.tau_inclusion;
    b.fields["implications_hold"] = m.implications_hold;
    json rows = json::array();
    for (const auto& r : m.rows)
      rows.push_back({{"prime", r.prime.to_string()}, {"in_schpec", r.in_schpec}, {"tame", r.tame}});
    b.fields["rows"] = rows;
    b.fields["notes"] = m.notes;
    bool ok = m.implications_hold && m.tau_inclusion;
    for (const auto& [key, got] : {std::pair{"a", m.a}, {"b", m.b}, {"c", m.c}})
      if (auto want = opt_bool(st, key)) ok = ok && *want == got;
    compare(b, ok);
  }

  void examples(const Statement& st, Block& b) {
    if (depth_ > 0) throw PreconditionViolated("examples cannot be nested");
    const Arg* f = st.find("filter");
    json runs = json::array();
    bool ok = true;
    for (const auto& e : embedded_corpus()) {
      std::string name = e.name;
      if (f && name.find(f->value) == std::string::npos) continue;
      Report r = Interpreter(opts_, depth_ + 1).run(parse_scenario(e.text, name));
      runs.push_back({{"scenario", name}, {"checks", r.checks}, {"failed", r.failures}});
      ok = ok && r.ok();
    }
    b.fields["scenarios"] = runs;
    compare(b, ok);
  }

  RunOptions opts_;
  int depth_;
  std::map<std::string, QuotientRing> rings_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, CartierPair> pairs_;
  std::map<std::string, FiniteCover> covers_;
  std::map<std::string, TraceValue> traces_;
  std::map<std::string, GradedStructure> gradings_;
  std::ostringstream dot_;
};

}  // namespace

Report run_scenario(const Scenario& sc, const RunOptions& opts) { return Interpreter(opts, 0).run(sc); }

}  // namespace frobcore::cli
