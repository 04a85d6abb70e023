// Runs the acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "frobcore/cartier.hpp"
#include "frobcore/covers.hpp"
#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"
#include "frobcore/grading.hpp"
#include "report.hpp"
#include "support/util.hpp"

using namespace frobcore;
using testutil::I;
using testutil::P;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

CartierPair pair_on(const QuotientRing& R, const std::string& u) {
  return CartierPair(R, FrobeniusExponent(R.characteristic(), 1), P(R.ambient(), u));
}

bool same_set(const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

bool contains_ideal(const std::vector<Ideal>& v, const Ideal& a) { return std::find(v.begin(), v.end(), a) != v.end(); }

// A minimal prime of J + (random generators), retried until decomposition succeeds.
Ideal random_prime(std::mt19937_64& rng, const QuotientRing& R, int maxdeg) {
  const Ring& A = R.ambient();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int ngens = 1 + static_cast<int>(rng() % A.nvars());
    std::vector<Polynomial> g;
    for (int i = 0; i < ngens; ++i) g.push_back(testutil::random_poly(rng, A, maxdeg, 3));
    Ideal a = R.ideal(g);
    if (a.is_unit()) continue;
    try {
      auto mp = minimal_primes(a);
      if (!mp.empty()) return mp[rng() % mp.size()];
    } catch (const DecompositionOutOfScope&) {
    }
  }
  throw BudgetExceeded("no random prime found");
}

// Distinct random maximal ideals of the one-variable ring A: prime factors of random monic polynomials.
std::vector<Ideal> random_maximal(std::mt19937_64& rng, const Ring& A, int count, const std::vector<Ideal>& avoid) {
  std::vector<Ideal> out;
  Polynomial x = Polynomial::variable(A, 0);
  while (static_cast<int>(out.size()) < count) {
    int d = 1 + static_cast<int>(rng() % 3);
    Polynomial f = x.pow(d);
    for (int j = 0; j < d; ++j) f += Polynomial::constant(A, static_cast<std::int64_t>(rng() % A.characteristic())) * x.pow(j);
    for (const auto& m : minimal_primes(Ideal(A, {f})))
      if (!contains_ideal(out, m) && !contains_ideal(avoid, m) && static_cast<int>(out.size()) < count) out.push_back(m);
  }
  return out;
}

// 1. Wild Artin-Schreier cover of F_2[x].
void wild(Outcome& o) {
  Ring A(2, {"x"});
  QuotientRing R(A);
  auto phi = pair_on(R, "x");
  auto c = make_simple_extension(R, "y", "y^2 + x*y + 1");
  const Ring& B = c.total().ambient();
  auto psi = pair_on(c.total(), "(1 + x)*(y^2 + x*y + 1)");
  auto T = trace_from_values(c, {P(A, "0"), P(A, "x")});
  o.require(trace_of(c).values == T.values, "T is the trace form");

  o.require(is_compatible(phi, I(A, "[x]")), "(x) compatible in R");
  // Direct witness: psi(F_* (y + 1)) = y, which is a unit modulo (y + 1).
  Ideal y1 = c.total().lift(I(B, "[y + 1]"));
  bool compat = is_compatible(psi, y1);
  o.require(!compat, "(y+1) not compatible in S");
  o.require(!y1.contains(psi.apply(P(B, "y + 1"))), "psi(F_*(y+1)) outside (y+1)");

  auto t = is_tame_T_ramified(c, T, I(A, "[x]"));
  o.require(!t.tame, "not tame at (x)");
  o.require(!tame_by_residual_traces(c, T, I(A, "[x]")), "residual-trace oracle agrees");

  auto f = fibered_check(phi, psi, c);
  o.require(!f.holds, "fibered check fails");
  o.require(contains_ideal(f.witnesses, y1), "witness (y+1)");
  o.detail << "compatible(x)=1 compatible(y+1)=" << compat << " tame(x)=" << t.tame << " fibered=" << f.holds
           << " witnesses=" << f.witnesses.size();
}

// 2. Tame Kummer cover F_3[x] -> F_3[y], x = y^2.
void kummer(Outcome& o) {
  Ring A(3, {"x"});
  QuotientRing R(A);
  auto c = make_simple_extension(R, "y", "y^2 - x");
  auto T = trace_of(c);
  auto phi = pair_on(R, "x^2");
  auto psi = pair_on(c.total(), "y^2*(y^2 - x)^2");
  std::vector<Ideal> primes{I(A, "[x]"), I(A, "[x - 1]")};
  std::mt19937_64 rng(testutil::seed() + 2);
  for (const auto& m : random_maximal(rng, A, 10, primes)) primes.push_back(m);
  int tame = 0;
  for (const auto& p : primes) {
    bool t = is_tame_T_ramified(c, T, p).tame;
    o.require(t == tame_by_residual_traces(c, T, p), "oracle agrees at " + p.to_string());
    tame += t;
  }
  o.require(tame == static_cast<int>(primes.size()), "tame at every prime");

  auto m = main_theorem_check(phi, psi, c, T);
  o.require(m.a && m.b && m.c, "(a), (b), (c) true");
  o.require(m.tau_images_match, "main theorem tau comparison");
  int centers = 0;
  for (const auto& q : psi.lattice().schpec()) {
    Ideal up = image_T(c, T, test_ideal_along(psi, q).value);
    Ideal down = test_ideal_along(phi, c.contract(q)).value;
    o.require(up == down, "Tr(tau_q) = tau_(q meet R) at " + q.to_string());
    ++centers;
  }
  o.detail << "tame at " << tame << "/" << primes.size() << " primes; a=" << m.a << " b=" << m.b << " c=" << m.c
           << "; tau matched at " << centers << " centers";
}

// 3. b in a^T iff T(b) in a, for pairs and covers.
void adjunction(Outcome& o) {
  std::mt19937_64 rng(testutil::seed() + 3);
  int instances = 0, failures = 0;
  Ring r1(2, {"x"}), r2(2, {"x", "y"}), r3(3, {"x", "y"});
  std::vector<CartierPair> pairs{pair_on(QuotientRing(r1), "x + x^2"),
                                 new_pair(r2, I(r2, "[x*y]"), 1, P(r2, "x*y")),
                                 pair_on(QuotientRing(r3), "x^2*y^2")};
  for (const auto& Pp : pairs) {
    const Ring& A = Pp.ambient();
    for (int k = 0; k < 200; ++k, ++instances) {
      Ideal a = Pp.ring().lift(testutil::random_ideal(rng, A, 2, 3, 2));
      Ideal b = Pp.ring().lift(testutil::random_ideal(rng, A, 2, 3, 2));
      failures += transpose_ideal(Pp, a).contains(b) != a.contains(image_ideal(Pp, b));
    }
  }
  for (auto [p, f] : {std::pair{2u, "y^2 + x*y + 1"}, {3u, "y^2 - x"}, {5u, "y^2 - x"}}) {
    Ring A(p, {"x"});
    auto c = make_simple_extension(QuotientRing(A), "y", f);
    auto T = trace_of(c);
    const Ring& B = c.total().ambient();
    for (int k = 0; k < 200; ++k, ++instances) {
      Ideal a = testutil::random_ideal(rng, A, 2, 3, 2);
      Ideal b = c.total().lift(testutil::random_ideal(rng, B, 2, 3, 2));
      failures += transpose_T(c, T, a).contains(b) != a.contains(image_T(c, T, b));
    }
  }
  o.require(failures == 0, "no adjunction failures");
  o.detail << instances << " instances, " << failures << " failures";
}

// 4. (a^T1)^T2 = a^(T1 o T2) on F_5[x] -> F_5[y] -> F_5[z].
void transitivity(Outcome& o) {
  Ring A(5, {"x"});
  auto c1 = make_simple_extension(QuotientRing(A), "y", "y^2 - x");
  auto c2 = make_simple_extension(c1.total(), "z", "z^2 - y");
  auto T1 = trace_of(c1), T2 = trace_of(c2);
  auto comp = compose_covers(c1, c2, T1, T2);
  o.require(comp.cover.degree() == 4, "degree 4");
  o.require(trace_of(comp.cover).values == comp.trace.values, "composite trace is the trace form");
  // Square-free products of irreducibles over F_5.
  std::vector<Polynomial> irr;
  for (const char* s : {"x", "x - 1", "x - 2", "x - 3", "x - 4", "x^2 - 2", "x^2 - 3", "x^2 + x + 1"})
    irr.push_back(P(A, s));
  std::mt19937_64 rng(testutil::seed() + 4);
  int failures = 0;
  for (int k = 0; k < 50; ++k) {
    Polynomial g = Polynomial::constant(A, 1);
    for (const auto& f : irr)
      if (rng() % 3 == 0) g *= f;
    Ideal a(A, {g});
    if (!is_radical(a)) throw std::logic_error("generator is not square-free");
    failures += transpose_T(c2, T2, transpose_T(c1, T1, a)) != transpose_T(comp.cover, comp.trace, a);
  }
  o.require(failures == 0, "transitivity");
  o.detail << "50 radical ideals, " << failures << " failures";
}

// 5. (I^[q])^[1/q] = I and I in J^[q] iff I^[1/q] in J.
void frobenius_roots(Outcome& o) {
  std::mt19937_64 rng(testutil::seed() + 5);
  int fail_inverse = 0, fail_adjoint = 0;
  const std::uint32_t ps[] = {2, 3, 5};
  for (int k = 0; k < 100; ++k) {
    std::uint32_t p = ps[k % 3];
    std::uint64_t q = k % 2 ? std::uint64_t{p} * p : p;
    Ring r(p, k % 4 < 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    Ideal a = testutil::random_ideal(rng, r, 2, 4, 3);
    Ideal j = testutil::random_ideal(rng, r, 2, 2, 2);
    fail_inverse += frobenius_root(bracket_power(a, q), q) != a;
    // Adjointness, with J chosen so that both sides are sometimes true.
    for (const Ideal& b : {j, frobenius_root(a, q), frobenius_root(a, q) + j})
      fail_adjoint += bracket_power(b, q).contains(a) != b.contains(frobenius_root(a, q));
  }
  o.require(fail_inverse == 0, "root of bracket power");
  o.require(fail_adjoint == 0, "adjointness");
  o.detail << "100 ideals; inverse failures " << fail_inverse << ", adjointness failures " << fail_adjoint;
}

// All nonzero polynomials over F_p of total degree <= d.
std::vector<Polynomial> all_polys(const Ring& r, int d) {
  std::vector<Monomial> monos;
  std::function<void(int, int, Monomial)> rec = [&](int v, int left, Monomial m) {
    if (v == r.nvars()) {
      monos.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      Monomial n = m;
      n.exp[v] = k;
      rec(v + 1, left - k, n);
    }
  };
  rec(0, d, Monomial{});
  std::vector<Polynomial> out;
  const std::uint64_t p = r.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Term> t;
    std::uint64_t c = code;
    for (const auto& m : monos) {
      if (c % p) t.push_back({m, static_cast<Coeff>(c % p)});
      c /= p;
    }
    out.push_back(Polynomial::from_terms(r, t));
  }
  return out;
}

// 6. Nodal lattice against a brute-force search.
void nodal(Outcome& o) {
  Ring r(2, {"x", "y"});
  auto A = new_pair(r, I(r, "[x*y]"), 1, P(r, "x*y"));
  auto schpec = A.lattice().schpec();
  std::vector<Ideal> expected{I(r, "[x]"), I(r, "[y]"), I(r, "[x; y]")};
  o.require(same_set(schpec, expected), "Schpec = {(x), (y), (x, y)}");

  auto polys = all_polys(r, 2);
  std::vector<Ideal> found;
  std::size_t tried = 0;
  auto consider = [&](const Ideal& a) {
    ++tried;
    if (a.is_unit() || contains_ideal(found, a)) return;
    if (!a.contains(P(r, "x*y")) || !is_compatible(A, a)) return;
    if (!is_prime(a) || a.contains(A.sigma_one())) return;
    found.push_back(a);
  };
  for (std::size_t i = 0; i < polys.size(); ++i) {
    consider(Ideal(r, {polys[i]}));
    for (std::size_t j = i + 1; j < polys.size(); ++j) consider(Ideal(r, {polys[i], polys[j]}));
  }
  o.require(same_set(found, schpec), "brute force agrees");
  o.detail << "enumerated " << schpec.size() << " centers; brute force over " << tried << " ideals found "
           << found.size();
}

// Membership in (x_1^q, ..., x_n^q) read off the terms.
bool in_bracket_of_variables(const Polynomial& f, std::uint64_t q) {
  for (const auto& t : f.terms()) {
    bool divisible = false;
    for (int i = 0; i < f.ring().nvars(); ++i) divisible = divisible || t.mono.exp[i] >= static_cast<int>(q);
    if (!divisible) return false;
  }
  return true;
}

// 7. Fedder-style F-purity.
void fedder(Outcome& o) {
  Ring r(7, {"x", "y", "z"});
  Polynomial f = P(r, "x^3 + y^3 + z^3");
  auto cone = new_pair(r, Ideal(r, {f}), 1, f.pow(6));
  bool pure = is_f_pure(cone);
  o.require(pure && cone.sigma_one().is_unit(), "cone F-pure, sigma(1) = (1)");
  o.require(!in_bracket_of_variables(f.pow(6), 7), "f^6 outside (x^7, y^7, z^7)");
  o.require(!I(r, "[x^7; y^7; z^7]").contains(f.pow(6)), "ideal membership agrees");

  Ring s(2, {"x"});
  auto sq = new_pair(s, Ideal::zero(s), 1, P(s, "x^2"));
  o.require(!is_f_pure(sq), "(F_2[x], x^2) not F-pure");
  o.require(f_pure_locus(sq) == I(s, "[x]"), "locus (x)");
  o.require(in_bracket_of_variables(P(s, "x^2"), 2), "x^2 inside (x^2)");
  o.detail << "cone sigma(1)=" << cone.sigma_one().to_string() << "; x^2 pair sigma(1)=" << f_pure_locus(sq).to_string();
}

// 8. Veronese dichotomy.
void veronese(Outcome& o) {
  Ring V(2, {"y"});
  GradedStructure G(QuotientRing(V), 2, {1});
  o.require(veronese_tame_check(G, I(V, "[y^2]")), "tame at (y^2)");
  o.require(!veronese_tame_check(G, I(V, "[y^2 + 1]")), "wild at (y^2 + 1)");

  Ring A(2, {"x"});
  auto c = make_simple_extension(QuotientRing(A), "y", "y^2 + x");
  GradedStructure GS(c.total(), 2, {1, 0});
  auto T = pi0_trace(c, GS);
  int agree = 0;
  for (const char* s : {"[x]", "[x + 1]"}) {
    Ideal p = I(A, s);
    Ideal syz = transpose_T(c, T, p);
    Ideal hom = homogeneous_part_ideal(GS, radical(c.extend(p)));
    o.require(syz == hom, std::string("p^T equals the homogeneous part at ") + s);
    o.require(is_tame_T_ramified(c, T, p).tame == veronese_tame_check(GS, c.extend(p)), "free and graded tameness agree");
    agree += syz == hom;
  }
  o.require(is_tame_T_ramified(c, T, I(A, "[x]")).tame, "free cover tame at (x)");
  o.require(!is_tame_T_ramified(c, T, I(A, "[x + 1]")).tame, "free cover wild at (x + 1)");
  o.detail << "syzygy and homogeneous-part transposes agree at " << agree << "/2 primes";
}

// 9. beta is a monotone idempotent retraction.
void beta_retraction(Outcome& o) {
  Ring r1(2, {"x", "y"}), r2(2, {"x"}), r3(3, {"x", "y"});
  std::vector<CartierPair> pairs{new_pair(r1, I(r1, "[x*y]"), 1, P(r1, "x*y")), pair_on(QuotientRing(r2), "x + x^2"),
                                 pair_on(QuotientRing(r3), "x^2*y^2")};
  std::mt19937_64 rng(testutil::seed() + 9);
  int sampled = 0, idem = 0, mono_pairs = 0, mono_fail = 0, fixed_fail = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& Pp = pairs[i];
    int n = i == 0 ? 34 : 33;
    std::vector<Ideal> primes;
    for (int k = 0; k < n; ++k) primes.push_back(random_prime(rng, Pp.ring(), 2));
    std::vector<Ideal> betas;
    for (const auto& p : primes) {
      Ideal b = beta_prime(Pp, p);
      idem += beta_prime(Pp, b) == b;
      o.require(p.contains(b), "beta_p inside p");
      betas.push_back(b);
      ++sampled;
    }
    for (std::size_t a = 0; a < primes.size(); ++a)
      for (std::size_t b = 0; b < primes.size(); ++b)
        if (a != b && primes[b].contains(primes[a])) {
          ++mono_pairs;
          mono_fail += !betas[b].contains(betas[a]);
        }
    for (const auto& c : Pp.lattice().cspec()) fixed_fail += beta_prime(Pp, c) != c;
  }
  o.require(idem == sampled, "beta o beta = beta");
  o.require(mono_fail == 0, "monotone");
  o.require(fixed_fail == 0, "fixes compatible primes");
  o.require(mono_pairs > 0, "some comparable primes sampled");
  o.detail << sampled << " primes; idempotent " << idem << "; " << mono_pairs << " comparable pairs, " << mono_fail
           << " monotonicity failures; " << fixed_fail << " unfixed compatible primes";
}

struct CorpusPair {
  std::string name;
  CartierPair pair;
};

std::vector<CorpusPair> corpus_pairs() {
  std::vector<CorpusPair> out;
  std::vector<std::string> seen;
  for (const auto& e : cli::embedded_corpus()) {
    auto rep = cli::run_scenario(cli::parse_scenario(e.text, e.name));
    for (const auto& [name, Pp] : rep.pairs) {
      std::string key = Pp.describe();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      out.push_back({std::string(e.name) + "/" + name, Pp});
    }
  }
  return out;
}

// 10. Pair powers have the same boundary.
void boundary(Outcome& o) {
  std::mt19937_64 rng(testutil::seed() + 10);
  int checked = 0, beta_fail = 0, schpec_fail = 0;
  for (const auto& [name, Pp] : corpus_pairs()) {
    std::vector<Ideal> primes;
    for (int k = 0; k < 50; ++k) primes.push_back(random_prime(rng, Pp.ring(), 2));
    auto schpec = Pp.lattice().schpec();
    for (int n : {2, 3}) {
      auto Pn = Pp.power(n);
      bool same = same_set(Pn.lattice().schpec(), schpec);
      schpec_fail += !same;
      if (!same) o.detail << "[Schpec differs: " << name << "^" << n << "] ";
      for (const auto& p : primes) beta_fail += beta_prime(Pn, p) != beta_prime(Pp, p);
    }
    ++checked;
  }
  o.require(schpec_fail == 0, "Schpec of powers");
  o.require(beta_fail == 0, "beta of powers");
  o.detail << checked << " corpus pairs x powers 2, 3; " << schpec_fail << " Schpec mismatches, " << beta_fail
           << " beta mismatches";
}

// 11. Certified kappa values are compatible and inside the input; the corpus never needs the fallback.
void kappa_certification(Outcome& o) {
  int heuristic = 0, certified = 0, unsound = 0, budget = 0, total = 0;
  for (const auto& e : cli::embedded_corpus()) {
    auto rep = cli::run_scenario(cli::parse_scenario(e.text, e.name));
    for (const auto& b : rep.blocks) {
      bool h = b.fields.contains("status") && b.fields.at("status") == to_string(KappaStatus::Heuristic);
      heuristic += h;
      if (h) o.detail << "[fallback in " << e.name << " line " << b.line << "] ";
    }
  }
  std::mt19937_64 rng(testutil::seed() + 11);
  for (const auto& [name, Pp] : corpus_pairs()) {
    for (int k = 0; k < 20; ++k, ++total) {
      const Ring& A = Pp.ambient();
      Ideal a = k % 2 ? random_prime(rng, Pp.ring(), 2) : Pp.ring().lift(testutil::random_ideal(rng, A, 2, 2, 2));
      try {
        auto K = kappa(Pp, a);
        if (K.status == KappaStatus::Heuristic) {
          ++heuristic;
          o.detail << "[fallback: " << name << " " << a.to_string() << "] ";
        }
        if (K.status == KappaStatus::Certified) {
          ++certified;
          bool ok = is_compatible(Pp, K.value) && Pp.ring().lift(a).contains(K.value);
          unsound += !ok;
        }
      } catch (const BudgetExceeded&) {
        ++budget;
        o.detail << "[over budget: " << name << " " << a.to_string() << "] ";
      }
    }
  }
  o.require(unsound == 0, "certified values compatible and contained");
  o.require(heuristic == 0, "no heuristic fallback on the corpus");
  o.detail << total << " random kappa queries: " << certified << " certified, " << unsound << " unsound, " << heuristic
           << " heuristic, " << budget << " over budget";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 for none
  void (*run)(Outcome&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "wild Artin-Schreier ramification", 1.0, wild},
      {2, "tame Kummer cover over F_3", 5.0, kummer},
      {3, "transpose adjunction", 0, adjunction},
      {4, "transpose transitivity on a degree-4 tower", 0, transitivity},
      {5, "Frobenius root and bracket power", 0, frobenius_roots},
      {6, "nodal lattice against brute force", 10.0, nodal},
      {7, "Fedder F-purity", 0, fedder},
      {8, "Veronese dichotomy", 0, veronese},
      {9, "beta retraction", 0, beta_retraction},
      {10, "boundary of pair powers", 0, boundary},
      {11, "kappa certification", 0, kappa_certification},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const Error& e) {
      o.pass = false;
      o.detail << "[" << e.kind() << ": " << e.what() << "]";
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail << " [over the " << c.limit_seconds << " s limit]";
    }
    failed += !o.pass;
    std::printf("AC%-2d %s  %-44s %7.3f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed;
}
