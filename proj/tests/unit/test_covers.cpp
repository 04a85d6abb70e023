#include <algorithm>
#include <random>

#include "doctest.h"
#include "support/util.hpp"

#include "frobcore/covers.hpp"
#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"

using namespace frobcore;
using testutil::I;
using testutil::P;

namespace {

struct Example {
  Ring A;
  QuotientRing R;
  FiniteCover cover;
  TraceFunctional T;
  Ring B() const { return cover.total().ambient(); }
};

Example make(std::uint32_t p, const std::string& var, const std::string& f) {
  Ring A(p, {"x"});
  QuotientRing R(A);
  auto c = make_simple_extension(R, var, f);
  auto T = trace_of(c);
  return {A, R, c, T};
}

Example artin_schreier() { return make(2, "y", "y^2 + x*y + 1"); }
Example kummer() { return make(3, "y", "y^2 - x"); }

CartierPair pair_on(const QuotientRing& R, const std::string& u) {
  return CartierPair(R, FrobeniusExponent(R.characteristic(), 1), P(R.ambient(), u));
}

Ideal sideal(const Example& e, const std::string& s) { return e.cover.total().lift(I(e.B(), s)); }

}  // namespace

TEST_CASE("simple extensions and traces") {
  auto as = artin_schreier();
  CHECK(as.cover.degree() == 2);
  CHECK(as.T.values[0].is_zero());
  CHECK(as.T.values[1] == P(as.A, "x"));
  auto k = kummer();
  CHECK(k.T.values[0] == P(k.A, "2"));
  CHECK(k.T.values[1].is_zero());
  auto id = make(2, "t", "t + x^2");
  CHECK(id.cover.degree() == 1);
  CHECK(id.T.values[0].is_one());
  Ring A(2, {"x"});
  CHECK_THROWS_AS(make_simple_extension(QuotientRing(A), "t", "x*t^2 + 1"), NotMonic);
  CHECK_THROWS_AS(make_simple_extension(QuotientRing(A), "t", "x + 1"), NotMonic);
  auto coords = as.cover.coordinates(P(as.B(), "y^3"));
  // y^2 = x*y + 1, y^3 = x*y^2 + y = (x^2 + 1)*y + x
  CHECK(coords[0] == P(as.A, "x"));
  CHECK(coords[1] == P(as.A, "x^2 + 1"));
}

TEST_CASE("trace agrees with Newton identities") {
  std::mt19937_64 rng(testutil::seed());
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring A(p, {"x"});
    for (int trial = 0; trial < 10; ++trial) {
      int d = 1 + trial % 4;
      Ring B = extension_ring(QuotientRing(A), "t");
      std::vector<Polynomial> a;  // a_0 .. a_{d-1}
      Polynomial f = Polynomial::variable(B, 0).pow(d);
      for (int i = 0; i < d; ++i) {
        a.push_back(testutil::random_poly(rng, A, 2, 2));
        f += map_by_name(a.back(), B) * Polynomial::variable(B, 0).pow(i);
      }
      auto c = make_simple_extension(QuotientRing(A), B, f);
      auto T = trace_of(c);
      // p_k + a_{d-1} p_{k-1} + ... + a_{d-k+1} p_1 + k a_{d-k} = 0
      for (int k = 1; k < d; ++k) {
        Polynomial s = T.values[k] + Polynomial::constant(A, k) * a[d - k];
        for (int j = 1; j < k; ++j) s += a[d - j] * T.values[k - j];
        CHECK(s.is_zero());
      }
      CHECK(T.values[0] == Polynomial::constant(A, d));
    }
  }
}

TEST_CASE("images and transposes on the worked examples") {
  auto as = artin_schreier();
  CHECK(image_T(as.cover, as.T, Ideal::unit(as.B())) == I(as.A, "[x]"));
  CHECK(unit_ideal_T(as.cover, as.T) == I(as.A, "[x]"));
  CHECK(image_T(as.cover, as.T, as.cover.total().zero()).is_zero());
  CHECK(transpose_T(as.cover, as.T, I(as.A, "[x]")).is_unit());
  auto k = kummer();
  CHECK(image_T(k.cover, k.T, Ideal::unit(k.B())).is_unit());
  CHECK(transpose_T(k.cover, k.T, I(k.A, "[x]")) == sideal(k, "[y]"));
  CHECK(transpose_T(k.cover, k.T, I(k.A, "[x - 1]")) == sideal(k, "[y^2 - 1]"));
  CHECK(transpose_T(k.cover, k.T, Ideal::zero(k.A)) == k.cover.total().zero());
}

TEST_CASE("tameness and residual traces") {
  auto as = artin_schreier();
  auto k = kummer();
  CHECK(is_tame_T_ramified(k.cover, k.T, I(k.A, "[x]")).tame);
  CHECK(is_tame_T_ramified(k.cover, k.T, I(k.A, "[x - 1]")).tame);
  auto cert = is_tame_T_ramified(as.cover, as.T, I(as.A, "[x]"));
  CHECK_FALSE(cert.tame);
  CHECK(cert.transpose.is_unit());
  CHECK(cert.radical == sideal(as, "[y + 1]"));
  CHECK(residual_trace_nonzero(k.cover, k.T, I(k.A, "[x - 1]"), sideal(k, "[y - 1]")));
  CHECK_FALSE(residual_trace_nonzero(as.cover, as.T, I(as.A, "[x]"), sideal(as, "[y + 1]")));
  auto id = make(2, "t", "t + x");
  CHECK(residual_trace_nonzero(id.cover, id.T, I(id.A, "[x + 1]"), sideal(id, "[x + 1]")));
}

TEST_CASE("tameness oracle agreement and trace surjectivity") {
  std::vector<Example> covers{artin_schreier(), kummer(), make(2, "y", "y^2 + x"), make(3, "y", "y^3 - x"),
                              make(5, "y", "y^2 - x^3 - x"), make(2, "y", "y^3 + x")};
  for (const auto& e : covers) {
    std::vector<Polynomial> primes;
    for (const auto& f : {"x", "x + 1", "x + 2", "x^2 + 1", "x^2 + x + 1", "x^3 + x + 1"}) {
      Polynomial g = P(e.A, f);
      if (is_prime(Ideal(e.A, {g}))) primes.push_back(g);
    }
    primes.push_back(Polynomial(e.A));
    for (const auto& g : primes) {
      Ideal p(e.A, {g});
      bool tame = is_tame_T_ramified(e.cover, e.T, p).tame;
      CHECK(tame == tame_by_residual_traces(e.cover, e.T, p));
      if (tame) CHECK_FALSE(p.contains(unit_ideal_T(e.cover, e.T)));
      if (!p.is_zero()) {
        auto fr = fiber_report(e.cover, e.T, p);
        CHECK(fr.mu >= fr.rho);
        CHECK(fr.mu >= fr.eta);
        CHECK(fr.mu == static_cast<std::size_t>(e.cover.degree()));
      }
    }
  }
}

TEST_CASE("traces commuting with Frobenius") {
  auto as = artin_schreier();
  auto k = kummer();
  CHECK(commutes_with_frobenius(as.cover, as.T));
  CHECK(commutes_with_frobenius(k.cover, k.T));
  auto bad = trace_from_values(k.cover, {P(k.A, "0"), P(k.A, "1")});
  CHECK_FALSE(commutes_with_frobenius(k.cover, bad));
}

TEST_CASE("adjunction and non-degeneracy for covers") {
  std::mt19937_64 rng(testutil::seed() + 7);
  for (const auto& e : {artin_schreier(), kummer(), make(5, "y", "y^2 - x")}) {
    int agree = 0;
    for (int k = 0; k < 200; ++k) {
      Ideal a = testutil::random_ideal(rng, e.A, 2, 3, 2);
      Ideal b = e.cover.total().lift(testutil::random_ideal(rng, e.B(), 2, 3, 2));
      bool lhs = transpose_T(e.cover, e.T, a).contains(b);
      bool rhs = a.contains(image_T(e.cover, e.T, b));
      agree += lhs == rhs;
    }
    CHECK(agree == 200);
    Ideal one = unit_ideal_T(e.cover, e.T);
    for (int k = 0; k < 20; ++k) {
      Ideal a = testutil::random_ideal(rng, e.A, 1, 3, 3);
      Ideal back = e.cover.contract(transpose_T(e.cover, e.T, a));
      CHECK(back.contains(a));
      CHECK(back == quotient(a, one));
    }
  }
}

TEST_CASE("transposes of radical ideals stay radical for separable traces") {
  for (const auto& e : {artin_schreier(), kummer(), make(5, "y", "y^2 - x")}) {
    REQUIRE(commutes_with_frobenius(e.cover, e.T));
    for (const auto& s : {"[x]", "[x + 1]", "[x^2 + x]", "[x^3 + x + 1]", "[0]"}) {
      Ideal a = radical(I(e.A, s));
      Ideal at = transpose_T(e.cover, e.T, a);
      if (!at.is_unit()) CHECK(radical(at) == at);
    }
  }
}

TEST_CASE("transposition diagrams") {
  auto as = artin_schreier();
  auto S = pair_on(as.cover.total(), "(1 + x)*(y^2 + x*y + 1)");
  CHECK(check_transposition_diagram(pair_on(as.R, "x + x^2"), S, as.cover, as.T));
  CHECK_FALSE(check_transposition_diagram(pair_on(as.R, "x"), S, as.cover, as.T));
  CHECK(S.apply(P(as.B(), "1")).is_one());
  CHECK(S.apply(P(as.B(), "y")) == P(as.B(), "y + 1"));
  auto id = make(2, "t", "t + x");
  CHECK(check_transposition_diagram(pair_on(id.R, "x"), pair_on(id.cover.total(), "x*(t + x)"), id.cover, id.T));
  auto k = kummer();
  auto KS = pair_on(k.cover.total(), "y^2*(y^2 - x)^2");
  CHECK(check_transposition_diagram(pair_on(k.R, "x^2"), KS, k.cover, k.T));
}

TEST_CASE("fibered checks and the main theorem table") {
  auto as = artin_schreier();
  auto AR = pair_on(as.R, "x");
  auto AS = pair_on(as.cover.total(), "(1 + x)*(y^2 + x*y + 1)");
  CHECK(is_compatible(AR, I(as.A, "[x]")));
  CHECK_FALSE(is_compatible(AS, sideal(as, "[y + 1]")));
  auto fib = fibered_check(AR, AS, as.cover);
  CHECK_FALSE(fib.holds);
  CHECK(std::find(fib.witnesses.begin(), fib.witnesses.end(), sideal(as, "[y + 1]")) != fib.witnesses.end());
  auto mt = main_theorem_check(AR, AS, as.cover, as.T);
  CHECK_FALSE(mt.a);
  CHECK_FALSE(mt.b);
  CHECK_FALSE(mt.c);
  CHECK(mt.implications_hold);

  auto k = kummer();
  auto KR = pair_on(k.R, "x^2");
  auto KS = pair_on(k.cover.total(), "y^2*(y^2 - x)^2");
  CHECK(fibered_check(KR, KS, k.cover).holds);
  CHECK(quasi_fibered_check(KR, KS, k.cover).holds);
  auto km = main_theorem_check(KR, KS, k.cover, k.T);
  CHECK(km.a);
  CHECK(km.b);
  CHECK(km.c);
  CHECK(km.tau_images_match);
  CHECK(km.tau_inclusion);

  auto id = make(2, "t", "t + x");
  auto IR = pair_on(id.R, "x");
  auto IS = pair_on(id.cover.total(), "x*(t + x)");
  CHECK(fibered_check(IR, IS, id.cover).holds);
  auto im = main_theorem_check(IR, IS, id.cover, id.T);
  CHECK((im.a && im.b && im.c));
}

TEST_CASE("transposes of compatible ideals are compatible") {
  auto as = artin_schreier();
  auto AR = pair_on(as.R, "x + x^2");
  auto AS = pair_on(as.cover.total(), "(1 + x)*(y^2 + x*y + 1)");
  for (const auto& a : AR.lattice().radical_ideals()) CHECK(is_compatible(AS, transpose_T(as.cover, as.T, a)));
  auto k = kummer();
  auto KR = pair_on(k.R, "x^2");
  auto KS = pair_on(k.cover.total(), "y^2*(y^2 - x)^2");
  for (const auto& a : KR.lattice().radical_ideals()) CHECK(is_compatible(KS, transpose_T(k.cover, k.T, a)));
}

TEST_CASE("composed covers and transitivity") {
  Ring A(5, {"x"});
  QuotientRing R(A);
  auto c1 = make_simple_extension(R, "y", "y^2 - x");
  auto c2 = make_simple_extension(c1.total(), "z", "z^2 - y");
  auto T1 = trace_of(c1);
  auto T2 = trace_of(c2);
  auto comp = compose_covers(c1, c2, T1, T2);
  CHECK(comp.cover.degree() == 4);
  const Ring& U = c2.total().ambient();
  Ideal direct = transpose_T(comp.cover, comp.trace, I(A, "[x]"));
  CHECK(direct == c2.total().lift(I(U, "[z]")));
  // Trace of the tower equals the trace of the composite cover.
  CHECK(trace_of(comp.cover).values == comp.trace.values);
  std::mt19937_64 rng(testutil::seed() + 11);
  for (int k = 0; k < 50; ++k) {
    Polynomial g = Polynomial::constant(A, 1);
    for (int r = 0; r < 5; ++r)
      if (rng() % 2) g *= P(A, "x - " + std::to_string(r));
    Ideal a(A, {g});
    Ideal two = transpose_T(c2, T2, transpose_T(c1, T1, a));
    CHECK(two == transpose_T(comp.cover, comp.trace, a));
  }
  auto id = make_simple_extension(c1.total(), "w", "w - y");
  auto withid = compose_covers(c1, id, T1, trace_of(id));
  CHECK(withid.cover.degree() == 2);
  CHECK(transpose_T(withid.cover, withid.trace, I(A, "[x]")) ==
        id.total().lift(I(id.total().ambient(), "[y]")));
}
