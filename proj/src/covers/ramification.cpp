#include <algorithm>

#include "frobcore/covers.hpp"
#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"
#include "frobcore/syzygy.hpp"

namespace frobcore {

namespace {

bool member(const std::vector<Ideal>& v, const Ideal& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void require_pairs(const CartierPair& R, const CartierPair& S, const FiniteCover& c) {
  if (!(R.ring() == c.base())) throw RingMismatch("base pair does not live on the cover's base ring");
  if (!(S.ring() == c.total())) throw RingMismatch("total pair does not live on the cover's total ring");
  if (R.q() != S.q()) throw PreconditionViolated("pairs on a cover must share the Frobenius exponent");
}

}  // namespace

Ideal image_T(const FiniteCover& c, const TraceFunctional& T, const Ideal& b) {
  std::vector<Polynomial> gens;
  const Ideal bl = c.total().lift(b);
  for (const auto& g : bl.basis())
    for (const auto& bi : c.basis()) gens.push_back(T.apply(c, g * bi));
  return c.base().ideal(gens);
}

Ideal unit_ideal_T(const FiniteCover& c, const TraceFunctional& T) { return c.base().ideal(T.values); }

Ideal transpose_T(const FiniteCover& c, const TraceFunctional& T, const Ideal& a) {
  const int m = c.degree();
  PolyMatrix G(m, PolyVector(m, Polynomial(c.base().ambient())));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) G[j][i] = T.apply(c, c.basis()[i] * c.basis()[j]);
  std::vector<Polynomial> gens;
  for (const auto& v : syzygy_kernel(G, c.base().lift(a))) {
    Polynomial s(c.total().ambient());
    for (int i = 0; i < m; ++i) s += c.embed(v[i]) * c.basis()[i];
    gens.push_back(s);
  }
  return c.total().ideal(gens);
}

TameCertificate is_tame_T_ramified(const FiniteCover& c, const TraceFunctional& T, const Ideal& p) {
  Ideal pt = transpose_T(c, T, p);
  Ideal rad = radical(c.extend(c.base().lift(p)));
  return {pt == rad, pt, rad};
}

bool residual_trace_nonzero(const FiniteCover& c, const TraceFunctional& T, const Ideal& p0, const Ideal& q0) {
  Ideal p = c.base().lift(p0);
  Ideal q = c.total().lift(q0);
  auto fiber = minimal_primes(c.extend(p));
  if (!member(fiber, q)) throw PreconditionViolated(q.to_string() + " is not a point over " + p.to_string());
  std::vector<Ideal> others;
  for (const auto& x : fiber)
    if (x != q) others.push_back(x);
  return !p.contains(image_T(c, T, intersect_all(c.total().ambient(), others)));
}

bool tame_by_residual_traces(const FiniteCover& c, const TraceFunctional& T, const Ideal& p0) {
  Ideal p = c.base().lift(p0);
  Ideal ext = c.extend(p);
  if (!p.contains(image_T(c, T, radical(ext)))) return false;
  for (const auto& q : minimal_primes(ext))
    if (!residual_trace_nonzero(c, T, p, q)) return false;
  return true;
}

bool commutes_with_frobenius(const FiniteCover& c, const TraceFunctional& T) {
  const std::uint64_t p = c.base().characteristic();
  for (std::size_t i = 0; i < c.basis().size(); ++i) {
    Polynomial lhs = T.apply(c, c.basis()[i].pow(p));
    Polynomial rhs = c.base().reduce(T.values[i].pow(p));
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_transposition_diagram(const CartierPair& R, const CartierPair& S, const FiniteCover& c,
                                 const TraceFunctional& T) {
  require_pairs(R, S, c);
  const Ring& A = c.base().ambient();
  const int n = A.nvars();
  const auto q = static_cast<std::int32_t>(R.q());
  Monomial m;
  for (;;) {
    for (const auto& b : c.basis()) {
      Polynomial s = c.embed(Polynomial::monomial(A, m)) * b;
      if (T.apply(c, S.apply(s)) != R.apply(T.apply(c, s))) return false;
    }
    int i = 0;
    while (i < n && ++m.exp[i] == q) m.exp[i++] = 0;
    if (i == n) return true;
  }
}

static FiberedReport fibered_impl(const CartierPair& R, const CartierPair& S, const FiniteCover& c, bool quasi) {
  require_pairs(R, S, c);
  const auto& LR = R.lattice();
  const auto& LS = S.lattice();
  const auto up = quasi ? LS.cspec() : LS.schpec();
  const auto down = quasi ? LR.cspec() : LR.schpec();
  const auto cspecR = LR.cspec();
  const std::string tag = quasi ? "CSpec" : "Schpec";
  FiberedReport rep;
  auto fail = [&](std::string msg, const Ideal& w) {
    rep.holds = false;
    rep.failures.push_back(std::move(msg));
    if (!member(rep.witnesses, w)) rep.witnesses.push_back(w);
  };
  for (const auto& q : up) {
    Ideal p = c.contract(q);
    if (!member(cspecR, p)) {
      fail("contraction of " + q.to_string() + " is " + p.to_string() + ", not in CSpec(R)", q);
      continue;
    }
    if (beta_prime(R, p) != c.contract(beta_prime(S, q)))
      fail("beta does not commute with contraction at " + q.to_string(), q);
  }
  for (const auto& p : down)
    for (const auto& q : minimal_primes(c.extend(p)))
      if (!member(up, q)) fail(q.to_string() + " lies over " + p.to_string() + " but is not in " + tag + "(S)", q);
  return rep;
}

FiberedReport fibered_check(const CartierPair& R, const CartierPair& S, const FiniteCover& c) {
  return fibered_impl(R, S, c, false);
}

FiberedReport quasi_fibered_check(const CartierPair& R, const CartierPair& S, const FiniteCover& c) {
  return fibered_impl(R, S, c, true);
}

MainTheoremReport main_theorem_check(const CartierPair& R, const CartierPair& S, const FiniteCover& c,
                                     const TraceFunctional& T) {
  require_pairs(R, S, c);
  MainTheoremReport rep;
  const auto& LR = R.lattice();
  const auto schR = LR.schpec();
  for (const auto& p : LR.cspec()) {
    bool tame = is_tame_T_ramified(c, T, p).tame;
    bool center = member(schR, p);
    rep.rows.push_back({p, center, tame});
    if (!tame) {
      rep.a = false;
      if (center) rep.c = false;
      rep.notes.push_back("not tame over " + p.to_string());
    }
  }
  auto fib = fibered_check(R, S, c);
  rep.fibered = fib.holds;
  for (auto& f : fib.failures) rep.notes.push_back(std::move(f));
  for (const auto& q : S.lattice().schpec()) {
    Ideal p = c.contract(q);
    if (!member(schR, p)) {
      rep.tau_images_match = false;
      rep.notes.push_back("tau comparison skipped at " + q.to_string() + ": contraction is not a center");
      continue;
    }
    Ideal tq = test_ideal_along(S, q).value;
    Ideal tp = test_ideal_along(R, p).value;
    Ideal img = image_T(c, T, tq);
    if (img != tp) {
      rep.tau_images_match = false;
      rep.notes.push_back("T(tau) at " + q.to_string() + " is " + img.to_string() + ", tau below is " + tp.to_string());
    }
    if (!tp.contains(img)) rep.tau_inclusion = false;
  }
  rep.b = rep.fibered && rep.tau_images_match;
  rep.implications_hold = (!rep.a || rep.b) && (!rep.b || rep.c);
  return rep;
}

ComposedCover compose_covers(const FiniteCover& c1, const FiniteCover& c2, const TraceFunctional& T1,
                             const TraceFunctional& T2) {
  if (!(c2.base() == c1.total())) throw RingMismatch("second cover is not built over the first cover's total ring");
  const Ring& U = c2.total().ambient();
  std::vector<Polynomial> basis;
  for (const auto& b2 : c2.basis())
    for (const auto& b1 : c1.basis()) basis.push_back(b2 * map_by_name(b1, U));
  FiniteCover c(c1.base(), c2.total(), c1.new_variables() + c2.new_variables(), basis);
  TraceFunctional T;
  for (const auto& b : basis) T.values.push_back(T1.apply(c1, T2.apply(c2, b)));
  return {std::move(c), std::move(T)};
}

FiberReport fiber_report(const FiniteCover& c, const TraceFunctional& T, const Ideal& p0) {
  Ideal p = c.base().lift(p0);
  auto kp = vector_space_dimension(p);
  if (!kp || *kp == 0) throw ResidueFieldUnsupported("fiber report needs a maximal prime: " + p.to_string());
  Ideal ext = c.extend(p);
  auto dim = [&](const Ideal& I) {
    auto d = vector_space_dimension(I);
    if (!d) throw ResidueFieldUnsupported("fiber over " + p.to_string() + " is not finite");
    return *d / *kp;
  };
  return {dim(ext), dim(radical(ext)), dim(transpose_T(c, T, p))};
}

}  // namespace frobcore
