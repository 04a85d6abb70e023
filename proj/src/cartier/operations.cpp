#include <algorithm>

#include "frobcore/cartier.hpp"
#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"

namespace frobcore {

namespace {

constexpr int kChainLimit = 200;
constexpr int kKappaDegreeCap = 256;

Ideal lifted(const CartierPair& P, const Ideal& a) { return P.ring().lift(a); }

}  // namespace

Ideal transpose_ideal(const CartierPair& P, const Ideal& a) {
  Ideal al = lifted(P, a);
  return quotient(bracket_power(al, P.q()), P.multiplier()) + P.ring().defining();
}

Ideal image_ideal(const CartierPair& P, const Ideal& a) {
  Ideal al = lifted(P, a);
  std::vector<Polynomial> ua;
  for (const auto& g : al.basis()) ua.push_back(P.multiplier() * g);
  return P.ring().lift(frobenius_root(Ideal(P.ambient(), ua), P.q()));
}

bool is_compatible(const CartierPair& P, const Ideal& a) {
  Ideal al = lifted(P, a);
  return al.contains(image_ideal(P, al));
}

Ideal sigma(const CartierPair& P, const Ideal& a) {
  Ideal cur = lifted(P, a);
  if (!cur.contains(image_ideal(P, cur)))
    throw PreconditionViolated("sigma: ideal is not compatible: " + a.to_string());
  for (int i = 0; i < kChainLimit; ++i) {
    Ideal next = image_ideal(P, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw BudgetExceeded("sigma: descending image chain did not stabilize");
}

Ideal rho(const CartierPair& P, const Ideal& a) {
  Ideal b = lifted(P, a);
  for (int i = 0; i < kChainLimit; ++i) {
    Ideal img = image_ideal(P, b);
    if (b.contains(img)) return b;  // b is compatible and was built inside rho_a
    b = b + img;
  }
  throw BudgetExceeded("rho: ascending chain did not stabilize");
}

Ideal lambda_ideal(const CartierPair& P, const Ideal& a) { return image_ideal(P, rho(P, a)); }

bool is_f_pure(const CartierPair& P) { return P.sigma_one().is_unit(); }

Ideal f_pure_locus(const CartierPair& P) { return P.sigma_one(); }

std::string to_string(KappaStatus s) {
  switch (s) {
    case KappaStatus::Certified: return "certified";
    case KappaStatus::Exact: return "exact";
    case KappaStatus::Heuristic: return "heuristic";
  }
  return "?";
}

// kappa from the lattice. For radical a: kappa commutes with finite
// intersections, kappa_p = 1 on V(sigma(1)), and otherwise kappa_p is the
// largest center contained in p.
static std::optional<Ideal> kappa_from_lattice(const CartierPair& P, const Ideal& a) {
  std::vector<Ideal> mins;
  bool radical_input = true;
  try {
    mins = minimal_primes(a);
    radical_input = intersect_all(P.ambient(), mins) == a;
  } catch (const DecompositionOutOfScope&) {
    return std::nullopt;
  }
  const CompatibleLattice* L = nullptr;
  try {
    L = &P.lattice();
  } catch (const Error&) {
    return std::nullopt;
  }
  const Ideal& s1 = P.sigma_one();
  std::vector<Ideal> cores;
  for (const auto& m : mins) {
    if (m.contains(s1)) {
      cores.push_back(Ideal::unit(P.ambient()));
      continue;
    }
    std::vector<const Ideal*> below;
    for (std::size_t i = 0; i < L->primes.size(); ++i)
      if (L->center[i] && m.contains(L->primes[i])) below.push_back(&L->primes[i]);
    const Ideal* top = nullptr;
    for (const Ideal* c : below) {
      bool is_max = true;
      for (const Ideal* d : below) is_max = is_max && c->contains(*d);
      if (is_max) top = c;
    }
    if (!top) return std::nullopt;
    cores.push_back(*top);
  }
  // kappa_a lies inside kappa of sqrt(a), so they agree once the latter is inside a.
  Ideal core = intersect_all(P.ambient(), cores);
  if (radical_input || a.contains(core)) return core;
  // For F-pure pairs every compatible ideal is an intersection of enumerated
  // primes, so the core is the sum of those inside a.
  if (!L->f_pure || !L->cspec_complete) return std::nullopt;
  core = P.ring().zero();
  for (const auto& c : L->radical_ideals())
    if (a.contains(c)) core = core + c;
  return core;
}

KappaResult kappa(const CartierPair& P, const Ideal& a0) {
  const Ideal a = lifted(P, a0);
  if (auto lat = kappa_from_lattice(P, a)) {
    // lat in a^phi is equivalent to phi(F_* lat) in a, which avoids the bracket power.
    if (!is_compatible(P, *lat) || !a.contains(image_ideal(P, *lat)))
      throw std::logic_error("kappa: lattice value inconsistent with the first transpose");
    return {*lat, a.contains(*lat) ? KappaStatus::Certified : KappaStatus::Exact, 0, "lattice"};
  }
  Ideal power = a;  // a^{phi^n}
  std::optional<Ideal> partial;
  std::vector<Ideal> history;
  int n = 0;
  std::uint64_t qn = 1;
  for (;;) {
    if (qn > FrobeniusExponent::kGuard / P.q()) break;
    qn *= P.q();
    ++n;
    power = transpose_ideal(P, power);  // a^{phi^n} = (a^{phi^{n-1}})^phi
    partial = partial ? intersect(*partial, power) : power;
    if (partial->is_unit()) return {*partial, KappaStatus::Exact, n, "unit"};
    if (a.contains(*partial) && is_compatible(P, *partial))
      return {*partial, KappaStatus::Certified, n, "intersection"};
    history.push_back(*partial);
    if (history.size() >= 3 && history[history.size() - 1] == history[history.size() - 2] &&
        history[history.size() - 2] == history[history.size() - 3])
      break;
    if (partial->max_degree() > kKappaDegreeCap || power.max_degree() > kKappaDegreeCap) break;
  }
  if (history.size() >= 3 && history[history.size() - 1] == history[history.size() - 3])
    return {*partial, KappaStatus::Heuristic, n, "stabilized"};
  throw BudgetExceeded("kappa: no certificate for " + a0.to_string() + " within the q^n <= 2^20 guard");
}

Ideal beta_prime(const CartierPair& P, const Ideal& p0) {
  Ideal p = lifted(P, p0);
  if (p.contains(P.sigma_one())) return p;
  return kappa(P, p).value;
}

Ideal cz_closure(const CartierPair& P, const Ideal& a) {
  std::vector<Ideal> betas;
  for (const auto& m : minimal_primes(lifted(P, a))) betas.push_back(beta_prime(P, m));
  return intersect_all(P.ambient(), betas);
}

bool is_f_regular(const CartierPair& P) {
  if (!is_f_pure(P)) return false;
  const auto& L = P.lattice();
  auto mins = minimal_primes(P.ring().defining());
  for (const auto& c : L.schpec())
    if (std::find(mins.begin(), mins.end(), c) == mins.end()) return false;
  return true;
}

}  // namespace frobcore
