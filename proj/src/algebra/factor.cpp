#include "frobcore/factor.hpp"

#include <algorithm>
#include <random>

#include "frobcore/errors.hpp"
#include "upoly.hpp"

namespace frobcore {

namespace {

using detail::UArith;
using detail::UPoly;

constexpr std::size_t kSubsetCap = 1u << 16;
constexpr std::int64_t kMaxKroneckerDegree = 4000;

struct Kronecker {
  std::vector<int> vars;              // support, in ring order
  std::vector<std::int64_t> weights;  // x_vars[k] -> x^weights[k]
  std::vector<std::int64_t> radix;    // D_k
};

UPoly to_univariate(const Polynomial& f, const Kronecker& K) {
  std::int64_t top = 0;
  for (const auto& t : f.terms()) {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < K.vars.size(); ++k) e += K.weights[k] * t.mono.exp[K.vars[k]];
    top = std::max(top, e);
  }
  UPoly u(static_cast<std::size_t>(top + 1), 0);
  for (const auto& t : f.terms()) {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < K.vars.size(); ++k) e += K.weights[k] * t.mono.exp[K.vars[k]];
    u[e] = f.ring().field().add(u[e], t.coeff);
  }
  UArith::trim(u);
  return u;
}

Polynomial from_univariate(const UPoly& u, const Ring& ring, const Kronecker& K) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (!u[e]) continue;
    Monomial m;
    std::int64_t rest = static_cast<std::int64_t>(e);
    for (std::size_t k = 0; k < K.vars.size(); ++k) {
      m.exp[K.vars[k]] = static_cast<std::int32_t>(rest % K.radix[k]);
      rest /= K.radix[k];
    }
    if (rest) return Polynomial(ring);  // cannot be the image of a divisor
    terms.push_back({m, u[e]});
  }
  return Polynomial::from_terms(ring, terms);
}

// A nontrivial divisor of f (f has no monomial content), or zero if f is irreducible.
Polynomial find_divisor(const Polynomial& f, std::mt19937_64& rng) {
  const Ring& ring = f.ring();
  Kronecker K;
  K.vars = f.support();
  std::int64_t w = 1;
  for (int v : K.vars) {
    K.weights.push_back(w);
    K.radix.push_back(f.degree_in(v) + 1);
    w *= f.degree_in(v) + 1;
    if (w > kMaxKroneckerDegree * 4)
      throw DecompositionOutOfScope("factor: Kronecker degree too large for " + f.to_string());
  }
  UArith U(ring.field());
  UPoly F = to_univariate(f, K);
  if (UArith::deg(F) > kMaxKroneckerDegree)
    throw DecompositionOutOfScope("factor: Kronecker degree too large for " + f.to_string());
  std::vector<UPoly> pieces;
  for (auto& [g, m] : U.factor(F, rng))
    for (int i = 0; i < m; ++i) pieces.push_back(g);
  const std::size_t k = pieces.size();
  if (K.vars.size() == 1) {
    if (k <= 1) return Polynomial(ring);
    return from_univariate(pieces[0], ring, K);
  }
  std::size_t tried = 0;
  // Subsets by increasing size; the complement of a divisor is a divisor, so
  // sizes up to k/2 suffice.
  for (std::size_t size = 1; 2 * size <= k; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    std::vector<UPoly> seen;
    for (;;) {
      UPoly G{1};
      for (auto i : idx) G = U.mul(G, pieces[i]);
      if (std::find(seen.begin(), seen.end(), G) == seen.end()) {
        seen.push_back(G);
        if (++tried > kSubsetCap)
          throw DecompositionOutOfScope("factor: recombination cap exceeded for " + f.to_string());
        Polynomial g = from_univariate(G, ring, K);
        if (!g.is_zero() && !g.is_constant()) {
          Polynomial q(ring);
          if (divide_exact(f, g, q) && !q.is_constant()) return g.monic();
        }
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return Polynomial(ring);
}

void factor_into(const Polynomial& f, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (f.is_constant()) return;
  Polynomial g = find_divisor(f, rng);
  if (g.is_zero()) {
    out.push_back(f.monic());
    return;
  }
  Polynomial q(f.ring());
  divide_exact(f, g, q);
  factor_into(g, rng, out);
  factor_into(q, rng, out);
}

}  // namespace

Factorization factor(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  const Ring& ring = f.ring();
  Factorization result;
  result.unit = f.leading_coeff();
  std::mt19937_64 rng(0x5eed);
  // Monomial content first.
  Monomial content = f.terms().front().mono;
  for (const auto& t : f.terms())
    for (int v = 0; v < kMaxVars; ++v) content.exp[v] = std::min(content.exp[v], t.mono.exp[v]);
  std::vector<Polynomial> irr;
  for (int v = 0; v < ring.nvars(); ++v)
    for (int e = 0; e < content.exp[v]; ++e) irr.push_back(Polynomial::variable(ring, v));
  Polynomial rest(ring);
  {
    std::vector<Term> t = f.terms();
    for (auto& term : t) term.mono = term.mono / content;
    rest = Polynomial::from_sorted_terms(ring, std::move(t)).monic();
  }
  factor_into(rest, rng, irr);
  const auto& ord = ring.order();
  std::sort(irr.begin(), irr.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c) return c < 0;
    return a.to_string() < b.to_string();
  });
  for (auto& g : irr) {
    if (!result.factors.empty() && result.factors.back().first == g)
      ++result.factors.back().second;
    else
      result.factors.emplace_back(g, 1);
  }
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (f.is_constant()) return false;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

Polynomial squarefree_part(const Polynomial& f) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  for (const auto& [g, m] : factor(f).factors) r = r * g;
  return r;
}

}  // namespace frobcore
