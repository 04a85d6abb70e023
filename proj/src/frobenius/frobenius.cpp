#include "frobcore/frobenius.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "frobcore/errors.hpp"

namespace frobcore {

FrobeniusExponent::FrobeniusExponent(std::uint32_t p, int e) : p_(p), e_(e), q_(1) {
  if (e < 1) throw std::invalid_argument("Frobenius exponent must be positive");
  for (int i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kGuard)
      throw BudgetExceeded("q = " + std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^20");
  }
}

void require_frobenius_power(std::uint32_t p, std::uint64_t q) {
  if (q < p) throw std::invalid_argument("q must be a positive power of p");
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a power of " + std::to_string(p));
  if (q > FrobeniusExponent::kGuard) throw BudgetExceeded("q exceeds 2^20");
}

Ideal bracket_power(const Ideal& I, std::uint64_t q) {
  require_frobenius_power(I.ring().characteristic(), q);
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis()) gens.push_back(g.frobenius(q));
  return Ideal(I.ring(), gens);
}

std::vector<std::pair<Monomial, Polynomial>> qth_power_decompose(const Polynomial& f, std::uint64_t q) {
  const Ring& ring = f.ring();
  require_frobenius_power(ring.characteristic(), q);
  const auto Q = static_cast<std::int64_t>(q);
  std::vector<std::pair<Monomial, std::vector<Term>>> parts;
  for (const auto& t : f.terms()) {
    Monomial rem, root;
    for (int v = 0; v < kMaxVars; ++v) {
      rem.exp[v] = static_cast<std::int32_t>(t.mono.exp[v] % Q);
      root.exp[v] = static_cast<std::int32_t>(t.mono.exp[v] / Q);
    }
    // Coefficient q-th roots are the identity on a prime field.
    auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& pr) { return pr.first == rem; });
    if (it == parts.end()) {
      parts.push_back({rem, {}});
      it = parts.end() - 1;
    }
    it->second.push_back({root, t.coeff});
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  for (auto& [a, terms] : parts) out.emplace_back(a, Polynomial::from_terms(ring, std::move(terms)));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first.exp < y.first.exp; });
  return out;
}

Ideal frobenius_root(const Ideal& I, std::uint64_t q) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis())
    for (auto& [a, ga] : qth_power_decompose(g, q)) gens.push_back(std::move(ga));
  return Ideal(I.ring(), gens);
}

Polynomial standard_trace(const Polynomial& f, std::uint64_t q) {
  const Ring& ring = f.ring();
  require_frobenius_power(ring.characteristic(), q);
  const auto Q = static_cast<std::int64_t>(q);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Term r{Monomial{}, t.coeff};
    bool hit = true;
    for (int v = 0; v < ring.nvars() && hit; ++v) {
      if ((t.mono.exp[v] + 1) % Q != 0) hit = false;
      r.mono.exp[v] = static_cast<std::int32_t>((t.mono.exp[v] + 1) / Q - 1);
    }
    if (hit) out.push_back(r);
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace frobcore
