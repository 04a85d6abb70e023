#include "frobcore/decomposition.hpp"

#include <algorithm>
#include <random>

#include "frobcore/errors.hpp"
#include "frobcore/factor.hpp"
#include "frobcore/groebner.hpp"

namespace frobcore {

namespace {

constexpr int kMaxDepth = 64;
constexpr int kElementTries = 40;

// Coordinates of a normal form in the standard-monomial basis.
std::vector<Coeff> coordinates(const Polynomial& nf, const std::vector<Monomial>& basis) {
  std::vector<Coeff> v(basis.size(), 0);
  for (const auto& t : nf.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.mono);
    if (it == basis.end()) throw std::logic_error("normal form outside the staircase");
    v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return v;
}

// Monic minimal polynomial coefficients (low to high) of f acting on 1 in ring/I.
std::vector<Coeff> krylov_minpoly(const Polynomial& f, const Ideal& I, const std::vector<Monomial>& basis) {
  const auto& F = I.ring().field();
  const std::size_t d = basis.size();
  // Echelon rows: (vector, combination of powers that produced it).
  std::vector<std::vector<Coeff>> rows, combos;
  std::vector<std::size_t> pivots;
  Polynomial power = I.reduce(Polynomial::constant(I.ring(), 1));
  Polynomial fr = I.reduce(f);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Coeff> v = coordinates(power, basis);
    std::vector<Coeff> combo(d + 1, 0);
    combo[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Coeff c = v[pivots[r]];
      if (!c) continue;
      for (std::size_t j = 0; j < d; ++j) v[j] = F.sub(v[j], F.mul(c, rows[r][j]));
      for (std::size_t j = 0; j <= d; ++j) combo[j] = F.sub(combo[j], F.mul(c, combos[r][j]));
    }
    std::size_t piv = d;
    for (std::size_t j = 0; j < d; ++j)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv == d) {
      combo.resize(k + 1);
      return combo;  // sum combo[j] f^j = 0 with combo[k] = 1
    }
    Coeff inv = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& x : combo) x = F.mul(x, inv);
    rows.push_back(v);
    combos.push_back(combo);
    pivots.push_back(piv);
    power = I.reduce(power * fr);
  }
  throw std::logic_error("krylov_minpoly: no dependency found");
}

Polynomial univariate_in(const std::vector<Coeff>& c, const Ring& T) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    Monomial m;
    m.exp[0] = static_cast<std::int32_t>(i);
    terms.push_back({m, c[i]});
  }
  return Polynomial::from_terms(T, terms);
}

// h(f) reduced modulo I (Horner).
Polynomial evaluate_at(const Polynomial& h, const Polynomial& f, const Ideal& I) {
  Polynomial acc(I.ring());
  for (int e = h.total_degree(); e >= 0; --e) {
    Monomial m;
    m.exp[0] = e;
    acc = I.reduce(acc * f + Polynomial::constant(I.ring(), h.coefficient_of(m)));
  }
  return acc;
}

class Decomposer {
 public:
  std::vector<Ideal> run(const Ideal& I, int depth) {
    if (depth > kMaxDepth) throw DecompositionOutOfScope("decomposition recursion too deep");
    if (I.is_unit()) return {};
    if (I.is_zero()) return {I};
    if (auto r = eliminate_linear(I, depth)) return *r;
    if (auto r = split_by_factors(I, depth)) return *r;
    if (krull_dimension(I) == 0) return zero_dimensional(I, depth);
    if (I.basis().size() == 1) return {I};  // irreducible generator
    throw DecompositionOutOfScope("cannot certify primality of " + I.to_string());
  }

 private:
  std::optional<std::vector<Ideal>> eliminate_linear(const Ideal& I, int depth) {
    const Ring& R = I.ring();
    for (std::size_t gi = 0; gi < I.basis().size(); ++gi) {
      const Polynomial& g = I.basis()[gi];
      for (int v = 0; v < R.nvars(); ++v) {
        if (g.degree_in(v) != 1) continue;
        Monomial xv;
        xv.exp[v] = 1;
        bool clean = true;
        Coeff c = 0;
        std::vector<Term> rest;
        for (const auto& t : g.terms()) {
          if (t.mono == xv) {
            c = t.coeff;
          } else if (t.mono.exp[v]) {
            clean = false;
            break;
          } else {
            rest.push_back(t);
          }
        }
        if (!clean || !c) continue;
        // v = -(rest)/c
        Polynomial h = Polynomial::from_terms(R, rest).scale(R.field().neg(R.field().inv(c)));
        std::vector<std::string> names;
        for (int w = 0; w < R.nvars(); ++w)
          if (w != v) names.push_back(R.variable_name(w));
        Ring sub(R.characteristic(), names);
        std::vector<Polynomial> images;
        for (int w = 0; w < R.nvars(); ++w) images.push_back(w == v ? h : Polynomial::variable(R, w));
        std::vector<Polynomial> gens;
        for (std::size_t k = 0; k < I.basis().size(); ++k)
          if (k != gi) gens.push_back(map_by_name(substitute(I.basis()[k], R, images), sub));
        std::vector<Ideal> out;
        for (const Ideal& P : run(Ideal(sub, gens), depth + 1)) {
          std::vector<Polynomial> back;
          for (const auto& q : P.basis()) back.push_back(map_by_name(q, R));
          back.push_back(g);
          out.emplace_back(R, back);
        }
        return out;
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<Ideal>> split_by_factors(const Ideal& I, int depth) {
    std::vector<const Polynomial*> order;
    for (const auto& g : I.basis()) order.push_back(&g);
    std::stable_sort(order.begin(), order.end(),
                     [](const Polynomial* a, const Polynomial* b) { return a->size() < b->size(); });
    for (const Polynomial* g : order) {
      auto fac = factor(*g);
      if (fac.factors.size() == 1 && fac.factors[0].second == 1) continue;
      std::vector<Ideal> out;
      for (const auto& [h, m] : fac.factors) {
        auto part = run(add_generators(I, std::vector<Polynomial>{h}), depth + 1);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    return std::nullopt;
  }

  std::vector<Ideal> zero_dimensional(const Ideal& I, int depth) {
    const Ring& R = I.ring();
    Ring T(R.characteristic(), {"T"});
    auto basis = *standard_monomials(I);
    // Seidenberg: adjoin squarefree parts of the variables' minimal polynomials.
    std::vector<Polynomial> extra;
    for (int v = 0; v < R.nvars(); ++v) {
      Polynomial x = Polynomial::variable(R, v);
      Polynomial mu = univariate_in(krylov_minpoly(x, I, basis), T);
      auto fac = factor(mu);
      if (fac.factors.size() > 1) return split_along(I, x, fac, depth);
      if (fac.factors[0].second > 1) extra.push_back(evaluate_at(fac.factors[0].first, x, I));
    }
    if (!extra.empty()) return run(add_generators(I, extra), depth + 1);
    // I is radical; look for an element whose minimal polynomial has full degree.
    std::mt19937_64 rng(0xdec0de ^ basis.size());
    std::uniform_int_distribution<Coeff> coef(0, R.characteristic() - 1);
    for (int attempt = 0; attempt < kElementTries; ++attempt) {
      Polynomial ell(R);
      for (const auto& m : basis)
        if (attempt >= 10 || m.degree() <= 1) ell += Polynomial::monomial(R, m, coef(rng));
      if (ell.is_constant()) continue;
      auto c = krylov_minpoly(ell, I, basis);
      Polynomial mu = univariate_in(c, T);
      auto fac = factor(mu);
      if (fac.factors.size() > 1) return split_along(I, ell, fac, depth);
      if (c.size() - 1 == basis.size()) return {I};  // ring/I is a field
    }
    throw DecompositionOutOfScope("no primitive element found for " + I.to_string());
  }

  std::vector<Ideal> split_along(const Ideal& I, const Polynomial& ell, const Factorization& fac, int depth) {
    std::vector<Ideal> out;
    for (const auto& [h, m] : fac.factors) {
      auto part = run(add_generators(I, std::vector<Polynomial>{evaluate_at(h, ell, I)}), depth + 1);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
};

}  // namespace

std::vector<Ideal> minimal_primes(const Ideal& I) {
  auto all = Decomposer().run(I, 0);
  std::vector<Ideal> unique;
  for (auto& P : all)
    if (std::find(unique.begin(), unique.end(), P) == unique.end()) unique.push_back(P);
  std::vector<Ideal> minimal;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < unique.size() && keep; ++j)
      if (i != j && unique[i].contains(unique[j])) keep = false;
    if (keep) minimal.push_back(unique[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Ideal& a, const Ideal& b) {
    int da = krull_dimension(a), db = krull_dimension(b);
    if (da != db) return da > db;
    return a.to_string() < b.to_string();
  });
  return minimal;
}

Ideal radical(const Ideal& I) {
  auto primes = minimal_primes(I);
  return intersect_all(I.ring(), primes);
}

bool is_radical(const Ideal& I) { return radical(I) == I; }

bool is_prime(const Ideal& I) {
  auto primes = minimal_primes(I);
  return primes.size() == 1 && primes[0] == I;
}

std::optional<Polynomial> minimal_polynomial(const Polynomial& f, const Ideal& I) {
  auto basis = standard_monomials(I);
  if (!basis) return std::nullopt;
  Ring T(I.ring().characteristic(), {"T"});
  if (basis->empty()) return Polynomial::constant(T, 1);
  return univariate_in(krylov_minpoly(f, I, *basis), T);
}

}  // namespace frobcore
