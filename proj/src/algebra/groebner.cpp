#include "frobcore/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobcore/errors.hpp"

namespace frobcore {

namespace {

// p[from..] - c * m * g[1..]  (the leading term of g cancels the head of p).
std::vector<Term> sub_multiple(const std::vector<Term>& p, std::size_t from, const Polynomial& g,
                               const Monomial& m, Coeff c, const MonomialOrder& ord,
                               const PrimeField& F) {
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(p.size() - from + gt.size());
  Coeff negc = F.neg(c);
  std::size_t i = from, j = 1;
  while (i < p.size() && j < gt.size()) {
    Monomial gm = gt[j].mono * m;
    int cmp = ord.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, F.mul(gt[j].coeff, negc)});
      ++j;
    } else {
      Coeff s = F.add(p[i].coeff, F.mul(gt[j].coeff, negc));
      if (s) out.push_back({p[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < gt.size(); ++j) out.push_back({gt[j].mono * m, F.mul(gt[j].coeff, negc)});
  return out;
}

// Full reduction. `sugar` (if given) is raised per reduction step using `sugars`.
Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& basis,
                  const std::vector<int>* sugars, int* sugar) {
  const Ring& ring = f.ring();
  const auto& ord = ring.order();
  const auto& F = ring.field();
  std::vector<Term> p = f.terms();
  std::vector<Term> rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term t = p[head];
    std::size_t k = 0;
    for (; k < basis.size(); ++k)
      if (basis[k]->leading_monomial().divides(t.mono)) break;
    if (k == basis.size()) {
      rem.push_back(t);
      ++head;
      continue;
    }
    const Polynomial& g = *basis[k];
    Monomial m = t.mono / g.leading_monomial();
    Coeff c = g.leading_coeff() == 1 ? t.coeff : F.mul(t.coeff, F.inv(g.leading_coeff()));
    if (sugar && sugars) *sugar = std::max(*sugar, (*sugars)[k] + m.degree());
    p = sub_multiple(p, head + 1, g, m, c, ord, F);
    head = 0;
  }
  return Polynomial::from_sorted_terms(ring, std::move(rem));
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, GroebnerOptions opts) : ring_(ring), ord_(ring_.order()), opts_(opts) {}

  void add_input(const Polynomial& f) {
    if (f.ring() != ring_) throw RingMismatch("groebner_basis: generator in a different ring");
    int sugar = f.total_degree();
    Polynomial h = reduce_by_active(f, &sugar);
    if (!h.is_zero()) insert(h.monic(), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && ord_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      const Polynomial& f = polys_[pr.i];
      const Polynomial& g = polys_[pr.j];
      Polynomial s = f.mul_term(pr.lcm / f.leading_monomial(), 1) -
                     g.mul_term(pr.lcm / g.leading_monomial(), 1);
      int sugar = pr.sugar;
      Polynomial h = reduce_by_active(s, &sugar);
      if (!h.is_zero()) insert(h.monic(), sugar);
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> g;
    for (int k : active_) g.push_back(polys_[k]);
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord_.greater(b.leading_monomial(), a.leading_monomial());
    });
    // Active leading monomials are pairwise non-dividing; reduce tails.
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(&g[l]);
      const Term lead = g[k].terms().front();
      Polynomial tail = Polynomial::from_sorted_terms(
          ring_, std::vector<Term>(g[k].terms().begin() + 1, g[k].terms().end()));
      Polynomial rt = reduce(tail, others, nullptr, nullptr);
      std::vector<Term> terms{lead};
      terms.insert(terms.end(), rt.terms().begin(), rt.terms().end());
      g[k] = Polynomial::from_sorted_terms(ring_, std::move(terms));
    }
    return g;
  }

 private:
  Polynomial reduce_by_active(const Polynomial& f, int* sugar) {
    std::vector<const Polynomial*> basis;
    std::vector<int> sugars;
    for (int k : active_) {
      basis.push_back(&polys_[k]);
      sugars.push_back(sugar_[k]);
    }
    return reduce(f, basis, &sugars, sugar);
  }

  bool lcm_defined(int a, int b) const {
    return polys_[a].leading_monomial().comp == polys_[b].leading_monomial().comp;
  }
  bool coprime(int a, int b) const {
    return !opts_.module && polys_[a].leading_monomial().coprime(polys_[b].leading_monomial());
  }
  Monomial lcm_of(int a, int b) const {
    return lcm(polys_[a].leading_monomial(), polys_[b].leading_monomial());
  }
  int pair_sugar(int a, int b, const Monomial& l) const {
    int da = l.degree() - polys_[a].leading_monomial().degree();
    int db = l.degree() - polys_[b].leading_monomial().degree();
    return std::max(sugar_[a] + da, sugar_[b] + db);
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h, int sugar) {
    int hi = static_cast<int>(polys_.size());
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<int> c;
    for (int k : active_)
      if (lcm_defined(hi, k)) c.push_back(k);
    std::vector<int> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      int j = c[a];
      Monomial lj = lcm_of(hi, j);
      bool keep = coprime(hi, j);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (lcm_of(hi, c[b]).divides(lj)) keep = false;
        for (int k : d)
          if (keep && lcm_of(hi, k).divides(lj)) keep = false;
      }
      if (keep) d.push_back(j);
    }
    std::vector<Pair> fresh;
    for (int j : d)
      if (!coprime(hi, j)) {
        Monomial l = lcm_of(hi, j);
        fresh.push_back({j, hi, l, pair_sugar(j, hi, l)});
      }

    std::vector<Pair> kept;
    for (const Pair& pr : pairs_) {
      bool drop = false;
      if (lh.divides(pr.lcm)) {
        bool ih = lcm_defined(pr.i, hi), jh = lcm_defined(pr.j, hi);
        if (ih && jh && !(lcm_of(pr.i, hi) == pr.lcm) && !(lcm_of(pr.j, hi) == pr.lcm)) drop = true;
      }
      if (!drop) kept.push_back(pr);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(kept);

    std::vector<int> act;
    for (int k : active_)
      if (!lh.divides(polys_[k].leading_monomial())) act.push_back(k);
    act.push_back(hi);
    active_ = std::move(act);
  }

  Ring ring_;
  const MonomialOrder& ord_;
  GroebnerOptions opts_;
  std::vector<Polynomial> polys_;
  std::vector<int> sugar_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const Ring& ring, std::span<const Polynomial> gens,
                                       GroebnerOptions opts) {
  Buchberger bb(ring, opts);
  // Feed low-degree generators first; it keeps early reductions cheap.
  std::vector<const Polynomial*> order;
  for (const auto& f : gens)
    if (!f.is_zero()) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(), [&](const Polynomial* a, const Polynomial* b) {
    return ring.order().greater(b->leading_monomial(), a->leading_monomial());
  });
  for (const auto* f : order) bb.add_input(*f);
  bb.run();
  return bb.reduced_basis();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<const Polynomial*> b;
  for (const auto& g : basis) {
    if (g.ring() != f.ring()) throw RingMismatch("normal_form: basis in a different ring");
    if (!g.is_zero()) b.push_back(&g);
  }
  return reduce(f, b, nullptr, nullptr);
}

}  // namespace frobcore
