#include "frobcore/ideal.hpp"

#include <algorithm>
#include <functional>

#include "frobcore/errors.hpp"
#include "frobcore/groebner.hpp"

namespace frobcore {

Ideal::Ideal(const Ring& ring, std::span<const Polynomial> gens)
    : ring_(ring), gb_(groebner_basis(ring, gens)) {}

Polynomial Ideal::reduce(const Polynomial& f) const {
  if (f.ring() != ring_) throw RingMismatch("reduce: polynomial from " + f.ring().describe());
  return normal_form(f, gb_);
}

bool Ideal::contains(const Ideal& o) const {
  if (o.ring_ != ring_) throw RingMismatch("contains: ideals in different rings");
  for (const auto& g : o.gb_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& o) const {
  if (o.ring_ != ring_ || gb_.size() != o.gb_.size()) return false;
  for (std::size_t i = 0; i < gb_.size(); ++i)
    if (gb_[i] != o.gb_[i]) return false;
  return true;
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : gb_) d = std::max(d, g.total_degree());
  return d;
}

std::string Ideal::to_string() const {
  if (gb_.empty()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < gb_.size(); ++i) s += (i ? "; " : "") + gb_[i].to_string();
  return s + "]";
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw RingMismatch("sum of ideals in different rings");
  return add_generators(a, b.basis());
}

Ideal add_generators(const Ideal& a, std::span<const Polynomial> gens) {
  std::vector<Polynomial> all = a.basis();
  all.insert(all.end(), gens.begin(), gens.end());
  return Ideal(a.ring(), all);
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw RingMismatch("product of ideals in different rings");
  std::vector<Polynomial> prods;
  for (const auto& f : a.basis())
    for (const auto& g : b.basis()) prods.push_back(f * g);
  return Ideal(a.ring(), prods);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw RingMismatch("intersection of ideals in different rings");
  if (a.is_unit() || b.is_zero()) return b;
  if (b.is_unit() || a.is_zero()) return a;
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  const Ring& R = a.ring();
  Ring T = R.extend_front({R.fresh_name("tag")});
  Polynomial t = Polynomial::variable(T, 0);
  Polynomial one_minus_t = Polynomial::constant(T, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.basis()) gens.push_back(t * map_by_name(f, T));
  for (const auto& g : b.basis()) gens.push_back(one_minus_t * map_by_name(g, T));
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(T, gens))
    if (g.degree_in(0) == 0) out.push_back(map_by_name(g, R));
  return Ideal(R, out);
}

Ideal intersect_all(const Ring& ring, std::span<const Ideal> ideals) {
  Ideal acc = Ideal::unit(ring);
  for (const auto& I : ideals) acc = intersect(acc, I);
  return acc;
}

Ideal quotient(const Ideal& a, const Polynomial& f) {
  if (f.ring() != a.ring()) throw RingMismatch("quotient by a polynomial from another ring");
  if (f.is_zero() || a.contains(f)) return Ideal::unit(a.ring());
  Ideal meet = intersect(a, Ideal(a.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.basis()) {
    Polynomial q(a.ring());
    if (!divide_exact(g, f, q)) throw std::logic_error("quotient: inexact division");
    gens.push_back(q);
  }
  return Ideal(a.ring(), gens);
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw RingMismatch("quotient of ideals in different rings");
  Ideal acc = Ideal::unit(a.ring());
  for (const auto& g : b.basis()) {
    acc = intersect(acc, quotient(a, g));
    if (acc == a) break;  // cannot shrink below a
  }
  return acc;
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp op) {
  switch (op) {
    case IdealOp::Sum: return a + b;
    case IdealOp::Product: return a * b;
    case IdealOp::Intersection: return intersect(a, b);
    case IdealOp::Quotient: return quotient(a, b);
  }
  throw std::logic_error("unknown ideal operation");
}

bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

bool radical_membership(const Polynomial& f, const Ideal& I) {
  if (I.contains(f)) return true;
  const Ring& R = I.ring();
  Ring T = R.extend_front({R.fresh_name("rab")});
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis()) gens.push_back(map_by_name(g, T));
  gens.push_back(Polynomial::constant(T, 1) - Polynomial::variable(T, 0) * map_by_name(f, T));
  auto gb = groebner_basis(T, gens);
  return gb.size() == 1 && gb[0].is_one();
}

Ideal change_ring(const Ideal& I, const Ring& target) {
  if (I.ring() == target) return I;
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis()) gens.push_back(map_by_name(g, target));
  return Ideal(target, gens);
}

Ideal eliminate_to(const Ideal& I, const Ring& target) {
  const Ring& R = I.ring();
  std::vector<std::string> elim, keep;
  for (const auto& v : R.variables()) (target.index_of(v) ? keep : elim).push_back(v);
  if (elim.empty()) return change_ring(I, target);
  std::vector<std::string> names = elim;
  names.insert(names.end(), keep.begin(), keep.end());
  Ring E(R.characteristic(), names,
         MonomialOrder::block(static_cast<int>(names.size()), static_cast<int>(elim.size())));
  std::vector<Polynomial> gens;
  for (const auto& g : I.basis()) gens.push_back(map_by_name(g, E));
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(E, gens)) {
    bool free = true;
    for (std::size_t v = 0; v < elim.size(); ++v)
      if (g.degree_in(static_cast<int>(v)) > 0) free = false;
    if (free) out.push_back(map_by_name(g, target));
  }
  return Ideal(target, out);
}

int krull_dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  const int n = I.ring().nvars();
  std::vector<unsigned> supports;
  for (const auto& g : I.basis()) {
    unsigned s = 0;
    for (int v = 0; v < n; ++v)
      if (g.leading_monomial().exp[v]) s |= 1u << v;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned U = 0; U < (1u << n); ++U) {
    int size = __builtin_popcount(U);
    if (size <= best) continue;
    bool independent = true;
    for (unsigned s : supports)
      if ((s & ~U) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I, std::size_t cap) {
  const int n = I.ring().nvars();
  if (I.is_unit()) return std::vector<Monomial>{};
  std::vector<int> bound(n, -1);
  for (const auto& g : I.basis()) {
    const auto& m = g.leading_monomial();
    auto sup = Polynomial::monomial(I.ring(), m).support();
    if (sup.size() == 1) {
      int v = sup[0];
      if (bound[v] < 0 || m.exp[v] < bound[v]) bound[v] = m.exp[v];
    }
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0) return std::nullopt;
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> walk = [&](int v) {
    if (v == n) {
      for (const auto& g : I.basis())
        if (g.leading_monomial().divides(cur)) return;
      if (out.size() >= cap) throw BudgetExceeded("quotient algebra too large");
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur.exp[v] = e;
      walk(v + 1);
    }
    cur.exp[v] = 0;
  };
  walk(0);
  const auto& ord = I.ring().order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(b, a); });
  return out;
}

std::optional<std::size_t> vector_space_dimension(const Ideal& I) {
  auto sm = standard_monomials(I);
  if (!sm) return std::nullopt;
  return sm->size();
}

}  // namespace frobcore
