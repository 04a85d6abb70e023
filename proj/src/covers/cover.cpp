#include <algorithm>

#include "frobcore/covers.hpp"
#include "frobcore/errors.hpp"
#include "frobcore/parse.hpp"

namespace frobcore {

FiniteCover::FiniteCover(QuotientRing base, QuotientRing total, int k, std::vector<Polynomial> basis)
    : base_(std::move(base)), total_(std::move(total)), k_(k), basis_(std::move(basis)) {
  const Ring& A = base_.ambient();
  const Ring& B = total_.ambient();
  if (B.nvars() != A.nvars() + k) throw RingMismatch("cover ring must extend the base ring by the new variables");
  for (int i = 0; i < A.nvars(); ++i)
    if (B.variable_name(k + i) != A.variable_name(i)) throw RingMismatch("cover ring must end with the base variables");
  for (const auto& b : basis_) {
    if (b.size() != 1 || b.leading_coeff() != 1) throw PreconditionViolated("cover basis must be monomials");
    keys_.push_back(b.leading_monomial());
  }
}

Polynomial FiniteCover::embed(const Polynomial& r) const { return map_by_name(r, total_.ambient()); }

Ideal FiniteCover::extend(const Ideal& a) const {
  std::vector<Polynomial> g;
  for (const auto& x : a.basis()) g.push_back(embed(x));
  return total_.ideal(g);
}

Ideal FiniteCover::contract(const Ideal& b) const {
  return base_.lift(eliminate_to(total_.lift(b), base_.ambient()));
}

std::vector<Polynomial> FiniteCover::coordinates(const Polynomial& s) const {
  const Ring& A = base_.ambient();
  std::vector<std::vector<Term>> parts(basis_.size());
  Polynomial nf = total_.reduce(map_by_name(s, total_.ambient()));
  for (const auto& t : nf.terms()) {
    Monomial key, rest;
    for (int i = 0; i < k_; ++i) key.exp[i] = t.mono.exp[i];
    for (int i = 0; i < A.nvars(); ++i) rest.exp[i] = t.mono.exp[k_ + i];
    auto it = std::find(keys_.begin(), keys_.end(), key);
    if (it == keys_.end()) throw std::logic_error("normal form left the cover basis: " + nf.to_string());
    parts[it - keys_.begin()].push_back({rest, t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(base_.reduce(Polynomial::from_terms(A, std::move(p))));
  return out;
}

std::vector<std::vector<Polynomial>> FiniteCover::multiplication_matrix(const Polynomial& s) const {
  const int m = degree();
  std::vector<std::vector<Polynomial>> M(m, std::vector<Polynomial>(m, Polynomial(base_.ambient())));
  for (int i = 0; i < m; ++i) {
    auto col = coordinates(map_by_name(s, total_.ambient()) * basis_[i]);
    for (int k = 0; k < m; ++k) M[k][i] = col[k];
  }
  return M;
}

std::string FiniteCover::describe() const {
  std::string b;
  for (std::size_t i = 0; i < basis_.size(); ++i) b += (i ? ", " : "") + basis_[i].to_string();
  return total_.describe() + " over " + base_.describe() + " with basis {" + b + "}";
}

Ring extension_ring(const QuotientRing& R, const std::string& var) {
  if (R.ambient().index_of(var)) throw PreconditionViolated("cover variable " + var + " already names a base variable");
  return R.ambient().extend_front({var}, MonomialOrder::Kind::Lex);
}

FiniteCover make_simple_extension(const QuotientRing& R, const Ring& B, const Polynomial& f) {
  const Ring& A = R.ambient();
  const int d = f.degree_in(0);
  if (d < 1) throw NotMonic("extension polynomial must have positive degree in " + B.variable_name(0));
  std::vector<Term> lead;
  for (const auto& t : f.terms())
    if (t.mono.exp[0] == d) {
      Monomial m;
      for (int i = 0; i < A.nvars(); ++i) m.exp[i] = t.mono.exp[i + 1];
      lead.push_back({m, t.coeff});
    }
  if (!R.reduce(Polynomial::from_terms(A, lead)).is_one())
    throw NotMonic("extension polynomial is not monic in " + B.variable_name(0) + ": " + f.to_string());
  std::vector<Polynomial> gens{f};
  for (const auto& g : R.defining().basis()) gens.push_back(map_by_name(g, B));
  std::vector<Polynomial> basis;
  for (int i = 0; i < d; ++i) basis.push_back(Polynomial::variable(B, 0).pow(i));
  return FiniteCover(R, QuotientRing(B, Ideal(B, gens)), 1, std::move(basis));
}

FiniteCover make_simple_extension(const QuotientRing& R, const std::string& var, const std::string& poly) {
  Ring B = extension_ring(R, var);
  return make_simple_extension(R, B, parse_polynomial(B, poly));
}

Polynomial TraceFunctional::apply(const FiniteCover& c, const Polynomial& s) const {
  auto coords = c.coordinates(s);
  Polynomial out(c.base().ambient());
  for (std::size_t i = 0; i < coords.size(); ++i) out += values[i] * coords[i];
  return c.base().reduce(out);
}

TraceFunctional trace_of(const FiniteCover& c) {
  TraceFunctional T;
  for (const auto& b : c.basis()) {
    Polynomial tr(c.base().ambient());
    for (int k = 0; k < c.degree(); ++k) tr += c.coordinates(b * c.basis()[k])[k];
    T.values.push_back(c.base().reduce(tr));
  }
  return T;
}

TraceFunctional trace_from_values(const FiniteCover& c, const std::vector<Polynomial>& values) {
  if (static_cast<int>(values.size()) != c.degree())
    throw PreconditionViolated("trace needs " + std::to_string(c.degree()) + " values, got " +
                               std::to_string(values.size()));
  TraceFunctional T;
  for (const auto& v : values) T.values.push_back(c.base().reduce(map_by_name(v, c.base().ambient())));
  return T;
}

}  // namespace frobcore
