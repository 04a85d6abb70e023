#include "frobcore/grading.hpp"

#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"

namespace frobcore {

GradedStructure::GradedStructure(QuotientRing ring, int modulus, std::vector<int> degrees)
    : ring_(std::move(ring)), m_(modulus), deg_(std::move(degrees)) {
  if (m_ < 1) throw PreconditionViolated("grading modulus must be positive");
  if (static_cast<int>(deg_.size()) != ring_.ambient().nvars())
    throw PreconditionViolated("grading needs one degree per variable");
  for (auto& d : deg_) d = ((d % m_) + m_) % m_;
  for (const auto& g : ring_.defining().basis())
    if (!is_homogeneous(g)) throw PreconditionViolated("relation " + g.to_string() + " is not homogeneous");
}

int GradedStructure::degree_of(const Monomial& mono) const {
  long d = 0;
  for (std::size_t i = 0; i < deg_.size(); ++i) d += static_cast<long>(deg_[i]) * mono.exp[i];
  return static_cast<int>(d % m_);
}

bool GradedStructure::is_homogeneous(const Polynomial& f) const {
  for (const auto& t : f.terms())
    if (degree_of(t.mono) != degree_of(f.leading_monomial())) return false;
  return true;
}

bool GradedStructure::is_homogeneous(const Ideal& b) const {
  return homogeneous_part_ideal(*this, b) == ring_.lift(b);
}

Polynomial homogeneous_component(const GradedStructure& G, const Polynomial& f, int gamma) {
  gamma = ((gamma % G.modulus()) + G.modulus()) % G.modulus();
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (G.degree_of(t.mono) == gamma) out.push_back(t);
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

Ideal homogeneous_part_ideal(const GradedStructure& G, const Ideal& b0) {
  const Ideal b = G.ring().lift(b0);
  if (G.modulus() == 1) return b;
  const Ring& B = G.ring().ambient();
  const std::string tn = B.fresh_name("t");
  Ring E = B.extend_front({tn}, MonomialOrder::Kind::Lex);
  Polynomial t = Polynomial::variable(E, 0);
  const int m = G.modulus();
  std::vector<Polynomial> images;
  for (int i = 0; i < B.nvars(); ++i)
    images.push_back(t.pow((m - G.degrees()[i]) % m) * Polynomial::variable(E, i + 1));
  std::vector<Polynomial> gens{t.pow(m) - Polynomial::constant(E, 1)};
  for (const auto& g : b.basis()) gens.push_back(substitute(g, E, images));
  return eliminate_to(Ideal(E, gens), B);
}

bool veronese_tame_check(const GradedStructure& G, const Ideal& p) {
  for (const auto& g : p.basis())
    if (!G.is_homogeneous(g) || G.degree_of(g.leading_monomial()) != 0)
      throw PreconditionViolated("prime of the degree-0 subring must have degree-0 generators: " + g.to_string());
  Ideal rad = radical(G.ring().lift(p));
  return homogeneous_part_ideal(G, rad) == rad;
}

bool cyclic_fiber_field_check(const QuotientRing& R, const Polynomial& u, std::uint64_t q2, const Ideal& p0) {
  if (q2 == 1) return true;
  require_frobenius_power(R.characteristic(), q2);
  const Ideal p = R.lift(p0);
  if (p.contains(u)) throw PreconditionViolated("u is not a unit at " + p.to_string());
  if (krull_dimension(p) == 0) return false;  // finite residue field is perfect
  // p generated by variables: k(p) = Frac(k[other variables]) and u maps to u|_{p-vars = 0}.
  const Ring& A = R.ambient();
  std::vector<Polynomial> images;
  for (int i = 0; i < A.nvars(); ++i) images.push_back(Polynomial::variable(A, i));
  for (const auto& g : p.basis()) {
    if (g.size() != 1 || g.total_degree() != 1)
      throw ResidueFieldUnsupported("residue field at " + p.to_string() + " is not supported");
    for (int i = 0; i < A.nvars(); ++i)
      if (g.leading_monomial().exp[i]) images[i] = Polynomial(A);
  }
  Polynomial ubar = substitute(u, A, images);
  const auto pc = static_cast<std::int32_t>(R.characteristic());
  for (const auto& t : ubar.terms())
    for (auto e : t.mono.exp)
      if (e % pc) return true;  // not a p-th power in k(p)
  return false;
}

TraceFunctional pi0_trace(const FiniteCover& c, const GradedStructure& G) {
  if (!(G.ring() == c.total())) throw RingMismatch("grading is not on the cover's total ring");
  for (int i = c.new_variables(); i < c.total().ambient().nvars(); ++i)
    if (G.degrees()[i] != 0) throw PreconditionViolated("base variables must have degree 0");
  int one = -1;
  for (int i = 0; i < c.degree(); ++i)
    if (c.basis()[i].is_one()) one = i;
  if (one < 0) throw PreconditionViolated("cover basis does not contain 1");
  std::vector<Polynomial> values;
  for (const auto& b : c.basis()) {
    auto coords = c.coordinates(homogeneous_component(G, b, 0));
    for (int i = 0; i < c.degree(); ++i)
      if (i != one && !coords[i].is_zero()) throw PreconditionViolated("degree-0 part of the cover exceeds the base");
    values.push_back(coords[one]);
  }
  return trace_from_values(c, values);
}

}  // namespace frobcore
