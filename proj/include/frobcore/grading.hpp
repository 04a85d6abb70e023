#pragma once

#include <string>
#include <vector>

#include "frobcore/covers.hpp"

namespace frobcore {

// A Z/m-grading of S = B/J by degrees of the variables of B.
class GradedStructure {
 public:
  // Throws PreconditionViolated if a defining relation is not homogeneous.
  GradedStructure(QuotientRing ring, int modulus, std::vector<int> degrees);

  const QuotientRing& ring() const { return ring_; }
  int modulus() const { return m_; }
  const std::vector<int>& degrees() const { return deg_; }

  int degree_of(const Monomial& mono) const;
  bool is_homogeneous(const Polynomial& f) const;
  bool is_homogeneous(const Ideal& b) const;  // generated by homogeneous elements

 private:
  QuotientRing ring_;
  int m_;
  std::vector<int> deg_;
};

Polynomial homogeneous_component(const GradedStructure& G, const Polynomial& f, int gamma);
// b_h: the sum of the pieces b meet S_gamma. Computed as the preimage of
// b[t]/(t^m - 1) under x_i -> t^(deg x_i) x_i, i.e. by eliminating t from
// (g(t^(m - deg) x)) + (t^m - 1).
Ideal homogeneous_part_ideal(const GradedStructure& G, const Ideal& b);

// p is a prime of S_0 given by degree-0 generators in S. Tame iff sqrt(pS) is
// homogeneous; exact for m a power of the characteristic.
bool veronese_tame_check(const GradedStructure& G, const Ideal& p);

// The fiber k(p)[t]/(t^q'' - u) is a field. Supported residue fields: finite
// (p maximal) and Frac(A/p) for p generated by variables.
bool cyclic_fiber_field_check(const QuotientRing& R, const Polynomial& u, std::uint64_t q2, const Ideal& p);

// pi_0 on a free cover graded with base variables in degree 0.
TraceFunctional pi0_trace(const FiniteCover& c, const GradedStructure& G);

}  // namespace frobcore
