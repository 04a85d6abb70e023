#include "frobcore/quotient.hpp"

#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"

namespace frobcore {

QuotientRing::QuotientRing(const Ring& ambient, Ideal defining)
    : ambient_(ambient), defining_(std::move(defining)) {
  if (defining_.ring() != ambient_) throw RingMismatch("defining ideal lives in another ring");
}

Ideal QuotientRing::ideal(std::span<const Polynomial> gens) const {
  return add_generators(defining_, gens);
}

Ideal QuotientRing::lift(const Ideal& a) const {
  if (a.ring() != ambient_) throw RingMismatch("lift: ideal from " + a.ring().describe());
  return a + defining_;
}

bool QuotientRing::is_domain_quotient() const { return is_prime(defining_); }

std::string QuotientRing::describe() const {
  if (defining_.is_zero()) return ambient_.describe();
  return ambient_.describe() + " / " + defining_.to_string();
}

}  // namespace frobcore
