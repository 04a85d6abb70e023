#pragma once

#include <span>
#include <string>
#include <vector>

#include "frobcore/ideal.hpp"

namespace frobcore {

// R = A/J. Ideals of R are always handled as their preimages in A (containing J).
class QuotientRing {
 public:
  explicit QuotientRing(const Ring& ambient) : ambient_(ambient), defining_(Ideal::zero(ambient)) {}
  QuotientRing(const Ring& ambient, Ideal defining);

  const Ring& ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }
  std::uint32_t characteristic() const { return ambient_.characteristic(); }

  // Preimage of the R-ideal generated by the images of gens.
  Ideal ideal(std::span<const Polynomial> gens) const;
  Ideal ideal(std::initializer_list<Polynomial> gens) const {
    return ideal(std::span<const Polynomial>(gens.begin(), gens.size()));
  }
  // Makes an ambient ideal into an R-ideal by adding J.
  Ideal lift(const Ideal& a) const;
  Ideal zero() const { return defining_; }
  Ideal unit() const { return Ideal::unit(ambient_); }
  Polynomial reduce(const Polynomial& f) const { return defining_.reduce(f); }
  bool is_domain_quotient() const;  // J prime

  std::string describe() const;
  bool operator==(const QuotientRing& o) const {
    return ambient_ == o.ambient_ && defining_ == o.defining_;
  }

 private:
  Ring ambient_;
  Ideal defining_;
};

}  // namespace frobcore
