#include <mutex>
#include <optional>

#include "frobcore/cartier.hpp"
#include "frobcore/errors.hpp"

namespace frobcore {

struct CartierPair::Cache {
  std::once_flag sigma_once;
  std::optional<Ideal> sigma;
  std::once_flag lattice_once;
  std::optional<CompatibleLattice> lattice;
};

CartierPair::CartierPair(QuotientRing ring, FrobeniusExponent e, Polynomial u)
    : ring_(std::move(ring)), exp_(e), u_(std::move(u)), cache_(std::make_shared<Cache>()) {
  if (u_.ring() != ring_.ambient()) throw RingMismatch("multiplier lives in another ring");
  if (exp_.p() != ring_.characteristic()) throw RingMismatch("Frobenius exponent over the wrong prime");
  Ideal Jq = bracket_power(ring_.defining(), q());
  for (const auto& g : ring_.defining().basis())
    if (!Jq.contains(u_ * g))
      throw NotCompatibleMultiplier("u*J is not contained in J^[q]: u = " + u_.to_string() +
                                    ", generator " + g.to_string());
}

CartierPair new_pair(const Ring& A, const Ideal& J, int e, const Polynomial& u) {
  return CartierPair(QuotientRing(A, J), FrobeniusExponent(A.characteristic(), e), u);
}

CartierPair CartierPair::power(int n) const {
  if (n < 1) throw std::invalid_argument("pair power must be positive");
  FrobeniusExponent en = exp_.times(n);  // guards q^n
  std::uint64_t k = 0, qi = 1;
  for (int i = 0; i < n; ++i) {
    k += qi;
    qi *= q();
  }
  // u is only determined modulo J^[q^n]; reducing modulo J would lose the map.
  return CartierPair(ring_, en, bracket_power(ring_.defining(), en.q()).reduce(u_.pow(k)));
}

CartierPair CartierPair::restrict_to(const Ideal& a) const {
  return CartierPair(QuotientRing(ambient(), ring_.lift(a)), exp_, u_);
}

Polynomial CartierPair::apply(const Polynomial& r) const {
  return ring_.reduce(standard_trace(u_ * r, q()));
}

const Ideal& CartierPair::sigma_one() const {
  std::call_once(cache_->sigma_once, [&] { cache_->sigma = sigma(*this, ring_.unit()); });
  return *cache_->sigma;
}

const CompatibleLattice& CartierPair::lattice() const {
  std::call_once(cache_->lattice_once, [&] { cache_->lattice = enumerate_compatible_primes(*this); });
  return *cache_->lattice;
}

std::string CartierPair::describe() const {
  return "(" + ring_.describe() + ", e=" + std::to_string(exp_.e()) + ", u=" + u_.to_string() + ")";
}

}  // namespace frobcore
