#include "frobcore/field.hpp"

#include <stdexcept>

namespace frobcore {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime_number(p) || p >= (1u << 16))
    throw std::invalid_argument("characteristic must be a prime below 65536, got " +
                                std::to_string(p));
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t p)
    : value_(PrimeField(p).reduce(value)), p_(p) {}

static void same_field(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw std::invalid_argument("field elements over different primes");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  same_field(p_, o.p_);
  return {static_cast<std::int64_t>(PrimeField(p_).add(value_, o.value_)), p_};
}
PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  same_field(p_, o.p_);
  return {static_cast<std::int64_t>(PrimeField(p_).sub(value_, o.value_)), p_};
}
PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  same_field(p_, o.p_);
  return {static_cast<std::int64_t>(PrimeField(p_).mul(value_, o.value_)), p_};
}
PrimeFieldElement PrimeFieldElement::operator-() const {
  return {static_cast<std::int64_t>(PrimeField(p_).neg(value_)), p_};
}
PrimeFieldElement PrimeFieldElement::inverse() const {
  return {static_cast<std::int64_t>(PrimeField(p_).inv(value_)), p_};
}
PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  return {static_cast<std::int64_t>(PrimeField(p_).pow(value_, e)), p_};
}

}  // namespace frobcore
