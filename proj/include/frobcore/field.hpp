#pragma once

#include <cstdint>
#include <string>

namespace frobcore {

using Coeff = std::uint32_t;

// Arithmetic in F_p. Values are kept reduced in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const { Coeff s = a + b; return s >= p_ ? s - p_ : s; }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff inv(Coeff a) const;  // throws std::domain_error on zero

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

// A field element bundled with its modulus.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint32_t p);

  Coeff value() const { return value_; }
  std::uint32_t modulus() const { return p_; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t e) const;
  bool operator==(const PrimeFieldElement& o) const = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  Coeff value_;
  std::uint32_t p_;
};

}  // namespace frobcore
