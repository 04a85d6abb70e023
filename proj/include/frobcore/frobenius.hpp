#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frobcore/ideal.hpp"

namespace frobcore {

// q = p^e with the desk-scale guard q <= 2^20.
class FrobeniusExponent {
 public:
  static constexpr std::uint64_t kGuard = 1ULL << 20;

  FrobeniusExponent(std::uint32_t p, int e);
  std::uint32_t p() const { return p_; }
  int e() const { return e_; }
  std::uint64_t q() const { return q_; }
  FrobeniusExponent times(int n) const { return FrobeniusExponent(p_, e_ * n); }
  bool operator==(const FrobeniusExponent&) const = default;

 private:
  std::uint32_t p_;
  int e_;
  std::uint64_t q_;
};

// Throws std::invalid_argument unless q is a positive power of p.
void require_frobenius_power(std::uint32_t p, std::uint64_t q);

Ideal bracket_power(const Ideal& I, std::uint64_t q);

// f = sum_a g_a^q x^a over reduced exponents a (entries < q), ordered by a.
std::vector<std::pair<Monomial, Polynomial>> qth_power_decompose(const Polynomial& f, std::uint64_t q);

// Smallest J with I contained in J^[q]: generated by all g_a of the reduced GB.
Ideal frobenius_root(const Ideal& I, std::uint64_t q);

// Standard generator Phi of Hom(F^e_* A, A): x^a -> x^{(a-(q-1))/q} when every
// a_i = q-1 mod q, else 0.
Polynomial standard_trace(const Polynomial& f, std::uint64_t q);

}  // namespace frobcore
