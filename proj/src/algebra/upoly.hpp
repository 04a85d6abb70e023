#pragma once

// Dense univariate polynomials over F_p, used by factoring and by the
// zero-dimensional splitting in decomposition.cpp.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "frobcore/field.hpp"

namespace frobcore::detail {

// Coefficients low to high, no trailing zeros (zero polynomial is empty).
using UPoly = std::vector<Coeff>;

class UArith {
 public:
  explicit UArith(const PrimeField& F) : F_(F) {}

  const PrimeField& field() const { return F_; }
  static int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
  static void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  UPoly add(const UPoly& a, const UPoly& b) const;
  UPoly sub(const UPoly& a, const UPoly& b) const;
  UPoly mul(const UPoly& a, const UPoly& b) const;
  UPoly scale(const UPoly& a, Coeff c) const;
  void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) const;
  UPoly mod(const UPoly& a, const UPoly& b) const;
  UPoly div(const UPoly& a, const UPoly& b) const;
  UPoly monic(const UPoly& a) const;
  UPoly gcd(UPoly a, UPoly b) const;  // monic
  UPoly derivative(const UPoly& a) const;
  UPoly powmod(UPoly a, std::uint64_t e, const UPoly& m) const;
  // a^(p^k) mod m by k successive p-th powers.
  UPoly frobmod(UPoly a, int k, const UPoly& m) const;

  // Monic irreducible factors with multiplicity (leading coefficient dropped).
  std::vector<std::pair<UPoly, int>> factor(const UPoly& f, std::mt19937_64& rng) const;

 private:
  std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f) const;
  std::vector<std::pair<UPoly, int>> distinct_degree(const UPoly& f) const;
  void equal_degree(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) const;

  PrimeField F_;
};

}  // namespace frobcore::detail
