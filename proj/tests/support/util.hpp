#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobcore/ideal.hpp"
#include "frobcore/parse.hpp"

namespace testutil {

using namespace frobcore;

inline Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(r, s); }
inline Ideal I(const Ring& r, const std::string& s) { return Ideal(r, parse_polynomial_list(r, s)); }

// Fixed default seed; override with FROBCORE_SEED for exploratory runs.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("FROBCORE_SEED")) return std::stoull(s);
  return 20240611ULL;
}

// Random polynomial with at most `terms` terms of total degree <= maxdeg.
inline Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int maxdeg, int terms) {
  std::vector<Term> out;
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::uniform_int_distribution<int> var(0, r.nvars() - 1);
  std::uniform_int_distribution<Coeff> coef(1, r.characteristic() - 1);
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m.exp[var(rng)] += 1;
    out.push_back({m, coef(rng)});
  }
  return Polynomial::from_terms(r, out);
}

inline Ideal random_ideal(std::mt19937_64& rng, const Ring& r, int ngens, int maxdeg, int terms) {
  std::vector<Polynomial> g;
  for (int i = 0; i < ngens; ++i) g.push_back(random_poly(rng, r, maxdeg, terms));
  return Ideal(r, g);
}

}  // namespace testutil
