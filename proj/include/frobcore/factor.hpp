#pragma once

#include <vector>

#include "frobcore/polynomial.hpp"

namespace frobcore {

struct Factorization {
  Coeff unit = 1;
  // Irreducible factors, monic in the ring order, with multiplicities.
  std::vector<std::pair<Polynomial, int>> factors;
};

// Multivariate factorization over F_p via Kronecker substitution, univariate
// Cantor-Zassenhaus and recombination by trial division. Deterministic.
// Throws DecompositionOutOfScope if the recombination search exceeds its cap.
Factorization factor(const Polynomial& f);
bool is_irreducible(const Polynomial& f);
// Product of the distinct irreducible factors (monic).
Polynomial squarefree_part(const Polynomial& f);

}  // namespace frobcore
