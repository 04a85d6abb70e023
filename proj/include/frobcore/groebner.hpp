#pragma once

#include <span>
#include <vector>

#include "frobcore/polynomial.hpp"

namespace frobcore {

struct GroebnerOptions {
  // Module mode: elements are vectors encoded by the monomial component.
  // Disables the coprime-leading-term criterion, which only holds for ideals.
  bool module = false;
};

// Reduced Groebner basis under ring.order(): monic, interreduced, sorted by
// increasing leading monomial. Buchberger with Gebauer-Moeller pair
// elimination and the sugar selection strategy.
std::vector<Polynomial> groebner_basis(const Ring& ring, std::span<const Polynomial> gens,
                                       GroebnerOptions opts = {});

// Fully reduced remainder of f modulo `basis` (any list of nonzero polynomials).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

}  // namespace frobcore
