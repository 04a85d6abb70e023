#pragma once

#include <vector>

#include "frobcore/ideal.hpp"

namespace frobcore {

// Minimal primes by recursive splitting. Supported: splitting along reducible
// Groebner generators, eliminating variables that occur linearly with constant
// coefficient, principal ideals, and zero-dimensional ideals (Seidenberg radical
// plus minimal polynomials of elements of the quotient algebra). Anything else
// throws DecompositionOutOfScope. The result is sorted and duplicate-free.
std::vector<Ideal> minimal_primes(const Ideal& I);

Ideal radical(const Ideal& I);
bool is_radical(const Ideal& I);
bool is_prime(const Ideal& I);

// Minimal polynomial of f in the finite-dimensional algebra ring/I, as a
// polynomial in a one-variable ring over the same field (variable "T").
// nullopt if I is not zero-dimensional.
std::optional<Polynomial> minimal_polynomial(const Polynomial& f, const Ideal& I);

}  // namespace frobcore
