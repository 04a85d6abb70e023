#pragma once

#include <vector>

#include "frobcore/ideal.hpp"

namespace frobcore {

using PolyVector = std::vector<Polynomial>;
using PolyMatrix = std::vector<PolyVector>;  // row-major

// Generators of {c : M c = 0 mod a in every row}, from a position-over-term
// module Groebner basis of the columns (M_i, e_i) and the vectors a*e_k.
std::vector<PolyVector> syzygy_kernel(const PolyMatrix& M, const Ideal& a);

// Membership of v in the submodule generated by `gens` (same ring, same length).
bool module_contains(const std::vector<PolyVector>& gens, const PolyVector& v);

}  // namespace frobcore
