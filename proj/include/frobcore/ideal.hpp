#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobcore/polynomial.hpp"

namespace frobcore {

// An ideal of a polynomial ring, stored by its reduced Groebner basis under the
// ring's order. Equality of ideals is equality of reduced bases.
class Ideal {
 public:
  Ideal(const Ring& ring, std::span<const Polynomial> gens);
  Ideal(const Ring& ring, std::initializer_list<Polynomial> gens)
      : Ideal(ring, std::span<const Polynomial>(gens.begin(), gens.size())) {}
  static Ideal zero(const Ring& ring) { return Ideal(ring, std::span<const Polynomial>{}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return gb_; }
  bool is_zero() const { return gb_.empty(); }
  bool is_unit() const { return gb_.size() == 1 && gb_[0].is_one(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& o) const;
  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  int max_degree() const;
  std::string to_string() const;  // "[g1; g2; ...]", "[0]" for the zero ideal

 private:
  Ring ring_;
  std::vector<Polynomial> gb_;
};

enum class IdealOp { Sum, Product, Intersection, Quotient };

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp op);
Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect_all(const Ring& ring, std::span<const Ideal> ideals);  // empty -> unit
Ideal quotient(const Ideal& a, const Ideal& b);
Ideal quotient(const Ideal& a, const Polynomial& f);
Ideal add_generators(const Ideal& a, std::span<const Polynomial> gens);

bool ideal_membership(const Polynomial& f, const Ideal& I);
bool radical_membership(const Polynomial& f, const Ideal& I);

// The ideal re-expressed in `target` (variables matched by name).
Ideal change_ring(const Ideal& I, const Ring& target);
// I intersected with the subring generated by the variables of `target`
// (matched by name), as an ideal of `target`.
Ideal eliminate_to(const Ideal& I, const Ring& target);

int krull_dimension(const Ideal& I);  // -1 for the unit ideal
// Standard monomials of a zero-dimensional ideal; nullopt if not zero-dimensional.
std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I, std::size_t cap = 200000);
std::optional<std::size_t> vector_space_dimension(const Ideal& I);

}  // namespace frobcore
