#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobcore/ring.hpp"

namespace frobcore {

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse polynomial; terms are kept strictly decreasing in the ring order with
// nonzero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, int index);
  static Polynomial variable(const Ring& ring, const std::string& name);
  static Polynomial monomial(const Ring& ring, const Monomial& m, Coeff c = 1);
  // Accepts unsorted terms with repeats and zeros.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);
  // Caller guarantees strictly decreasing monomials and nonzero reduced coefficients.
  static Polynomial from_sorted_terms(const Ring& ring, std::vector<Term> terms) {
    Polynomial f(ring);
    f.terms_ = std::move(terms);
    return f;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;  // -1 for zero
  Coeff coefficient_of(const Monomial& m) const;
  // Variables that occur in some term.
  std::vector<int> support() const;

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  Polynomial pow(std::uint64_t k) const;
  // f^q for q a power of p: coefficients fixed, exponents times q.
  Polynomial frobenius(std::uint64_t q) const;
  Polynomial derivative(int var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text: "c*x1^a1*...*xn^an + ..." in decreasing order.
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

// Ring homomorphism defined by the images of the variables of f's ring.
Polynomial substitute(const Polynomial& f, const Ring& target, std::span<const Polynomial> images);
// Re-express f in `target`, matching variables by name. Throws RingMismatch if a
// variable of f's support is missing from target or the characteristics differ.
Polynomial map_by_name(const Polynomial& f, const Ring& target);
// Exact division; returns false if g does not divide f.
bool divide_exact(const Polynomial& f, const Polynomial& g, Polynomial& quotient);

}  // namespace frobcore
