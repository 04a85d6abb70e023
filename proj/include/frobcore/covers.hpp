#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcore/cartier.hpp"
#include "frobcore/quotient.hpp"

namespace frobcore {

// A free extension R = A/J_R -> S = B/J_S, where B prepends k new variables to A
// and the basis b_i are monomials in the new variables (the staircase of J_S).
class FiniteCover {
 public:
  const QuotientRing& base() const { return base_; }
  const QuotientRing& total() const { return total_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  int degree() const { return static_cast<int>(basis_.size()); }
  int new_variables() const { return k_; }

  // theta: R -> S on ambient representatives.
  Polynomial embed(const Polynomial& r) const;
  Ideal extend(const Ideal& a) const;    // a*S, as a preimage in B
  Ideal contract(const Ideal& b) const;  // b meets R, as a preimage in A
  // Coordinates of s in the basis, each reduced modulo J_R.
  std::vector<Polynomial> coordinates(const Polynomial& s) const;
  // Multiplication by s as an m x m matrix over A (column i = coordinates of s*b_i).
  std::vector<std::vector<Polynomial>> multiplication_matrix(const Polynomial& s) const;

  std::string describe() const;

  // Plumbing for the constructors below; basis monomials must be the staircase of J_S.
  FiniteCover(QuotientRing base, QuotientRing total, int k, std::vector<Polynomial> basis);

 private:
  QuotientRing base_;
  QuotientRing total_;
  int k_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> keys_;  // leading monomial of each basis element
};

// S = R[var]/(f) with f monic in var of degree >= 1; f is parsed in the
// ring with var prepended. Throws NotMonic.
FiniteCover make_simple_extension(const QuotientRing& R, const std::string& var, const std::string& poly);
FiniteCover make_simple_extension(const QuotientRing& R, const Ring& B, const Polynomial& f);
// The ring B = var + variables of R, with var eliminable.
Ring extension_ring(const QuotientRing& R, const std::string& var);

// An R-linear functional S -> R given by its values on the basis.
struct TraceFunctional {
  std::vector<Polynomial> values;  // in A, reduced modulo J_R
  Polynomial apply(const FiniteCover& c, const Polynomial& s) const;
};

TraceFunctional trace_of(const FiniteCover& c);
TraceFunctional trace_from_values(const FiniteCover& c, const std::vector<Polynomial>& values);

// b_T: generated by T(g*b_i) over generators g of b.
Ideal image_T(const FiniteCover& c, const TraceFunctional& T, const Ideal& b);
// a^T: the largest S-ideal b with T(b) inside a.
Ideal transpose_T(const FiniteCover& c, const TraceFunctional& T, const Ideal& a);
Ideal unit_ideal_T(const FiniteCover& c, const TraceFunctional& T);  // 1_T = T(S)

struct TameCertificate {
  bool tame;
  Ideal transpose;  // p^T
  Ideal radical;    // sqrt(pS)
};
TameCertificate is_tame_T_ramified(const FiniteCover& c, const TraceFunctional& T, const Ideal& p);
// T applied to the intersection of the other points of the fiber over p is not inside p.
bool residual_trace_nonzero(const FiniteCover& c, const TraceFunctional& T, const Ideal& p, const Ideal& q);
// Oracle for tameness: T(sqrt(pS)) in p and every residual trace nonzero.
bool tame_by_residual_traces(const FiniteCover& c, const TraceFunctional& T, const Ideal& p);
bool commutes_with_frobenius(const FiniteCover& c, const TraceFunctional& T);

// T(psi(F_* s)) = phi(F_* T(s)) on the generators F_*(m b_i), m with exponents < q.
bool check_transposition_diagram(const CartierPair& R, const CartierPair& S, const FiniteCover& c,
                                 const TraceFunctional& T);

struct FiberedReport {
  bool holds = true;
  // One line per failure, naming the condition and the prime.
  std::vector<std::string> failures;
  std::vector<Ideal> witnesses;  // primes of S where a condition fails
};
// Centers upstairs are exactly the primes over centers downstairs. The quasi
// version uses CSpec in place of Schpec.
FiberedReport fibered_check(const CartierPair& R, const CartierPair& S, const FiniteCover& c);
FiberedReport quasi_fibered_check(const CartierPair& R, const CartierPair& S, const FiniteCover& c);

struct MainTheoremRow {
  Ideal prime;  // of R
  bool in_schpec;
  bool tame;
};
struct MainTheoremReport {
  bool a = true;  // tame over CSpec(R)
  bool b = true;  // fibered, and tau_p(R) = T(tau_q(S)) over every center q of S
  bool c = true;  // tame over Schpec(R)
  bool fibered = true;
  bool tau_images_match = true;
  bool tau_inclusion = true;  // T(tau_q) inside tau_p, expected unconditionally
  bool implications_hold = true;
  std::vector<MainTheoremRow> rows;
  std::vector<std::string> notes;
};
MainTheoremReport main_theorem_check(const CartierPair& R, const CartierPair& S, const FiniteCover& c,
                                     const TraceFunctional& T);

struct ComposedCover {
  FiniteCover cover;
  TraceFunctional trace;
};
// R -> S -> U, with c2 built over c1.total(). The trace is T1 o T2.
ComposedCover compose_covers(const FiniteCover& c1, const FiniteCover& c2, const TraceFunctional& T1,
                             const TraceFunctional& T2);

struct FiberReport {
  std::size_t mu, rho, eta;
};
// Fiber dimensions over kappa(p) at a maximal prime p of R.
FiberReport fiber_report(const FiniteCover& c, const TraceFunctional& T, const Ideal& p);

}  // namespace frobcore
