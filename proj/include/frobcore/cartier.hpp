#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobcore/frobenius.hpp"
#include "frobcore/quotient.hpp"

namespace frobcore {

// Compatible primes found by enumeration. Every listed prime is compatible;
// `center[i]` marks the centers of F-purity (primes outside V(sigma(1))).
struct CompatibleLattice {
  std::vector<Ideal> primes;
  std::vector<bool> center;
  bool f_pure = true;
  // False in restricted mode: compatible primes inside V(sigma(1)) may be missing.
  bool cspec_complete = true;
  std::optional<Ideal> non_f_pure_locus;  // sigma(1), set when not F-pure

  std::vector<Ideal> cspec() const { return primes; }
  std::vector<Ideal> schpec() const;
  bool contains_prime(const Ideal& p) const;
  // Radical compatible ideals: all intersections of the listed primes.
  std::vector<Ideal> radical_ideals() const;
};

// (R, phi) with R = A/J and phi(F^e_* r) = Phi^e(F^e_*(u r)), Phi the standard
// generator of Hom(F^e_* A, A). Construction checks u J in J^[q].
class CartierPair {
 public:
  CartierPair(QuotientRing ring, FrobeniusExponent e, Polynomial u);

  const QuotientRing& ring() const { return ring_; }
  const Ring& ambient() const { return ring_.ambient(); }
  const FrobeniusExponent& exponent() const { return exp_; }
  std::uint64_t q() const { return exp_.q(); }
  const Polynomial& multiplier() const { return u_; }

  // phi^n: exponent n*e, multiplier u^(1 + q + ... + q^(n-1)).
  CartierPair power(int n) const;
  // The induced pair on A/a for a compatible a (same multiplier).
  CartierPair restrict_to(const Ideal& a) const;
  // phi(F^e_* r), reduced modulo J.
  Polynomial apply(const Polynomial& r) const;

  // Memoized sigma(1) and lattice; computed once per pair value.
  const Ideal& sigma_one() const;
  const CompatibleLattice& lattice() const;

  std::string describe() const;

 private:
  struct Cache;
  QuotientRing ring_;
  FrobeniusExponent exp_;
  Polynomial u_;
  std::shared_ptr<Cache> cache_;
};

CartierPair new_pair(const Ring& A, const Ideal& J, int e, const Polynomial& u);

// a^phi = (a^[q] : u) + J, the largest b with phi(F_* b) in a.
Ideal transpose_ideal(const CartierPair& P, const Ideal& a);
// a_phi = phi(F_* a) = (u a)^[1/q] + J.
Ideal image_ideal(const CartierPair& P, const Ideal& a);
bool is_compatible(const CartierPair& P, const Ideal& a);

// Stable value of a, a_phi, a_phi^2, ... for compatible a.
Ideal sigma(const CartierPair& P, const Ideal& a);
// Smallest compatible ideal containing a, and lambda_a = sum of images.
Ideal rho(const CartierPair& P, const Ideal& a);
Ideal lambda_ideal(const CartierPair& P, const Ideal& a);

bool is_f_pure(const CartierPair& P);
Ideal f_pure_locus(const CartierPair& P);  // sigma(1); non-F-pure locus is its zero set

enum class KappaStatus {
  Certified,  // compatible, inside a, provably the Cartier core
  Exact,      // provably the Cartier core but not inside a (phi degenerate along a)
  Heuristic,  // three equal consecutive partial intersections; not proven
};
struct KappaResult {
  Ideal value;
  KappaStatus status;
  int iterations;
  std::string route;  // "intersection", "unit", "lattice" or "stabilized"
};
std::string to_string(KappaStatus s);

// Cartier core: the intersection of the iterated transposes a^{phi^n}.
KappaResult kappa(const CartierPair& P, const Ideal& a);
Ideal beta_prime(const CartierPair& P, const Ideal& p);

CompatibleLattice enumerate_compatible_primes(const CartierPair& P);

enum class TauStatus { Certified, UpperBound };
struct TestIdealResult {
  Ideal value;
  TauStatus status;
  int candidates;
};
std::string to_string(TauStatus s);

// Smallest compatible ideal not inside any minimal prime of a.
TestIdealResult test_ideal_along(const CartierPair& P, const Ideal& a);
// tau_0 of the domain A/Q for a center Q, as rho(c0) with c0 = n0 * j0: n0 from
// ((Q^[q] + (u)) : (Q^[q] : Q)) + Q and j0 an h x h Jacobian minor (h = codim Q),
// both outside Q. Off V(c0) the quotient is regular and phi generates, so c0 lies
// in every nonzero compatible prime. Outside the F-pure case rho(c0^(q^k)) is
// iterated until two values agree and *heuristic is set.
Ideal test_ideal_of_domain(const CartierPair& P, const Ideal& Q, bool* heuristic = nullptr);

bool is_f_regular(const CartierPair& P);
Ideal cz_closure(const CartierPair& P, const Ideal& a);

}  // namespace frobcore
