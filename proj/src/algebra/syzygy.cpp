#include "frobcore/syzygy.hpp"

#include "frobcore/errors.hpp"
#include "frobcore/groebner.hpp"

namespace frobcore {

namespace {

Polynomial encode(const PolyVector& v, int offset, const Ring& ring) {
  Polynomial out(ring);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].ring() != ring) throw RingMismatch("syzygy: entries from different rings");
    Monomial shift;
    shift.comp = offset + static_cast<int>(k);
    out += v[k].mul_term(shift, 1);
  }
  return out;
}

PolyVector decode(const Polynomial& f, int offset, int length, const Ring& ring) {
  std::vector<std::vector<Term>> parts(length);
  for (const auto& t : f.terms()) {
    Term u = t;
    u.mono.comp = 0;
    parts[t.mono.comp - offset].push_back(u);
  }
  PolyVector v;
  for (auto& p : parts) v.push_back(Polynomial::from_terms(ring, p));
  return v;
}

}  // namespace

std::vector<PolyVector> syzygy_kernel(const PolyMatrix& M, const Ideal& a) {
  const Ring& ring = a.ring();
  const int rows = static_cast<int>(M.size());
  if (rows == 0) throw std::invalid_argument("syzygy_kernel: empty matrix");
  const int cols = static_cast<int>(M[0].size());
  std::vector<Polynomial> gens;
  for (int i = 0; i < cols; ++i) {
    PolyVector v;
    for (int k = 0; k < rows; ++k) v.push_back(M[k][i]);
    for (int j = 0; j < cols; ++j) v.push_back(Polynomial::constant(ring, i == j ? 1 : 0));
    gens.push_back(encode(v, 0, ring));
  }
  for (const auto& g : a.basis())
    for (int k = 0; k < rows; ++k) {
      Monomial e;
      e.comp = k;
      gens.push_back(g.mul_term(e, 1));
    }
  GroebnerOptions opts;
  opts.module = true;
  std::vector<PolyVector> out;
  for (const auto& g : groebner_basis(ring, gens, opts))
    if (g.leading_monomial().comp >= rows) out.push_back(decode(g, rows, cols, ring));
  return out;
}

bool module_contains(const std::vector<PolyVector>& gens, const PolyVector& v) {
  bool all_zero = true;
  for (const auto& x : v) all_zero = all_zero && x.is_zero();
  if (all_zero) return true;
  if (gens.empty()) return false;
  const Ring& ring = v[0].ring();
  std::vector<Polynomial> enc;
  for (const auto& g : gens) enc.push_back(encode(g, 0, ring));
  GroebnerOptions opts;
  opts.module = true;
  auto gb = groebner_basis(ring, enc, opts);
  return normal_form(encode(v, 0, ring), gb).is_zero();
}

}  // namespace frobcore
