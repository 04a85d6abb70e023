#include "frobcore/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobcore/errors.hpp"

namespace frobcore {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) throw RingMismatch("operands live in different rings: " + a.describe() + " vs " + b.describe());
}

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  Polynomial f(ring);
  Coeff v = ring.field().reduce(c);
  if (v) f.terms_.push_back({Monomial{}, v});
  return f;
}

Polynomial Polynomial::variable(const Ring& ring, int index) {
  if (index < 0 || index >= ring.nvars()) throw std::out_of_range("variable index");
  Monomial m;
  m.exp[index] = 1;
  return monomial(ring, m, 1);
}

Polynomial Polynomial::variable(const Ring& ring, const std::string& name) {
  auto i = ring.index_of(name);
  if (!i) throw UnknownName("no variable '" + name + "' in " + ring.describe());
  return variable(ring, *i);
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m, Coeff c) {
  Polynomial f(ring);
  c %= ring.characteristic();
  if (c) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  const auto& ord = ring.order();
  const auto& F = ring.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Polynomial f(ring);
  for (auto& t : terms) {
    t.coeff %= F.characteristic();
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = F.add(f.terms_.back().coeff, t.coeff);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (t.coeff) {
      f.terms_.push_back(t);
    }
  }
  return f;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
  return d;
}

Coeff Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

std::vector<int> Polynomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < ring_.nvars(); ++i)
    for (const auto& t : terms_)
      if (t.mono.exp[i]) {
        out.push_back(i);
        break;
      }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_[0].coeff == 1) return *this;
  return scale(ring_.field().inv(terms_[0].coeff));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_.field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const auto& ord = ring_.order();
  const auto& F = ring_.field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  const auto& F = ring_.field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scale(Coeff c) const {
  const auto& F = ring_.field();
  c %= F.characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  const auto& F = ring_.field();
  c %= F.characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Monomial orders are multiplicative, so the order of terms is preserved.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_)
    for (auto& e : t.mono.exp) e = static_cast<std::int32_t>(e * static_cast<std::int64_t>(q));
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  // Base-p digits of k: f^k = prod (f^{p^i})^{d_i}, each f^{p^i} computed termwise.
  const std::uint64_t p = ring_.characteristic();
  Polynomial result = constant(ring_, 1);
  Polynomial frob = *this;
  while (k) {
    std::uint64_t d = k % p;
    for (std::uint64_t i = 0; i < d; ++i) result = result * frob;
    k /= p;
    if (k) frob = frob.frobenius(p);
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  const auto& F = ring_.field();
  for (const auto& t : terms_) {
    if (t.mono.exp[var] == 0) continue;
    Term d = t;
    d.coeff = F.mul(t.coeff, F.reduce(t.mono.exp[var]));
    d.mono.exp[var] -= 1;
    out.push_back(d);
  }
  return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.variable_name(i);
    if (m.exp[i] != 1) s += "^" + std::to_string(m.exp[i]);
  }
  if (m.comp) s += (s.empty() ? "" : "*") + std::string("e") + std::to_string(m.comp);
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    std::string m = monomial_to_string(ring_, terms_[i].mono);
    if (m.empty())
      s += std::to_string(terms_[i].coeff);
    else if (terms_[i].coeff == 1)
      s += m;
    else
      s += std::to_string(terms_[i].coeff) + "*" + m;
  }
  return s;
}

Polynomial substitute(const Polynomial& f, const Ring& target, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != f.ring().nvars())
    throw std::invalid_argument("substitute: need one image per variable");
  if (target.characteristic() != f.ring().characteristic())
    throw RingMismatch("substitute: characteristics differ");
  // Cache powers per variable; exponents repeat a lot in practice.
  std::vector<std::vector<std::pair<int, Polynomial>>> cache(images.size());
  auto power = [&](int v, int e) -> Polynomial {
    for (auto& [k, val] : cache[v])
      if (k == e) return val;
    Polynomial val = images[v].pow(static_cast<std::uint64_t>(e));
    cache[v].emplace_back(e, val);
    return val;
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (int v = 0; v < f.ring().nvars() && !term.is_zero(); ++v)
      if (t.mono.exp[v]) term = term * power(v, t.mono.exp[v]);
    result += term;
  }
  return result;
}

Polynomial map_by_name(const Polynomial& f, const Ring& target) {
  if (f.ring() == target) return f;
  if (target.characteristic() != f.ring().characteristic())
    throw RingMismatch("map_by_name: characteristics differ");
  const Ring& src = f.ring();
  std::vector<int> where(src.nvars(), -1);
  for (int i = 0; i < src.nvars(); ++i)
    if (auto j = target.index_of(src.variable_name(i))) where[i] = *j;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term n{Monomial{}, t.coeff};
    n.mono.comp = t.mono.comp;
    for (int i = 0; i < src.nvars(); ++i) {
      if (!t.mono.exp[i]) continue;
      if (where[i] < 0)
        throw RingMismatch("variable '" + src.variable_name(i) + "' missing from " + target.describe());
      n.mono.exp[where[i]] = t.mono.exp[i];
    }
    out.push_back(n);
  }
  return Polynomial::from_terms(target, std::move(out));
}

bool divide_exact(const Polynomial& f, const Polynomial& g, Polynomial& quotient) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& F = f.ring().field();
  Coeff inv = F.inv(g.leading_coeff());
  Polynomial r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Monomial& lm = r.leading_monomial();
    if (!g.leading_monomial().divides(lm)) return false;
    Monomial m = lm / g.leading_monomial();
    Coeff c = F.mul(r.leading_coeff(), inv);
    q.push_back({m, c});
    r = r - g.mul_term(m, c);
  }
  quotient = Polynomial::from_terms(f.ring(), std::move(q));
  return true;
}

}  // namespace frobcore
