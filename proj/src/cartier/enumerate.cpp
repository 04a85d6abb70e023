#include <algorithm>
#include <deque>
#include <functional>

#include "frobcore/cartier.hpp"
#include "frobcore/decomposition.hpp"
#include "frobcore/errors.hpp"

namespace frobcore {

namespace {

constexpr std::size_t kMaxPrimes = 64;
constexpr std::size_t kMaxRadicalIdeals = 256;
constexpr std::size_t kMaxMinors = 4000;
constexpr std::size_t kLatticeRouteLimit = 32;
constexpr int kCandidateLimit = 40;
constexpr int kPowerSteps = 6;

void sort_primes(std::vector<Ideal>& v) {
  std::vector<std::pair<int, std::string>> keys;
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    idx[i] = i;
    keys.emplace_back(krull_dimension(v[i]), v[i].to_string());
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].first != keys[b].first) return keys[a].first > keys[b].first;
    return keys[a].second < keys[b].second;
  });
  std::vector<Ideal> out;
  for (auto i : idx) out.push_back(v[i]);
  v = std::move(out);
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det = Polynomial::constant(m[0][0].ring(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial t = m[0][c] * determinant(std::move(minor));
    det = (c % 2 == 0) ? det + t : det - t;
  }
  return det;
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  if (k > n) return;
  for (;;) {
    if (!f(s)) return;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// An h x h minor of the Jacobian of Q's generators, nonzero modulo Q, of least degree.
std::optional<Polynomial> jacobian_minor(const Ideal& Q, int h) {
  const Ring& A = Q.ring();
  if (h == 0) return Polynomial::constant(A, 1);
  const auto& g = Q.basis();
  const int n = static_cast<int>(A.nvars());
  std::vector<std::vector<Polynomial>> jac(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int j = 0; j < n; ++j) jac[i].push_back(g[i].derivative(j));
  std::optional<Polynomial> best;
  std::size_t seen = 0;
  for_each_subset(static_cast<int>(g.size()), h, [&](const std::vector<int>& rows) {
    for_each_subset(n, h, [&](const std::vector<int>& cols) {
      std::vector<std::vector<Polynomial>> m;
      for (int r : rows) {
        std::vector<Polynomial> row;
        for (int c : cols) row.push_back(jac[r][c]);
        m.push_back(std::move(row));
      }
      Polynomial d = Q.reduce(determinant(std::move(m)));
      if (!d.is_zero() && (!best || d.total_degree() < best->total_degree())) best = d;
      return ++seen < kMaxMinors;
    });
    return seen < kMaxMinors;
  });
  return best;
}

bool avoids_all(const Polynomial& f, const std::vector<Ideal>& primes) {
  for (const auto& m : primes)
    if (m.contains(f)) return false;
  return true;
}

}  // namespace

std::vector<Ideal> CompatibleLattice::schpec() const {
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (center[i]) out.push_back(primes[i]);
  return out;
}

bool CompatibleLattice::contains_prime(const Ideal& p) const {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

std::vector<Ideal> CompatibleLattice::radical_ideals() const {
  std::vector<Ideal> out = primes;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Ideal c = intersect(out[i], out[j]);
      if (std::find(out.begin(), out.end(), c) != out.end()) continue;
      if (out.size() >= kMaxRadicalIdeals) throw BudgetExceeded("compatible lattice too large to list");
      out.push_back(std::move(c));
    }
  }
  sort_primes(out);
  return out;
}

std::string to_string(TauStatus s) { return s == TauStatus::Certified ? "certified" : "upper-bound"; }

namespace {

// c0 = n0 * j0 for the domain A/Q of positive dimension.
Polynomial domain_test_element(const CartierPair& P, const Ideal& Q, int dim) {
  const Ideal Qq = bracket_power(Q, P.q());
  Ideal N = quotient(add_generators(Qq, std::vector<Polynomial>{P.multiplier()}), quotient(Qq, Q)) + Q;
  std::optional<Polynomial> n0;
  for (const auto& g : N.basis()) {
    Polynomial r = Q.reduce(g);
    if (!r.is_zero() && (!n0 || r.total_degree() < n0->total_degree())) n0 = r;
  }
  if (!n0) throw PreconditionViolated("phi vanishes on A/Q; Q is not a center: " + Q.to_string());
  const int h = static_cast<int>(P.ambient().nvars()) - dim;
  auto j0 = jacobian_minor(Q, h);
  if (!j0) throw PreconditionViolated("no nonvanishing Jacobian minor for " + Q.to_string());
  return *n0 * *j0;
}

}  // namespace

Ideal test_ideal_of_domain(const CartierPair& P, const Ideal& Q0, bool* heuristic) {
  const Ideal Q = P.ring().lift(Q0);
  const int dim = krull_dimension(Q);
  if (dim < 0) throw PreconditionViolated("test ideal of the unit ideal");
  if (dim == 0) return Ideal::unit(P.ambient());
  CartierPair PQ = P.restrict_to(Q);
  Polynomial c = domain_test_element(P, Q, dim);
  Ideal tau = rho(PQ, Ideal(P.ambient(), {c}) + Q);
  if (is_f_pure(PQ)) return tau;
  // Compatible ideals need not be radical here; push c into deeper powers.
  if (heuristic) *heuristic = true;
  for (int k = 0; k < kPowerSteps; ++k) {
    c = Q.reduce(c.frobenius(P.q()));
    Ideal next = rho(PQ, Ideal(P.ambient(), {c}) + Q);
    if (next == tau) return tau;
    tau = std::move(next);
  }
  throw BudgetExceeded("test ideal of " + Q.to_string() + " did not stabilize under c -> c^q");
}

CompatibleLattice enumerate_compatible_primes(const CartierPair& P) {
  CompatibleLattice L;
  const Ideal& s1 = P.sigma_one();
  L.f_pure = s1.is_unit();
  std::deque<Ideal> todo;
  for (auto& m : minimal_primes(P.ring().defining())) todo.push_back(std::move(m));
  if (!L.f_pure) {
    L.cspec_complete = false;
    L.non_f_pure_locus = s1;
    for (auto& m : minimal_primes(s1)) todo.push_back(std::move(m));
  }
  std::vector<Ideal> seen;
  std::vector<Ideal> found;
  while (!todo.empty()) {
    Ideal Q = std::move(todo.front());
    todo.pop_front();
    if (std::find(seen.begin(), seen.end(), Q) != seen.end()) continue;
    seen.push_back(Q);
    if (!is_compatible(P, Q)) continue;
    if (found.size() >= kMaxPrimes) throw BudgetExceeded("too many compatible primes");
    found.push_back(Q);
    if (Q.contains(s1) || krull_dimension(Q) == 0) continue;
    // Off V(sigma(1)) the pair is F-pure and rho(c0) agrees with tau there, which
    // is all the search needs; primes inside V(sigma(1)) come from the queue above.
    const int dim = krull_dimension(Q);
    Ideal tau = rho(P.restrict_to(Q), Ideal(P.ambient(), {domain_test_element(P, Q, dim)}) + Q);
    for (auto& m : minimal_primes(tau))
      if (m != Q) todo.push_back(std::move(m));
  }
  sort_primes(found);
  for (auto& Q : found) {
    L.center.push_back(!Q.contains(s1));
    L.primes.push_back(std::move(Q));
  }
  return L;
}

TestIdealResult test_ideal_along(const CartierPair& P, const Ideal& a0) {
  const Ideal a = P.ring().lift(a0);
  const auto mins = minimal_primes(a);
  const Ideal& s1 = P.sigma_one();
  for (const auto& m : mins)
    if (m.contains(s1) || !is_compatible(P, m))
      throw PreconditionViolated("test ideal along " + a0.to_string() + ": " + m.to_string() +
                                 " is not a center of F-purity");

  if (is_f_pure(P) && P.lattice().primes.size() <= kLatticeRouteLimit) {
    std::vector<Ideal> avoiding;
    for (const auto& Q : P.lattice().primes) {
      bool ok = true;
      for (const auto& m : mins) ok = ok && !m.contains(Q);
      if (ok) avoiding.push_back(Q);
    }
    Ideal L = intersect_all(P.ambient(), avoiding);
    // rho of any element of L outside every minimal prime must give L back.
    Polynomial c = Polynomial::constant(P.ambient(), 1);
    bool have = true;
    for (const auto& Q : avoiding) {
      std::optional<Polynomial> g;
      for (const auto& b : Q.basis())
        if (avoids_all(b, mins)) {
          g = b;
          break;
        }
      if (!g) {
        have = false;
        break;
      }
      c *= *g;
    }
    if (have && rho(P, Ideal(P.ambient(), {c})) != L)
      throw std::logic_error("test ideal: lattice value disagrees with rho of a test element");
    return {L, TauStatus::Certified, 0};
  }

  // Upper bound: intersect rho(c) over low-degree elements avoiding every minimal prime.
  const Ring& A = P.ambient();
  std::vector<Polynomial> cands;
  const int n = static_cast<int>(A.nvars());
  for (int i = 0; i < n; ++i) {
    Polynomial lin = Polynomial::variable(A, i);
    cands.push_back(lin);
    cands.push_back(lin + Polynomial::constant(A, 1));
    for (int j = i + 1; j < n; ++j) cands.push_back(lin + Polynomial::variable(A, j));
  }
  std::function<void(int, int, Polynomial)> mono = [&](int var, int left, Polynomial m) {
    if (var == n) {
      if (!m.is_constant()) cands.push_back(m);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      mono(var + 1, left - d, m);
      m *= Polynomial::variable(A, var);
    }
  };
  mono(0, 4, Polynomial::constant(A, 1));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Polynomial& x, const Polynomial& y) { return x.total_degree() < y.total_degree(); });
  std::optional<Ideal> bound;
  int used = 0;
  for (const auto& c : cands) {
    if (used >= kCandidateLimit) break;
    if (!avoids_all(c, mins)) continue;
    ++used;
    Ideal r = rho(P, Ideal(A, {c}));
    bound = bound ? intersect(*bound, r) : r;
  }
  if (!bound) throw NoTestElementFound("no candidate test element avoids the minimal primes of " + a0.to_string());
  return {*bound, TauStatus::UpperBound, used};
}

}  // namespace frobcore
