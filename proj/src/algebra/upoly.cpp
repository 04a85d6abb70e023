#include "upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobcore::detail {

UPoly UArith::add(const UPoly& a, const UPoly& b) const {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F_.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly UArith::sub(const UPoly& a, const UPoly& b) const {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F_.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly UArith::mul(const UPoly& a, const UPoly& b) const {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = F_.characteristic();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      if (acc[i + j] >= (1ULL << 62)) acc[i + j] %= p;
    }
  }
  UPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<Coeff>(acc[i] % p);
  trim(r);
  return r;
}

UPoly UArith::scale(const UPoly& a, Coeff c) const {
  UPoly r = a;
  for (auto& x : r) x = F_.mul(x, c);
  trim(r);
  return r;
}

void UArith::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) const {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  Coeff inv = F_.inv(b.back());
  for (int i = deg(r); i >= deg(b); --i) {
    Coeff c = F_.mul(r[i], inv);
    if (!c) continue;
    q[i - deg(b)] = c;
    for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] = F_.sub(r[i - deg(b) + j], F_.mul(c, b[j]));
  }
  trim(q);
  trim(r);
}

UPoly UArith::mod(const UPoly& a, const UPoly& b) const {
  UPoly q, r;
  divmod(a, b, q, r);
  return r;
}

UPoly UArith::div(const UPoly& a, const UPoly& b) const {
  UPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UPoly UArith::monic(const UPoly& a) const {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, F_.inv(a.back()));
}

UPoly UArith::gcd(UPoly a, UPoly b) const {
  while (!b.empty()) {
    UPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly UArith::derivative(const UPoly& a) const {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F_.mul(a[i], F_.reduce(static_cast<std::int64_t>(i)));
  trim(r);
  return r;
}

UPoly UArith::powmod(UPoly a, std::uint64_t e, const UPoly& m) const {
  UPoly result{1};
  result = mod(result, m);
  a = mod(a, m);
  while (e) {
    if (e & 1) result = mod(mul(result, a), m);
    e >>= 1;
    if (e) a = mod(mul(a, a), m);
  }
  return result;
}

UPoly UArith::frobmod(UPoly a, int k, const UPoly& m) const {
  for (int i = 0; i < k; ++i) a = powmod(a, F_.characteristic(), m);
  return mod(a, m);
}

// Yun-style squarefree decomposition adapted to characteristic p.
std::vector<std::pair<UPoly, int>> UArith::squarefree(const UPoly& f0) const {
  std::vector<std::pair<UPoly, int>> out;
  const int p = static_cast<int>(F_.characteristic());
  UPoly f = monic(f0);
  if (deg(f) <= 0) return out;
  UPoly d = derivative(f);
  if (d.empty()) {
    // f = g(x^p) = g^{1/p}(x)^p since coefficients are fixed by Frobenius.
    UPoly g(deg(f) / p + 1, 0);
    for (int i = 0; i <= deg(f); i += p) g[i / p] = f[i];
    for (auto& [h, m] : squarefree(g)) out.emplace_back(h, m * p);
    return out;
  }
  UPoly c = gcd(f, d);
  UPoly w = div(f, c);
  int i = 1;
  while (deg(w) > 0) {
    UPoly y = gcd(w, c);
    UPoly z = div(w, y);
    if (deg(z) > 0) out.emplace_back(monic(z), i);
    ++i;
    w = y;
    c = div(c, y);
  }
  if (deg(c) > 0) {
    UPoly g(deg(c) / p + 1, 0);
    for (int k = 0; k <= deg(c); k += p) g[k / p] = c[k];
    for (auto& [h, m] : squarefree(g)) out.emplace_back(h, m * p);
  }
  return out;
}

std::vector<std::pair<UPoly, int>> UArith::distinct_degree(const UPoly& f0) const {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = f0;
  UPoly x{0, 1};
  UPoly h = mod(x, f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, F_.characteristic(), f);
    UPoly g = gcd(f, sub(h, x));
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = div(f, g);
      h = mod(h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(monic(f), deg(f));
  return out;
}

void UArith::equal_degree(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) const {
  if (deg(f) == d) {
    out.push_back(monic(f));
    return;
  }
  const std::uint32_t p = F_.characteristic();
  std::uniform_int_distribution<Coeff> coef(0, p - 1);
  for (;;) {
    UPoly a(deg(f), 0);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) <= 0) continue;
    UPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UPoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = mod(mul(t, t), f);
        b = add(b, t);
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      UPoly t = a, norm = a;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, p, f);
        norm = mod(mul(norm, t), f);
      }
      b = sub(powmod(norm, (p - 1) / 2, f), UPoly{1});
    }
    UPoly g = gcd(f, b);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(div(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<std::pair<UPoly, int>> UArith::factor(const UPoly& f, std::mt19937_64& rng) const {
  std::vector<std::pair<UPoly, int>> out;
  for (auto& [sq, mult] : squarefree(f))
    for (auto& [g, d] : distinct_degree(sq)) {
      std::vector<UPoly> parts;
      equal_degree(g, d, rng, parts);
      for (auto& h : parts) out.emplace_back(h, mult);
    }
  std::sort(out.begin(), out.end());
  // Merge equal factors that arrived from different squarefree layers.
  std::vector<std::pair<UPoly, int>> merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  return merged;
}

}  // namespace frobcore::detail
