#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace frobcore {

inline constexpr int kMaxVars = 16;

// Exponent vector plus a component index. Plain polynomials live in component 0;
// module elements (syzygy computations) use the component as the basis index.
struct Monomial {
  std::array<std::int32_t, kMaxVars> exp{};
  std::int32_t comp = 0;

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    if (comp != o.comp) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  // Disjoint support (ignores component).
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] && o.exp[i]) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
  r.comp = a.comp + b.comp;
  return r;
}

// a / b, assuming b divides a (components must match or b has component 0).
inline Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
  r.comp = a.comp - b.comp;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
  r.comp = a.comp;
  return r;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.comp) * 0x9e3779b97f4a7c15ULL;
    for (auto e : m.exp) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};

// A product of blocks, each compared by lex or degrevlex; earlier blocks dominate.
// Components are compared first (position over term, smaller index is larger).
class MonomialOrder {
 public:
  enum class Kind { Lex, Degrevlex };
  struct Block {
    int count;
    Kind kind;
    bool operator==(const Block&) const = default;
  };

  MonomialOrder() = default;
  static MonomialOrder degrevlex(int nvars) { return MonomialOrder({{nvars, Kind::Degrevlex}}); }
  static MonomialOrder lex(int nvars) { return MonomialOrder({{nvars, Kind::Lex}}); }
  // Elimination order: the first `split` variables dominate the rest (degrevlex in each block).
  static MonomialOrder block(int nvars, int split) {
    return MonomialOrder({{split, Kind::Degrevlex}, {nvars - split, Kind::Degrevlex}});
  }
  static MonomialOrder product(std::vector<Block> blocks) { return MonomialOrder(std::move(blocks)); }

  int nvars() const;
  const std::vector<Block>& blocks() const { return blocks_; }
  // New order with `blocks` placed in front of this one.
  MonomialOrder prepend(const std::vector<Block>& front) const;
  // Order restricted to variables [first, nvars) (the first `first` vars dropped).
  MonomialOrder drop_front(int first) const;
  // Are variables [0, k) an elimination block for this order?
  bool eliminates_prefix(int k) const;

  int compare(const Monomial& a, const Monomial& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    int start = 0;
    for (const auto& blk : blocks_) {
      int c = blk.kind == Kind::Lex ? cmp_lex(a, b, start, blk.count)
                                    : cmp_degrevlex(a, b, start, blk.count);
      if (c) return c;
      start += blk.count;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  explicit MonomialOrder(std::vector<Block> blocks);

  static int cmp_lex(const Monomial& a, const Monomial& b, int s, int n) {
    for (int i = s; i < s + n; ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
    return 0;
  }
  static int cmp_degrevlex(const Monomial& a, const Monomial& b, int s, int n) {
    int da = 0, db = 0;
    for (int i = s; i < s + n; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = s + n - 1; i >= s; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  std::vector<Block> blocks_;
};

}  // namespace frobcore
