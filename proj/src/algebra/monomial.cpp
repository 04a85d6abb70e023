#include "frobcore/monomial.hpp"

#include <stdexcept>

namespace frobcore {

MonomialOrder::MonomialOrder(std::vector<Block> blocks) {
  for (const auto& b : blocks) {
    if (b.count < 0) throw std::invalid_argument("negative block size");
    if (b.count == 0) continue;
    // Adjacent degrevlex blocks are not merged: a block boundary changes the order.
    blocks_.push_back(b);
  }
  if (nvars() > kMaxVars) throw std::invalid_argument("too many variables");
}

int MonomialOrder::nvars() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.count;
  return n;
}

MonomialOrder MonomialOrder::prepend(const std::vector<Block>& front) const {
  std::vector<Block> all = front;
  all.insert(all.end(), blocks_.begin(), blocks_.end());
  return MonomialOrder(std::move(all));
}

MonomialOrder MonomialOrder::drop_front(int first) const {
  std::vector<Block> out;
  int skip = first;
  for (auto b : blocks_) {
    if (skip >= b.count) {
      skip -= b.count;
      continue;
    }
    b.count -= skip;
    skip = 0;
    out.push_back(b);
  }
  return MonomialOrder(std::move(out));
}

bool MonomialOrder::eliminates_prefix(int k) const {
  int seen = 0;
  for (const auto& b : blocks_) {
    if (seen == k) return true;
    if (seen + b.count > k) return b.kind == Kind::Lex;  // lex eliminates any prefix
    seen += b.count;
  }
  return seen == k;
}

std::string MonomialOrder::describe() const {
  if (blocks_.size() == 1) return blocks_[0].kind == Kind::Lex ? "lex" : "degrevlex";
  std::string s = "block(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += (blocks_[i].kind == Kind::Lex ? "lex:" : "drl:") + std::to_string(blocks_[i].count);
  }
  return s + ")";
}

}  // namespace frobcore
