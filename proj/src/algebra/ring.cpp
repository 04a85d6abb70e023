#include "frobcore/ring.hpp"

#include <set>
#include <stdexcept>

namespace frobcore {

Ring::Ring(std::uint32_t p, std::vector<std::string> vars)
    : Ring(p, vars, MonomialOrder::degrevlex(static_cast<int>(vars.size()))) {}

Ring::Ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order) {
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables");
  if (order.nvars() != static_cast<int>(vars.size()))
    throw std::invalid_argument("monomial order does not match the number of variables");
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) throw std::invalid_argument("duplicate variable name");
  d_ = std::make_shared<const Data>(Data{PrimeField(p), std::move(vars), std::move(order)});
}

std::optional<int> Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (d_->vars[i] == name) return i;
  return std::nullopt;
}

Ring Ring::with_order(MonomialOrder order) const {
  return Ring(characteristic(), d_->vars, std::move(order));
}

Ring Ring::extend_front(const std::vector<std::string>& names, MonomialOrder::Kind kind) const {
  std::vector<std::string> vars = names;
  vars.insert(vars.end(), d_->vars.begin(), d_->vars.end());
  std::vector<MonomialOrder::Block> front;
  for (std::size_t i = 0; i < names.size(); ++i) front.push_back({1, kind});
  if (kind == MonomialOrder::Kind::Degrevlex && !names.empty())
    front = {{static_cast<int>(names.size()), kind}};
  return Ring(characteristic(), std::move(vars), d_->order.prepend(front));
}

std::string Ring::fresh_name(const std::string& stem) const {
  if (!index_of(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string s = stem + "_" + std::to_string(i);
    if (!index_of(s)) return s;
  }
}

bool Ring::operator==(const Ring& o) const {
  if (d_ == o.d_) return true;
  return d_->field == o.d_->field && d_->vars == o.d_->vars && d_->order == o.d_->order;
}

std::string Ring::describe() const {
  std::string s = "F_" + std::to_string(characteristic()) + "[";
  for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + d_->vars[i];
  return s + "] " + d_->order.describe();
}

}  // namespace frobcore
