#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobcore/field.hpp"
#include "frobcore/monomial.hpp"

namespace frobcore {

// Polynomial ring F_p[x_1..x_n] with a fixed monomial order. Cheap to copy.
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> vars);
  Ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order);

  const PrimeField& field() const { return d_->field; }
  std::uint32_t characteristic() const { return d_->field.characteristic(); }
  int nvars() const { return static_cast<int>(d_->vars.size()); }
  const std::vector<std::string>& variables() const { return d_->vars; }
  const std::string& variable_name(int i) const { return d_->vars.at(i); }
  const MonomialOrder& order() const { return d_->order; }
  std::optional<int> index_of(const std::string& name) const;

  Ring with_order(MonomialOrder order) const;
  // Prepends fresh variables that form leading (eliminable) blocks of the order.
  Ring extend_front(const std::vector<std::string>& names,
                    MonomialOrder::Kind kind = MonomialOrder::Kind::Degrevlex) const;
  // A variable name not already used in this ring.
  std::string fresh_name(const std::string& stem) const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }
  std::string describe() const;

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> vars;
    MonomialOrder order;
  };
  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

}  // namespace frobcore
