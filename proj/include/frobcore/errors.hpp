#pragma once

#include <stdexcept>
#include <string>

namespace frobcore {

// Every typed failure carries the short name that the CLI prints in FAIL blocks.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FROBCORE_ERROR(Name)                                              \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  }

FROBCORE_ERROR(DecompositionOutOfScope);
FROBCORE_ERROR(NotCompatibleMultiplier);
FROBCORE_ERROR(BudgetExceeded);
FROBCORE_ERROR(NoTestElementFound);
FROBCORE_ERROR(NotMonic);
FROBCORE_ERROR(ResidueFieldUnsupported);
FROBCORE_ERROR(PreconditionViolated);
FROBCORE_ERROR(RingMismatch);
FROBCORE_ERROR(UnknownName);
FROBCORE_ERROR(TypeMismatch);

#undef FROBCORE_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace frobcore
