#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frobcore::cli {

struct Arg {
  std::string key;    // empty for a bare word
  std::string value;
  int column = 1;     // column of the value text
};

struct Statement {
  int line = 0;
  std::string kind;   // ring, ideal, pair, cover, trace, grading, compute, check, enumerate, ...
  std::string name;   // declared name, or the operation of compute/check
  std::vector<Arg> args;
  std::string text;   // the source line without comment

  const Arg* find(const std::string& key) const;
  bool flag(const std::string& word) const;
};

struct Scenario {
  std::string name;
  std::vector<Statement> statements;
};

// Tokenizes and validates a scenario: known kinds, operations and keys,
// declaration before use, unique names, argument kinds and literal syntax.
// Throws ParseError, UnknownName or TypeMismatch.
Scenario parse_scenario(const std::string& text, const std::string& name = "scenario");

struct EmbeddedScenario {
  const char* name;
  const char* text;
};
const std::vector<EmbeddedScenario>& embedded_corpus();

}  // namespace frobcore::cli
