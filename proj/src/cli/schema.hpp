#pragma once

#include <string>
#include <vector>

namespace frobcore::cli {

enum class ArgType { RingRef, PairRef, CoverRef, TraceRef, GradingRef, Ideal, IdealList, Poly, PolyList, Int, IntList, Bool, Word, WordList };

// `ctx` names the ring that literals are parsed in: "<key>" for the ring of the
// symbol under that key, "<key>.base" for a cover or trace's base ring, "self"
// for the ring being declared, "ext" for a cover's extension ring.
struct Param {
  std::string key;
  ArgType type;
  bool required;
  std::string ctx;
};

struct OpSchema {
  std::string kind;  // statement kind
  std::string op;    // operation for compute/check, empty otherwise
  std::vector<Param> params;
  std::string result_ctx;  // ring of the value compared against expect=, if any
};

const std::vector<OpSchema>& schemas();
const OpSchema* find_schema(const std::string& kind, const std::string& op);

}  // namespace frobcore::cli
