#pragma once

#include <string>
#include <vector>

#include "frobcore/polynomial.hpp"

namespace frobcore::cli {

long parse_int(const std::string& s, int line, int col);
bool parse_bool(const std::string& s, int line, int col);
// "[a, b, c]"; commas or semicolons separate items.
std::vector<long> parse_int_list(const std::string& s, int line, int col);
std::vector<std::string> parse_word_list(const std::string& s, int line, int col);
// "{[f; g], [h]}"
std::vector<std::vector<Polynomial>> parse_ideal_list(const Ring& r, const std::string& s, int line, int col);

}  // namespace frobcore::cli
