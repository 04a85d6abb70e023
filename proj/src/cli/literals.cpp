#include "literals.hpp"

#include <cctype>
#include <charconv>

#include "frobcore/errors.hpp"
#include "frobcore/parse.hpp"

namespace frobcore::cli {

namespace {

struct Item {
  std::string text;
  int col;
};

// Splits the inside of an open/close delimited list at top-level separators.
std::vector<Item> items(const std::string& s, char open, char close, int line, int col) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw ParseError(line, col, std::string("expected a list in '") + open + close + "'");
  std::vector<Item> out;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 <= s.size() - 1; ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && (c == ',' || c == ';')) {
      out.push_back({s.substr(start, i - start), col + static_cast<int>(start)});
      start = i + 1;
    }
  }
  out.push_back({s.substr(start, s.size() - 1 - start), col + static_cast<int>(start)});
  for (auto& it : out) {
    while (!it.text.empty() && std::isspace(static_cast<unsigned char>(it.text.front()))) {
      it.text.erase(0, 1);
      ++it.col;
    }
    while (!it.text.empty() && std::isspace(static_cast<unsigned char>(it.text.back()))) it.text.pop_back();
  }
  if (out.size() == 1 && out[0].text.empty()) out.clear();
  for (const auto& it : out)
    if (it.text.empty()) throw ParseError(line, it.col, "empty list item");
  return out;
}

}  // namespace

long parse_int(const std::string& s, int line, int col) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line, col, "expected an integer, got '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s, int line, int col) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(line, col, "expected true or false, got '" + s + "'");
}

std::vector<long> parse_int_list(const std::string& s, int line, int col) {
  std::vector<long> out;
  for (const auto& it : items(s, '[', ']', line, col)) out.push_back(parse_int(it.text, line, it.col));
  return out;
}

std::vector<std::string> parse_word_list(const std::string& s, int line, int col) {
  std::vector<std::string> out;
  for (const auto& it : items(s, '[', ']', line, col)) {
    for (char c : it.text)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ParseError(line, it.col, "bad name '" + it.text + "'");
    if (std::isdigit(static_cast<unsigned char>(it.text[0]))) throw ParseError(line, it.col, "bad name '" + it.text + "'");
    out.push_back(it.text);
  }
  return out;
}

std::vector<std::vector<Polynomial>> parse_ideal_list(const Ring& r, const std::string& s, int line, int col) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& it : items(s, '{', '}', line, col)) {
    if (it.text.front() != '[') throw ParseError(line, it.col, "expected an ideal '[...]'");
    out.push_back(parse_polynomial_list(r, it.text, line, it.col));
  }
  return out;
}

}  // namespace frobcore::cli
