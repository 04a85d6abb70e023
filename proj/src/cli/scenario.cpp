#include "scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "frobcore/covers.hpp"
#include "frobcore/errors.hpp"
#include "frobcore/parse.hpp"
#include "literals.hpp"
#include "schema.hpp"

namespace frobcore::cli {

const Arg* Statement::find(const std::string& key) const {
  for (const auto& a : args)
    if (a.key == key) return &a;
  return nullptr;
}

bool Statement::flag(const std::string& word) const {
  for (const auto& a : args)
    if (a.key.empty() && a.value == word) return true;
  return false;
}

namespace {

const std::set<std::string> kNamed{"ring", "ideal", "pair", "cover", "trace", "grading", "compute", "check", "enumerate"};
const std::set<std::string> kBareWords{"auto"};

struct Token {
  std::string text;
  int begin, end;  // 0-based [begin, end) in the line
};

std::vector<Token> split(const std::string& line, int lineno) {
  std::vector<Token> out;
  int depth = 0;
  bool quoted = false;
  int start = -1;
  for (int i = 0; i <= static_cast<int>(line.size()); ++i) {
    char ch = i < static_cast<int>(line.size()) ? line[i] : ' ';
    bool space = std::isspace(static_cast<unsigned char>(ch)) && depth == 0 && !quoted;
    if (space) {
      if (start >= 0) out.push_back({line.substr(start, i - start), start, i});
      start = -1;
      continue;
    }
    if (start < 0) start = i;
    if (ch == '"') quoted = !quoted;
    if (quoted) continue;
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') {
      if (--depth < 0) throw ParseError(lineno, i + 1, std::string("unbalanced '") + ch + "'");
    }
  }
  if (quoted) throw ParseError(lineno, static_cast<int>(line.size()), "unterminated string");
  if (depth != 0) throw ParseError(lineno, static_cast<int>(line.size()), "unbalanced brackets");
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
  });
}

Statement tokenize(const std::string& raw, int lineno) {
  std::string line = raw.substr(0, raw.find('#'));
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  Statement st;
  st.line = lineno;
  auto toks = split(line, lineno);
  if (toks.empty()) return st;
  st.text = line.substr(toks.front().begin);
  st.kind = toks[0].text;
  std::size_t i = 1;
  if (kNamed.count(st.kind)) {
    if (toks.size() < 2 || toks[1].text.find('=') != std::string::npos)
      throw ParseError(lineno, toks[0].end + 1, "'" + st.kind + "' needs a name or operation");
    st.name = toks[1].text;
    if (!is_identifier(st.name)) throw ParseError(lineno, toks[1].begin + 1, "bad name '" + st.name + "'");
    i = 2;
  }
  int value_begin = -1, value_end = -1;
  auto flush = [&] {
    if (value_begin < 0) return;
    std::string v = line.substr(value_begin, value_end - value_begin);
    int col = value_begin + 1;
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
      v = v.substr(1, v.size() - 2);
      ++col;
    }
    st.args.back().value = v;
    st.args.back().column = col;
    value_begin = -1;
  };
  for (; i < toks.size(); ++i) {
    const auto& t = toks[i];
    auto eq = t.text.find('=');
    bool keyed = eq != std::string::npos && eq > 0 && is_identifier(t.text.substr(0, eq)) &&
                 t.text.find_first_of("([{\"") > eq;
    if (keyed) {
      flush();
      st.args.push_back({t.text.substr(0, eq), "", 0});
      value_begin = t.begin + static_cast<int>(eq) + 1;
      value_end = t.end;
      if (value_begin == value_end) throw ParseError(lineno, value_begin + 1, "empty value for '" + st.args.back().key + "'");
    } else if (kBareWords.count(t.text) || value_begin < 0) {
      flush();
      st.args.push_back({"", t.text, t.begin + 1});
    } else {
      value_end = t.end;  // continuation of an unquoted value such as u=x + x^2
    }
  }
  flush();
  return st;
}

struct Symbol {
  std::string kind;
  Ring ring;                 // ring that literals referring to this symbol live in
  std::optional<Ring> base;  // base ring of a cover or trace
};

class Validator {
 public:
  void statement(const Statement& st) {
    if (st.kind.empty()) return;
    std::string op = (st.kind == "compute" || st.kind == "check") ? st.name : "";
    const OpSchema* sc = find_schema(st.kind, op);
    if (!sc) {
      if (op.empty()) throw ParseError(st.line, 1, "unknown statement '" + st.kind + "'");
      throw ParseError(st.line, static_cast<int>(st.kind.size()) + 2, "unknown operation '" + op + "' for " + st.kind);
    }
    std::set<std::string> seen;
    for (const auto& a : st.args) {
      if (a.key.empty()) {
        if (st.kind == "trace" && a.value == "auto") continue;
        throw ParseError(st.line, a.column, "unexpected word '" + a.value + "'");
      }
      if (!seen.insert(a.key).second) throw ParseError(st.line, a.column, "repeated key '" + a.key + "'");
      auto it = std::find_if(sc->params.begin(), sc->params.end(), [&](const Param& p) { return p.key == a.key; });
      if (it == sc->params.end())
        throw ParseError(st.line, a.column - static_cast<int>(a.key.size()) - 1,
                         "unknown key '" + a.key + "' for " + st.kind + (op.empty() ? "" : " " + op));
    }
    for (const auto& p : sc->params)
      if (p.required && !st.find(p.key)) throw ParseError(st.line, 1, "missing key '" + p.key + "'");
    if (kNamed.count(st.kind) && st.kind != "compute" && st.kind != "check" && st.kind != "enumerate" &&
        symbols_.count(st.name))
      throw ParseError(st.line, static_cast<int>(st.kind.size()) + 2, "name '" + st.name + "' is already declared");
    if (st.kind == "enumerate") lookup(st, st.name, "pair", static_cast<int>(st.kind.size()) + 2);
    if (st.kind == "ring") {
      declare_ring(st);
      return;
    }
    for (const auto& p : sc->params)
      if (const Arg* a = st.find(p.key)) check_arg(st, p, *a);
    if (st.kind == "trace") {
      int modes = st.flag("auto") + (st.find("values") != nullptr) + (st.find("pi0") != nullptr);
      if (modes != 1) throw ParseError(st.line, 1, "trace needs exactly one of auto, values=, pi0=");
    }
    declare(st);
  }

 private:
  const Symbol& lookup(const Statement& st, const std::string& name, const std::string& kind, int col) {
    auto it = symbols_.find(name);
    if (it == symbols_.end()) throw UnknownName("line " + std::to_string(st.line) + ": unknown name '" + name + "'");
    const std::string& k = it->second.kind;
    bool ok = k == kind || (kind == "ring" && k == "cover");
    if (!ok)
      throw TypeMismatch("line " + std::to_string(st.line) + ", column " + std::to_string(col) + ": '" + name +
                         "' is a " + k + ", expected a " + kind);
    return it->second;
  }

  Ring context(const Statement& st, const std::string& ctx) {
    if (ctx == "self") {
      if (st.kind == "enumerate") return symbols_.at(st.name).ring;
      return *self_;
    }
    if (ctx == "ext") {
      const Symbol& b = symbols_.at(st.find("base")->value);
      const Arg* v = st.find("var");
      try {
        return extension_ring(QuotientRing(b.ring), v ? v->value : "t");
      } catch (const PreconditionViolated& e) {
        throw ParseError(st.line, v ? v->column : 1, e.what());
      }
    }
    auto dot = ctx.find('.');
    const Symbol& s = symbols_.at(st.find(ctx.substr(0, dot))->value);
    if (dot != std::string::npos) return *s.base;
    return s.ring;
  }

  void check_arg(const Statement& st, const Param& p, const Arg& a) {
    const int line = st.line, col = a.column;
    switch (p.type) {
      case ArgType::RingRef: lookup(st, a.value, "ring", col); break;
      case ArgType::PairRef: lookup(st, a.value, "pair", col); break;
      case ArgType::CoverRef: lookup(st, a.value, "cover", col); break;
      case ArgType::TraceRef: lookup(st, a.value, "trace", col); break;
      case ArgType::GradingRef: lookup(st, a.value, "grading", col); break;
      case ArgType::Int: parse_int(a.value, line, col); break;
      case ArgType::Bool: parse_bool(a.value, line, col); break;
      case ArgType::Word:
        if (!is_identifier(a.value)) throw ParseError(line, col, "expected a name, got '" + a.value + "'");
        break;
      case ArgType::IntList: parse_int_list(a.value, line, col); break;
      case ArgType::WordList: parse_word_list(a.value, line, col); break;
      case ArgType::Poly: parse_polynomial(context(st, p.ctx), a.value, line, col); break;
      case ArgType::PolyList: parse_polynomial_list(context(st, p.ctx), a.value, line, col); break;
      case ArgType::IdealList: parse_ideal_list(context(st, p.ctx), a.value, line, col); break;
      case ArgType::Ideal: {
        Ring r = context(st, p.ctx);
        if (!a.value.empty() && a.value.front() == '[') {
          parse_polynomial_list(r, a.value, line, col);
        } else {
          const Symbol& s = lookup(st, a.value, "ideal", col);
          if (s.ring != r)
            throw TypeMismatch("line " + std::to_string(line) + ", column " + std::to_string(col) + ": ideal '" +
                               a.value + "' lives in " + s.ring.describe() + ", expected " + r.describe());
        }
        break;
      }
    }
  }

  void declare_ring(const Statement& st) {
    const Arg* vars = st.find("vars");
    auto names = parse_word_list(vars->value, st.line, vars->column);
    if (names.empty()) throw ParseError(st.line, vars->column, "a ring needs at least one variable");
    if (names.size() > static_cast<std::size_t>(kMaxVars) - 4)
      throw ParseError(st.line, vars->column, "too many variables");
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
      throw ParseError(st.line, vars->column, "repeated variable");
    const Arg* p = st.find("p");
    long pv = parse_int(p->value, st.line, p->column);
    if (pv < 2 || pv > 65535 || !is_prime_number(static_cast<std::uint32_t>(pv)))
      throw ParseError(st.line, p->column, "p must be a prime below 65536");
    MonomialOrder order = MonomialOrder::degrevlex(static_cast<int>(names.size()));
    if (const Arg* o = st.find("order")) {
      if (o->value == "lex") order = MonomialOrder::lex(static_cast<int>(names.size()));
      else if (o->value != "degrevlex") throw ParseError(st.line, o->column, "order must be degrevlex or lex");
    }
    self_ = Ring(static_cast<std::uint32_t>(pv), names, order);
    if (const Arg* rel = st.find("relations")) parse_polynomial_list(*self_, rel->value, st.line, rel->column);
    symbols_.emplace(st.name, Symbol{"ring", *self_, std::nullopt});
  }

  void declare(const Statement& st) {
    if (st.kind == "ideal") symbols_.emplace(st.name, Symbol{"ideal", context(st, "ring"), std::nullopt});
    if (st.kind == "pair") symbols_.emplace(st.name, Symbol{"pair", context(st, "ring"), std::nullopt});
    if (st.kind == "grading") {
      Ring r = context(st, "ring");
      const Arg* d = st.find("degrees");
      if (parse_int_list(d->value, st.line, d->column).size() != static_cast<std::size_t>(r.nvars()))
        throw ParseError(st.line, d->column, "grading needs one degree per variable of " + r.describe());
      symbols_.emplace(st.name, Symbol{"grading", r, std::nullopt});
    }
    if (st.kind == "cover") symbols_.emplace(st.name, Symbol{"cover", context(st, "ext"), context(st, "base")});
    if (st.kind == "trace") {
      const Symbol& c = symbols_.at(st.find("cover")->value);
      symbols_.emplace(st.name, Symbol{"trace", c.ring, c.base});
    }
  }

  std::map<std::string, Symbol> symbols_;
  std::optional<Ring> self_;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  Scenario sc;
  sc.name = name;
  Validator v;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++lineno;
    Statement st = tokenize(line, lineno);
    if (!st.kind.empty()) {
      v.statement(st);
      sc.statements.push_back(std::move(st));
    }
    pos = nl + 1;
  }
  return sc;
}

}  // namespace frobcore::cli
