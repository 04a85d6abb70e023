#include "report.hpp"

#include <sstream>

namespace frobcore::cli {

namespace {

void text_value(std::ostringstream& os, const json& v, const std::string& indent) {
  if (v.is_string()) {
    os << v.get<std::string>() << "\n";
  } else if (v.is_array()) {
    if (v.empty()) os << "(none)";
    os << "\n";
    for (const auto& x : v) {
      if (x.is_object()) {
        bool first = true;
        for (const auto& [k, y] : x.items()) {
          os << indent << (first ? "- " : "  ") << k << ": ";
          text_value(os, y, indent + "    ");
          first = false;
        }
      } else {
        os << indent << "- ";
        text_value(os, x, indent + "  ");
      }
    }
  } else if (v.is_object()) {
    os << "\n";
    for (const auto& [k, y] : v.items()) {
      os << indent << k << ": ";
      text_value(os, y, indent + "  ");
    }
  } else {
    os << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "scenario " << r.scenario << "\n";
  for (const auto& b : r.blocks) {
    os << "[" << b.line << "] " << b.command << "\n";
    for (const auto& [k, v] : b.fields.items()) {
      os << "    " << k << ": ";
      text_value(os, v, "      ");
    }
    if (b.verdict) os << "    => " << *b.verdict << "\n";
  }
  os << "summary: " << r.checks << " checks, " << r.failures << " failed\n";
  return os.str();
}

json render_json(const Report& r) {
  json out;
  out["scenario"] = r.scenario;
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    json j;
    j["line"] = b.line;
    j["command"] = b.command;
    j["fields"] = b.fields;
    j["verdict"] = b.verdict ? json(*b.verdict) : json(nullptr);
    blocks.push_back(std::move(j));
  }
  out["blocks"] = std::move(blocks);
  out["summary"] = {{"checks", r.checks}, {"failed", r.failures}, {"ok", r.ok()}};
  return out;
}

}  // namespace frobcore::cli
