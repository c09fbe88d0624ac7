#pragma once

// The bundled table of knot diagrams.
//
// Format: a `knot NAME [det=N]` header followed by `X a b c d` lines; `#`
// comments and blank lines are ignored.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"
#include "embedded_knot_table.hpp"

namespace foxcolor {

struct KnotEntry {
  std::string name;
  Diagram pd;
  std::optional<std::int64_t> expected_det;
};

inline constexpr const char* kKnotTableEnv = "FOXCOLOR_KNOT_TABLE";

inline std::vector<KnotEntry> parse_knot_table(std::string_view text) {
  std::vector<KnotEntry> out;
  std::string name, body;
  std::optional<std::int64_t> det;
  auto flush = [&] {
    if (name.empty()) return;
    try {
      out.push_back({name, parse_pd(body), det});
    } catch (const DiagramError& e) {
      throw DiagramError("knot " + name + ": " + e.what());
    }
    name.clear();
    body.clear();
    det.reset();
  };
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens[0] == "knot") {
      flush();
      if (tokens.size() < 2) throw DiagramError("knot header without a name on line " + std::to_string(line_no));
      name = std::string(tokens[1]);
      for (std::size_t i = 2; i < tokens.size(); ++i)
        if (tokens[i].substr(0, 4) == "det=") det = detail::parse_int(tokens[i].substr(4), "determinant");
    } else {
      if (name.empty()) throw DiagramError("crossing before any knot header on line " + std::to_string(line_no));
      body.append(line);
      body.push_back('\n');
    }
  }
  flush();
  return out;
}

/// The table named by FOXCOLOR_KNOT_TABLE if set, else the embedded copy.
inline const std::vector<KnotEntry>& knot_table() {
  static const std::vector<KnotEntry> table = [] {
    if (const char* path = std::getenv(kKnotTableEnv); path && *path) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error(std::string("cannot read knot table ") + path);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_knot_table(ss.str());
    }
    return parse_knot_table(kEmbeddedKnotTable);
  }();
  return table;
}

/// Looks up a table entry; `T(2,n)` and `T2_n` name closed 2-braids.
inline std::optional<KnotEntry> find_knot(std::string_view name) {
  for (const auto& k : knot_table())
    if (k.name == name) return k;
  std::string s(name);
  std::string digits;
  if (s.rfind("T(2,", 0) == 0 && s.back() == ')')
    digits = s.substr(4, s.size() - 5);
  else if (s.rfind("T2_", 0) == 0)
    digits = s.substr(3);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  int n = std::stoi(digits);
  if (n < 3 || n % 2 == 0) return std::nullopt;
  return KnotEntry{"T(2," + digits + ")", torus_2n(n), n};
}

}  // namespace foxcolor
