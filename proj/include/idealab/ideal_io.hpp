#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "idealab/monomial.hpp"

namespace idealab {

// Ideal text format, one ideal per file:
//
//   vars: x1 x2 x3
//   x1^2*x3
//   x2
//
// A bare variable means exponent 1; `1` denotes the unit ideal; an empty
// generator section denotes the zero ideal. Negative exponents are rejected.
// Lines starting with `#` are comments.
struct NamedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> varNames;
};

namespace detail {

inline bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline ExponentVector parseMonomialLine(const std::string& line, int lineNo,
                                        const std::map<std::string, int>& varIndex, int arity) {
  ExponentVector e(arity);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("ideal parse error at line " + std::to_string(lineNo) + ": " + what);
  };
  bool first = true;
  while (pos < line.size()) {
    if (!first) {
      if (line[pos] != '*') fail("expected '*' between factors");
      ++pos;
    }
    first = false;
    if (pos >= line.size()) fail("dangling '*'");
    if (line[pos] == '1' && (pos + 1 == line.size() || !isIdentChar(line[pos + 1]))) {
      ++pos;  // the trivial factor; "1" alone is the unit generator
      continue;
    }
    if (line[pos] == '-') fail("negative exponents are not allowed");
    std::size_t start = pos;
    if (!std::isalpha(static_cast<unsigned char>(line[pos])) && line[pos] != '_')
      fail("expected a variable name");
    while (pos < line.size() && isIdentChar(line[pos])) ++pos;
    std::string name = line.substr(start, pos - start);
    auto it = varIndex.find(name);
    if (it == varIndex.end()) fail("unknown variable '" + name + "'");
    Int exp = 1;
    if (pos < line.size() && line[pos] == '^') {
      ++pos;
      if (pos < line.size() && line[pos] == '-') fail("negative exponents are not allowed");
      std::size_t dstart = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == dstart) fail("expected an exponent after '^'");
      exp = Int(line.substr(dstart, pos - dstart));
    }
    e[it->second] += exp;
  }
  return e;
}

}  // namespace detail

inline NamedIdeal parseIdeal(std::istream& in) {
  std::string line;
  int lineNo = 0;
  std::vector<std::string> names;
  std::map<std::string, int> varIndex;
  bool haveVars = false;
  std::vector<ExponentVector> gens;
  while (std::getline(in, line)) {
    ++lineNo;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!haveVars) {
      if (line.rfind("vars:", 0) != 0)
        throw std::runtime_error("ideal parse error at line " + std::to_string(lineNo) +
                                 ": expected a 'vars:' header");
      std::istringstream ss(line.substr(5));
      std::string name;
      while (ss >> name) {
        if (varIndex.count(name))
          throw std::runtime_error("ideal parse error: duplicate variable '" + name + "'");
        varIndex[name] = static_cast<int>(names.size());
        names.push_back(name);
      }
      haveVars = true;
      continue;
    }
    // Strip internal whitespace; "x1 ^2" is not meaningful anyway.
    std::string compact;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    gens.push_back(detail::parseMonomialLine(compact, lineNo, varIndex, static_cast<int>(names.size())));
  }
  if (!haveVars) throw std::runtime_error("ideal parse error: missing 'vars:' header");
  return NamedIdeal{minimalize(static_cast<int>(names.size()), std::move(gens)), std::move(names)};
}

inline NamedIdeal parseIdealString(const std::string& text) {
  std::istringstream in(text);
  return parseIdeal(in);
}

inline std::vector<std::string> defaultVarNames(int arity) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(arity));
  for (int i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

inline std::string formatMonomial(const ExponentVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < e.arity(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[static_cast<std::size_t>(i)];
    if (e[i] != 1) out += "^" + e[i].get_str();
  }
  return out.empty() ? "1" : out;
}

inline std::string formatIdeal(const MonomialIdeal& I, std::vector<std::string> names = {}) {
  if (names.empty()) names = defaultVarNames(I.arity());
  if (static_cast<int>(names.size()) != I.arity())
    throw std::invalid_argument("formatIdeal: name count does not match arity");
  std::string out = "vars:";
  for (const auto& n : names) out += " " + n;
  out += '\n';
  for (const auto& g : I.generators()) out += formatMonomial(g, names) + "\n";
  return out;
}

// Compact one-line rendering for reports and logs: "(x1^2, x2*x3)".
inline std::string describeIdeal(const MonomialIdeal& I, std::vector<std::string> names = {}) {
  if (names.empty()) names = defaultVarNames(I.arity());
  if (I.isZero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& g : I.generators()) {
    if (!first) out += ", ";
    first = false;
    out += formatMonomial(g, names);
  }
  return out + ")";
}

}  // namespace idealab
