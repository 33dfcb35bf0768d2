// Line-oriented config documents: `key = value` pairs with optional
// `[section]` headers, `#` comments, blank lines ignored.
#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamatr {

struct ConfigEntry {
  std::string key;
  std::string value;
};

struct ConfigDoc {
  // insertion order preserved per section; lookup by section name
  std::vector<std::pair<std::string, std::vector<ConfigEntry>>> sections;

  const std::vector<ConfigEntry>* find(const std::string& name) const {
    for (const auto& [sec, entries] : sections)
      if (sec == name) return &entries;
    return nullptr;
  }
  bool has(const std::string& name) const { return find(name) != nullptr; }
};

inline std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline ConfigDoc parse_config_text(const std::string& text) {
  ConfigDoc doc;
  doc.sections.emplace_back("", std::vector<ConfigEntry>{});
  std::size_t current = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": malformed section header");
      doc.sections.emplace_back(trim(t.substr(1, t.size() - 2)), std::vector<ConfigEntry>{});
      current = doc.sections.size() - 1;
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    ConfigEntry e{trim(t.substr(0, eq)), trim(t.substr(eq + 1))};
    if (e.key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    doc.sections[current].second.push_back(std::move(e));
  }
  return doc;
}

inline ConfigDoc load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

inline double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (trim(v.substr(pos)).empty()) return d;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config key '" + key + "': not a number: " + v);
}

inline long long parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long long i = std::stoll(v, &pos);
    if (trim(v.substr(pos)).empty()) return i;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config key '" + key + "': not an integer: " + v);
}

// shortest decimal form that round-trips an IEEE double
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace gamatr
