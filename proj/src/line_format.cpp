#include "fas/line_format.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace fas {

KvPairs parse_kv_line(const std::string& line, const std::string& context) {
  KvPairs pairs;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(context + ": token '" + token + "' is not key=value");
    }
    pairs.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return pairs;
}

std::string format_kv_line(const KvPairs& pairs) {
  std::string out;
  for (const auto& [k, v] : pairs) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

const std::string& kv_get(const KvPairs& pairs, const std::string& key,
                          const std::string& context) {
  if (const std::string* v = kv_find(pairs, key)) return *v;
  throw ParseError(context + ": missing required field '" + key + "'");
}

const std::string* kv_find(const KvPairs& pairs, const std::string& key) {
  for (const auto& [k, v] : pairs) {
    if (k == key) return &v;
  }
  return nullptr;
}

int64_t parse_int(const std::string& s, const std::string& context) {
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(context + ": '" + s + "' is not an integer");
  }
  return value;
}

double parse_double(const std::string& s, const std::string& context) {
  if (s.empty()) throw ParseError(context + ": empty number");
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw ParseError(context + ": '" + s + "' is not a number");
  }
  return value;
}

std::string format_double(double v) {
  // Try increasing precision until the text parses back to the same bits.
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace fas
