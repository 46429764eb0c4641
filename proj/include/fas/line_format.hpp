#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fas/common.hpp"

namespace fas {

// Shared plumbing for the line-delimited key=value file formats. Values may
// not contain whitespace; keys are bare identifiers. A record line looks like
//   image_ref=img_000017 subject=3 label=spoof ...
// Files start with a fixed version header line and may carry '#'-prefixed
// metadata lines of the same key=value shape.
using KvPairs = std::vector<std::pair<std::string, std::string>>;

KvPairs parse_kv_line(const std::string& line, const std::string& context);
std::string format_kv_line(const KvPairs& pairs);

// Returns the value for `key`, or throws ParseError naming the context.
const std::string& kv_get(const KvPairs& pairs, const std::string& key,
                          const std::string& context);
const std::string* kv_find(const KvPairs& pairs, const std::string& key);

int64_t parse_int(const std::string& s, const std::string& context);
double parse_double(const std::string& s, const std::string& context);

// Shortest representation that round-trips the double exactly.
std::string format_double(double v);

}  // namespace fas
