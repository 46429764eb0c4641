#include "fas/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include "fas/line_format.hpp"

namespace fas {

namespace {

constexpr const char* kDatasetHeader = "fas-dataset v1";
constexpr const char* kRegistryHeader = "fas-registry v1";

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline translation
  if (!out) throw ValidationError("cannot write file: " + path.string());
  return out;
}

void expect_header(std::istream& in, const std::string& origin, const char* header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ParseError(origin + ": line 1: expected version header '" + std::string(header) +
                     "'");
  }
}

}  // namespace

std::string format_sample_line(const AnnotatedSample& s) {
  std::ostringstream out;
  out << "image_ref=" << s.image_ref << " subject=" << s.subject_id
      << " label=" << to_string(s.label) << " spoof_type=" << to_string(s.spoof_type)
      << " illumination=" << to_string(s.illumination)
      << " environment=" << to_string(s.environment) << " sensor=" << s.sensor_id
      << " box=" << s.face_box.x << ',' << s.face_box.y << ',' << s.face_box.w << ','
      << s.face_box.h << " attrs=" << attribute_bits_to_string(s.face_attributes);
  return out.str();
}

AnnotatedSample parse_sample_line(const std::string& line) {
  const std::string ctx = "annotation record";
  const KvPairs kv = parse_kv_line(line, ctx);
  AnnotatedSample s;
  s.image_ref = kv_get(kv, "image_ref", ctx);
  s.subject_id = parse_int(kv_get(kv, "subject", ctx), ctx + " subject");
  s.label = label_from_string(kv_get(kv, "label", ctx));
  s.spoof_type = spoof_type_from_string(kv_get(kv, "spoof_type", ctx));
  s.illumination = illumination_from_string(kv_get(kv, "illumination", ctx));
  s.environment = environment_from_string(kv_get(kv, "environment", ctx));
  s.sensor_id = kv_get(kv, "sensor", ctx);

  const std::string& box = kv_get(kv, "box", ctx);
  int fields[4];
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const size_t comma = (i < 3) ? box.find(',', pos) : box.size();
    if (comma == std::string::npos) {
      throw ParseError(ctx + ": box must be x,y,w,h, got '" + box + "'");
    }
    fields[i] = static_cast<int>(parse_int(box.substr(pos, comma - pos), ctx + " box"));
    pos = comma + 1;
  }
  s.face_box = {fields[0], fields[1], fields[2], fields[3]};
  s.face_attributes = attribute_bits_from_string(kv_get(kv, "attrs", ctx));
  return s;
}

Dataset load_annotations(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_annotations(in, path.string());
}

Dataset load_annotations(std::istream& in, const std::string& origin) {
  expect_header(in, origin, kDatasetHeader);
  Dataset d;
  std::string line;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      // Metadata line: "# key=value ...". Preserved for round-tripping.
      const auto kv = parse_kv_line(line.substr(1), origin + ": line " +
                                                        std::to_string(line_no));
      for (const auto& [k, v] : kv) d.provenance.emplace_back(k, v);
      continue;
    }
    try {
      d.samples.push_back(parse_sample_line(line));
    } catch (const ParseError& e) {
      throw ParseError(origin + ": line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate_dataset(d);
  return d;
}

void save_annotations(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  save_annotations(d, out);
}

void save_annotations(const Dataset& d, std::ostream& out) {
  out << kDatasetHeader << '\n';
  if (!d.provenance.empty()) out << "# " << format_kv_line(d.provenance) << '\n';
  for (const auto& s : d.samples) out << format_sample_line(s) << '\n';
}

SensorRegistry load_sensor_registry(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return load_sensor_registry(in, path.string());
}

SensorRegistry load_sensor_registry(std::istream& in, const std::string& origin) {
  expect_header(in, origin, kRegistryHeader);
  SensorRegistry r;
  std::string line;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::string ctx = origin + ": line " + std::to_string(line_no);
    const KvPairs kv = parse_kv_line(line, ctx);
    const std::string& sensor = kv_get(kv, "sensor", ctx);
    const SensorGroup group = sensor_group_from_string(kv_get(kv, "group", ctx));
    if (!r.groups.emplace(sensor, group).second) {
      throw ValidationError(ctx + ": sensor '" + sensor +
                            "' appears more than once in the registry");
    }
  }
  return r;
}

void save_sensor_registry(const SensorRegistry& r, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  save_sensor_registry(r, out);
}

void save_sensor_registry(const SensorRegistry& r, std::ostream& out) {
  out << kRegistryHeader << '\n';
  for (const auto& [sensor, group] : r.groups) {
    out << "sensor=" << sensor << " group=" << to_string(group) << '\n';
  }
}

}  // namespace fas
