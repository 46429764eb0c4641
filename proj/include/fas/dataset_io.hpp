#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fas/types.hpp"

namespace fas {

// Annotation files are UTF-8, line-delimited key=value records with a
// required version header line ("fas-dataset v1"). save_annotations emits
// the canonical form; save(load(f)) is byte-identical for canonical files.
Dataset load_annotations(const std::filesystem::path& path);
Dataset load_annotations(std::istream& in, const std::string& origin);
void save_annotations(const Dataset& d, const std::filesystem::path& path);
void save_annotations(const Dataset& d, std::ostream& out);

// Sensor registry files use the same convention with header "fas-registry v1".
SensorRegistry load_sensor_registry(const std::filesystem::path& path);
SensorRegistry load_sensor_registry(std::istream& in, const std::string& origin);
void save_sensor_registry(const SensorRegistry& r, const std::filesystem::path& path);
void save_sensor_registry(const SensorRegistry& r, std::ostream& out);

std::string format_sample_line(const AnnotatedSample& s);
AnnotatedSample parse_sample_line(const std::string& line);

}  // namespace fas
