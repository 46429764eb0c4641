#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fas/common.hpp"

namespace fas {

inline constexpr int kNumFaceAttributes = 40;
inline constexpr int kNumSpoofTypes = 11;    // no_attack + 10 attack media
inline constexpr int kNumIlluminations = 5;  // no_illumination + 4 conditions

enum class Label : uint8_t { kLive = 0, kSpoof = 1 };

// Micro spoof types. Index 0 is the "first label" used for live samples;
// the remaining ten are the attack media, grouped into four macro types.
enum class SpoofType : uint8_t {
  kNoAttack = 0,
  // print
  kPhoto = 1,
  kPoster = 2,
  kA4 = 3,
  // paper cut
  kFaceMask = 4,
  kUpperBodyMask = 5,
  kRegionMask = 6,
  // replay
  kPc = 7,
  kPad = 8,
  kPhone = 9,
  // 3d
  k3dMask = 10,
};

enum class MacroType : uint8_t { kNone = 0, kPrint, kPaperCut, kReplay, k3d };

// Index 0 is the "first label" used for live samples.
enum class Illumination : uint8_t {
  kNoIllumination = 0,
  kNormal = 1,
  kStrong = 2,
  kBack = 3,
  kDark = 4,
};

enum class Environment : uint8_t { kNone = 0, kIndoor = 1, kOutdoor = 2 };

enum class SensorGroup : uint8_t { kLow = 0, kMid = 1, kHigh = 2 };

using AttributeBits = std::array<uint8_t, kNumFaceAttributes>;

struct FaceBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  long long area() const { return static_cast<long long>(w) * h; }
  bool operator==(const FaceBox&) const = default;
};

// One annotated image record.
struct AnnotatedSample {
  std::string image_ref;
  int64_t subject_id = 0;
  Label label = Label::kLive;
  AttributeBits face_attributes{};
  SpoofType spoof_type = SpoofType::kNoAttack;
  Illumination illumination = Illumination::kNoIllumination;
  Environment environment = Environment::kNone;
  std::string sensor_id;
  FaceBox face_box;

  bool is_live() const { return label == Label::kLive; }
  bool operator==(const AnnotatedSample&) const = default;
};

// Maps each sensor id onto an image-quality group.
struct SensorRegistry {
  std::map<std::string, SensorGroup> groups;

  SensorGroup group_of(const std::string& sensor_id) const;
  bool contains(const std::string& sensor_id) const { return groups.count(sensor_id) > 0; }
};

struct Dataset {
  std::vector<AnnotatedSample> samples;
  // Provenance, serialized on the metadata line in file order.
  std::vector<std::pair<std::string, std::string>> provenance;

  size_t size() const { return samples.size(); }
  std::string provenance_value(const std::string& key) const;
  void set_provenance(const std::string& key, const std::string& value);
};

// Enum <-> string tables (stable identifiers; these are the names used by
// every file format and CLI flag).
const std::string& to_string(Label v);
const std::string& to_string(SpoofType v);
const std::string& to_string(Illumination v);
const std::string& to_string(Environment v);
const std::string& to_string(SensorGroup v);
const std::string& to_string(MacroType v);

Label label_from_string(const std::string& s);
SpoofType spoof_type_from_string(const std::string& s);
Illumination illumination_from_string(const std::string& s);
Environment environment_from_string(const std::string& s);
SensorGroup sensor_group_from_string(const std::string& s);

MacroType macro_type_of(SpoofType t);

// The 40 face attribute names (CelebA attribute set), in bit order.
const std::array<std::string, kNumFaceAttributes>& face_attribute_names();
int face_attribute_index(const std::string& name);  // -1 when unknown

std::string attribute_bits_to_string(const AttributeBits& bits);
AttributeBits attribute_bits_from_string(const std::string& s);

// Record-level invariants; throws ValidationError naming field and rule.
void validate_sample(const AnnotatedSample& s);

// Dataset-level invariants (per-record checks plus image_ref uniqueness and,
// when a registry is supplied, sensor membership).
void validate_dataset(const Dataset& d, const SensorRegistry* registry = nullptr);

}  // namespace fas
