#include "fas/types.hpp"

#include <algorithm>
#include <sstream>

namespace fas {

namespace {

const std::array<std::string, 2> kLabelNames = {"live", "spoof"};

const std::array<std::string, kNumSpoofTypes> kSpoofTypeNames = {
    "no_attack", "photo",           "poster",      "a4",
    "face_mask", "upper_body_mask", "region_mask", "pc",
    "pad",       "phone",           "3d_mask"};

const std::array<std::string, kNumIlluminations> kIlluminationNames = {
    "no_illumination", "normal", "strong", "back", "dark"};

const std::array<std::string, 3> kEnvironmentNames = {"none", "indoor", "outdoor"};

const std::array<std::string, 3> kSensorGroupNames = {"low", "mid", "high"};

const std::array<std::string, 5> kMacroTypeNames = {"none", "print", "paper_cut",
                                                    "replay", "3d"};

template <size_t N>
int index_of(const std::array<std::string, N>& names, const std::string& s) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

const std::string& to_string(Label v) { return kLabelNames[static_cast<size_t>(v)]; }
const std::string& to_string(SpoofType v) { return kSpoofTypeNames[static_cast<size_t>(v)]; }
const std::string& to_string(Illumination v) {
  return kIlluminationNames[static_cast<size_t>(v)];
}
const std::string& to_string(Environment v) {
  return kEnvironmentNames[static_cast<size_t>(v)];
}
const std::string& to_string(SensorGroup v) {
  return kSensorGroupNames[static_cast<size_t>(v)];
}
const std::string& to_string(MacroType v) { return kMacroTypeNames[static_cast<size_t>(v)]; }

Label label_from_string(const std::string& s) {
  const int i = index_of(kLabelNames, s);
  if (i < 0) throw ParseError("unknown label '" + s + "'");
  return static_cast<Label>(i);
}

SpoofType spoof_type_from_string(const std::string& s) {
  const int i = index_of(kSpoofTypeNames, s);
  if (i < 0) throw ParseError("unknown spoof_type '" + s + "'");
  return static_cast<SpoofType>(i);
}

Illumination illumination_from_string(const std::string& s) {
  const int i = index_of(kIlluminationNames, s);
  if (i < 0) throw ParseError("unknown illumination '" + s + "'");
  return static_cast<Illumination>(i);
}

Environment environment_from_string(const std::string& s) {
  const int i = index_of(kEnvironmentNames, s);
  if (i < 0) throw ParseError("unknown environment '" + s + "'");
  return static_cast<Environment>(i);
}

SensorGroup sensor_group_from_string(const std::string& s) {
  const int i = index_of(kSensorGroupNames, s);
  if (i < 0) throw ParseError("unknown sensor group '" + s + "'");
  return static_cast<SensorGroup>(i);
}

MacroType macro_type_of(SpoofType t) {
  switch (t) {
    case SpoofType::kNoAttack:
      return MacroType::kNone;
    case SpoofType::kPhoto:
    case SpoofType::kPoster:
    case SpoofType::kA4:
      return MacroType::kPrint;
    case SpoofType::kFaceMask:
    case SpoofType::kUpperBodyMask:
    case SpoofType::kRegionMask:
      return MacroType::kPaperCut;
    case SpoofType::kPc:
    case SpoofType::kPad:
    case SpoofType::kPhone:
      return MacroType::kReplay;
    case SpoofType::k3dMask:
      return MacroType::k3d;
  }
  throw ValidationError("invalid spoof_type value");
}

const std::array<std::string, kNumFaceAttributes>& face_attribute_names() {
  static const std::array<std::string, kNumFaceAttributes> kNames = {
      "5_o_Clock_Shadow", "Arched_Eyebrows",  "Attractive",        "Bags_Under_Eyes",
      "Bald",             "Bangs",            "Big_Lips",          "Big_Nose",
      "Black_Hair",       "Blond_Hair",       "Blurry",            "Brown_Hair",
      "Bushy_Eyebrows",   "Chubby",           "Double_Chin",       "Eyeglasses",
      "Goatee",           "Gray_Hair",        "Heavy_Makeup",      "High_Cheekbones",
      "Male",             "Mouth_Slightly_Open", "Mustache",       "Narrow_Eyes",
      "No_Beard",         "Oval_Face",        "Pale_Skin",         "Pointy_Nose",
      "Receding_Hairline", "Rosy_Cheeks",     "Sideburns",         "Smiling",
      "Straight_Hair",    "Wavy_Hair",        "Wearing_Earrings",  "Wearing_Hat",
      "Wearing_Lipstick", "Wearing_Necklace", "Wearing_Necktie",   "Young"};
  return kNames;
}

int face_attribute_index(const std::string& name) {
  const auto& names = face_attribute_names();
  for (int i = 0; i < kNumFaceAttributes; ++i) {
    if (names[i] == name) return i;
  }
  return -1;
}

std::string attribute_bits_to_string(const AttributeBits& bits) {
  std::string s(kNumFaceAttributes, '0');
  for (int i = 0; i < kNumFaceAttributes; ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

AttributeBits attribute_bits_from_string(const std::string& s) {
  if (s.size() != kNumFaceAttributes) {
    throw ParseError("attribute bitstring must have exactly 40 characters, got " +
                     std::to_string(s.size()));
  }
  AttributeBits bits{};
  for (int i = 0; i < kNumFaceAttributes; ++i) {
    if (s[i] == '0') {
      bits[i] = 0;
    } else if (s[i] == '1') {
      bits[i] = 1;
    } else {
      throw ParseError("attribute bitstring may contain only 0/1");
    }
  }
  return bits;
}

SensorGroup SensorRegistry::group_of(const std::string& sensor_id) const {
  const auto it = groups.find(sensor_id);
  if (it == groups.end()) {
    throw ValidationError("sensor_id '" + sensor_id + "' missing from sensor registry");
  }
  return it->second;
}

std::string Dataset::provenance_value(const std::string& key) const {
  for (const auto& [k, v] : provenance) {
    if (k == key) return v;
  }
  return {};
}

void Dataset::set_provenance(const std::string& key, const std::string& value) {
  for (auto& [k, v] : provenance) {
    if (k == key) {
      v = value;
      return;
    }
  }
  provenance.emplace_back(key, value);
}

void validate_sample(const AnnotatedSample& s) {
  const auto fail = [&](const std::string& field, const std::string& rule) {
    throw ValidationError("sample '" + s.image_ref + "': field " + field +
                          " violates rule: " + rule);
  };

  if (s.image_ref.empty()) fail("image_ref", "must be non-empty");
  if (s.subject_id < 0) fail("subject_id", "must be >= 0");
  if (s.sensor_id.empty()) fail("sensor_id", "must be non-empty");
  if (s.face_box.w <= 0 || s.face_box.h <= 0) {
    fail("face_box", "w > 0 and h > 0 required");
  }

  // live <=> no_attack <=> no_illumination <=> none, checked pairwise so the
  // message names the exact mismatching field.
  if (s.label == Label::kLive) {
    if (s.spoof_type != SpoofType::kNoAttack) {
      fail("spoof_type", "label=live requires spoof_type=no_attack");
    }
    if (s.illumination != Illumination::kNoIllumination) {
      fail("illumination", "label=live requires illumination=no_illumination");
    }
    if (s.environment != Environment::kNone) {
      fail("environment", "label=live requires environment=none");
    }
  } else {
    if (s.spoof_type == SpoofType::kNoAttack) {
      fail("spoof_type", "label=spoof requires spoof_type != no_attack");
    }
    if (s.illumination == Illumination::kNoIllumination) {
      fail("illumination", "label=spoof requires illumination != no_illumination");
    }
    if (s.environment == Environment::kNone) {
      fail("environment", "label=spoof requires environment != none");
    }
  }
}

void validate_dataset(const Dataset& d, const SensorRegistry* registry) {
  std::map<std::string, size_t> seen;
  for (size_t i = 0; i < d.samples.size(); ++i) {
    const auto& s = d.samples[i];
    validate_sample(s);
    const auto [it, inserted] = seen.emplace(s.image_ref, i);
    if (!inserted) {
      throw ValidationError("sample '" + s.image_ref +
                            "': field image_ref violates rule: values must be unique "
                            "within a dataset (first seen at record " +
                            std::to_string(it->second) + ")");
    }
    if (registry && !registry->contains(s.sensor_id)) {
      throw ValidationError("sample '" + s.image_ref +
                            "': field sensor_id violates rule: every referenced sensor "
                            "must appear in the registry");
    }
  }
}

}  // namespace fas
