#include "fas/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fas/common.hpp"

namespace fas {

SensorRegistry default_sensor_registry() {
  SensorRegistry r;
  for (const auto group : {SensorGroup::kLow, SensorGroup::kMid, SensorGroup::kHigh}) {
    for (int i = 0; i < 2; ++i) {
      r.groups.emplace(to_string(group) + "_cam" + std::to_string(i), group);
    }
  }
  return r;
}

Dataset generate_synthetic(int n_subjects, int images_per_subject, double live_ratio,
                           uint64_t seed) {
  SyntheticOptions opts;
  opts.n_subjects = n_subjects;
  opts.images_per_subject = images_per_subject;
  opts.live_ratio = live_ratio;
  opts.seed = seed;
  return generate_synthetic(opts);
}

Dataset generate_synthetic(const SyntheticOptions& opts) {
  if (opts.n_subjects < 1) throw ValidationError("generate_synthetic: n_subjects must be >= 1");
  if (opts.images_per_subject < 1) {
    throw ValidationError("generate_synthetic: images_per_subject must be >= 1");
  }
  if (!(opts.live_ratio > 0.0 && opts.live_ratio < 1.0)) {
    throw ValidationError("generate_synthetic: live_ratio must be in (0, 1)");
  }

  const int n_subjects = opts.n_subjects;
  const int per_subject = opts.images_per_subject;
  const int64_t total = static_cast<int64_t>(n_subjects) * per_subject;
  const int64_t live_quota = std::llround(opts.live_ratio * static_cast<double>(total));

  // Spread the live quota across subjects: base count everywhere, remainder
  // on the first subjects. Clamped so n_subjects=1 or extreme ratios still
  // produce a valid distribution summing to the quota.
  std::vector<int> live_per_subject(n_subjects, 0);
  {
    int64_t remaining = live_quota;
    const int base = static_cast<int>(live_quota / n_subjects);
    for (int s = 0; s < n_subjects; ++s) {
      live_per_subject[s] = base;
      remaining -= base;
    }
    for (int s = 0; remaining > 0; s = (s + 1) % n_subjects) {
      if (live_per_subject[s] < per_subject) {
        ++live_per_subject[s];
        --remaining;
      }
    }
  }

  const SensorRegistry registry = default_sensor_registry();
  std::vector<std::string> sensor_ids;
  for (const auto& [id, group] : registry.groups) sensor_ids.push_back(id);

  rnd::Rng rng(opts.seed);
  Dataset d;
  d.samples.reserve(static_cast<size_t>(total));
  d.set_provenance("name", opts.name);
  d.set_provenance("version", "1");
  d.set_provenance("seed", std::to_string(opts.seed));

  // Attack media / spoof conditions cycle through their enums (offset by a
  // seeded phase) so every value is covered once counts are large enough.
  int64_t spoof_counter = static_cast<int64_t>(rng.uniform_int(0, 9));
  int64_t image_counter = 0;

  for (int subject = 0; subject < n_subjects; ++subject) {
    AttributeBits attrs{};
    for (int a = 0; a < kNumFaceAttributes; ++a) {
      attrs[a] = rng.bernoulli(0.35) ? 1 : 0;
    }

    for (int img = 0; img < per_subject; ++img) {
      AnnotatedSample s;
      s.subject_id = subject;
      char ref[32];  // zero-padded for stable lexicographic diffs
      std::snprintf(ref, sizeof(ref), "img_%06lld", static_cast<long long>(image_counter));
      s.image_ref = ref;
      ++image_counter;
      s.face_attributes = attrs;

      const bool live = img < live_per_subject[subject];
      if (live) {
        s.label = Label::kLive;
        s.spoof_type = SpoofType::kNoAttack;
        s.illumination = Illumination::kNoIllumination;
        s.environment = Environment::kNone;
      } else {
        s.label = Label::kSpoof;
        s.spoof_type = static_cast<SpoofType>(1 + (spoof_counter % 10));
        s.illumination = static_cast<Illumination>(1 + (spoof_counter % 4));
        s.environment = (spoof_counter % 2 == 0) ? Environment::kIndoor
                                                 : Environment::kOutdoor;
        ++spoof_counter;
      }
      s.sensor_id = sensor_ids[static_cast<size_t>(
          rng.uniform_int(0, static_cast<int64_t>(sensor_ids.size()) - 1))];

      s.face_box.x = static_cast<int>(rng.uniform_int(0, 64));
      s.face_box.y = static_cast<int>(rng.uniform_int(0, 64));
      s.face_box.w = static_cast<int>(rng.uniform_int(24, 160));
      s.face_box.h = static_cast<int>(rng.uniform_int(24, 160));

      d.samples.push_back(std::move(s));
    }
  }

  validate_dataset(d, &registry);
  return d;
}

std::vector<std::string> select_spoof_instruments(const Dataset& dataset, int k) {
  if (k < 1) throw ValidationError("select_spoof_instruments: k must be >= 1");
  for (const auto& s : dataset.samples) {
    if (s.label != Label::kLive) {
      throw ValidationError("select_spoof_instruments: dataset must contain only live "
                            "samples (found spoof '" + s.image_ref + "')");
    }
  }

  // Group sample indices by subject, subjects ordered by first appearance.
  std::vector<int64_t> subject_order;
  std::map<int64_t, std::vector<size_t>> by_subject;
  for (size_t i = 0; i < dataset.samples.size(); ++i) {
    const auto& s = dataset.samples[i];
    auto [it, inserted] = by_subject.try_emplace(s.subject_id);
    if (inserted) subject_order.push_back(s.subject_id);
    it->second.push_back(i);
  }

  std::vector<std::string> selected;
  for (const int64_t subject : subject_order) {
    auto indices = by_subject[subject];
    // stable: equal areas keep dataset order, earlier record wins at the cut
    std::stable_sort(indices.begin(), indices.end(), [&](size_t a, size_t b) {
      return dataset.samples[a].face_box.area() > dataset.samples[b].face_box.area();
    });
    const size_t take = std::min<size_t>(indices.size(), static_cast<size_t>(k));
    for (size_t i = 0; i < take; ++i) {
      selected.push_back(dataset.samples[indices[i]].image_ref);
    }
  }
  return selected;
}

}  // namespace fas
