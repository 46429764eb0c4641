#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fas/types.hpp"

namespace fas {

// Registry used by generated datasets: two sensors per quality group.
SensorRegistry default_sensor_registry();

struct SyntheticOptions {
  int n_subjects = 1;
  int images_per_subject = 1;
  double live_ratio = 0.25;  // defaults to the 1:3 live:spoof ratio
  uint64_t seed = 0;
  std::string name = "synthetic";
};

// Deterministic desk-scale dataset satisfying every schema invariant. The
// live quota is exact (round(live_ratio * total)), spread across subjects so
// most subjects carry both live and spoof images of themselves.
Dataset generate_synthetic(const SyntheticOptions& opts);
Dataset generate_synthetic(int n_subjects, int images_per_subject, double live_ratio,
                           uint64_t seed);

// Top-k source-image selection per subject, ranked by face area (w*h)
// descending; ties and grouping follow dataset order. Requires an all-live
// dataset and k >= 1.
std::vector<std::string> select_spoof_instruments(const Dataset& dataset, int k);

}  // namespace fas
