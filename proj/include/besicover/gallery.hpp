#ifndef BESICOVER_GALLERY_HPP
#define BESICOVER_GALLERY_HPP

#include <string>
#include <vector>

#include "besicover/space_io.hpp"

namespace besicover {

struct GalleryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GalleryReport {
  std::string case_id;
  int n = 0;
  std::vector<GalleryCheck> checks;
  bool all_pass = false;
};

// Named machine-checked cases:
//   counter07       nested closed balls on the bounded ultrametric 1..N
//   notSBCP         the cross-metric grid and its unit-ball families
//   discrete        the 0-1 metric on n points
//   eqrad_ultra     equal-radius covers on random dendrogram ultrametrics
//   constants_chain doubling/Besicovitch constant chain on lattices
// Throws UnknownCase for anything else.
GalleryReport run_case(const std::string& case_id, int n);

const std::vector<std::string>& gallery_case_ids();

Json gallery_report_to_json(const GalleryReport& report);

}  // namespace besicover

#endif
