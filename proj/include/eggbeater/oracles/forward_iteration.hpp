#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eggbeater/fixed_points.hpp"
#include "eggbeater/geometry.hpp"

// Independent check of solver output: push z_0 through the actual maps
// (shear power, deck translation, gluing) one syllable at a time.
namespace eggbeater::oracles {

struct ForwardOrbit {
  /// z_0, z_1, ..., z_{2r}; the last entry is the image of z_0.
  std::vector<PlanePoint> points;
  /// Lattice levels reached by each shear, in word order.
  std::vector<std::int64_t> windings;
  /// Set when the orbit leaves the domain of a map (square or winding window).
  std::optional<std::string> error;
};

ForwardOrbit forward_iterate(const PlanePoint& z0, const BalancedWord& w, const ModelParams& params);

/// a^{n_1} b^{m_1} ... read from the traced windings.
HomotopyWord traced_class(const ForwardOrbit& orbit);

struct ForwardCheck {
  bool closure = false;
  bool intermediates_match = false;
  bool class_matches = false;
  std::optional<std::string> error;
  bool ok() const { return closure && intermediates_match && class_matches && !error; }
};

ForwardCheck check_record(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params);

}  // namespace eggbeater::oracles
