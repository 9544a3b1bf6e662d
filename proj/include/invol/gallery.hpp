#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invol/involution.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"

namespace invol::gallery {

struct Expected {
  Orientation orientation = Orientation::Preserving;
  /// Closed form of the standard map, in the map grammar.
  std::optional<std::string> known_h;
  std::optional<std::string> known_foliation;
  std::string known_verdict;
};

struct Entry {
  std::string name;
  std::optional<int> n;
  PlanarMap map;
  Expected expected;
  Region default_window;
  /// Human-readable formula of the involution.
  std::string formula;
  /// Worked-example label, e.g. "A(iii)"; empty for linear baselines.
  std::string example_tag;
  std::string notes;
};

/// A1..A4, B, C and the linear baselines identity, minus-identity, flip-y.
std::vector<std::string> list_entries();

/// n (>= 0, default 1) applies to A1..A4 and must be absent for the others.
/// A2 and A4 with n = 0 do not fix the origin and are returned recentered at
/// their fixed point. Throws UnknownEntryError or ConfigurationError.
Entry get(const std::string& name, std::optional<int> n = std::nullopt);

/// Parses "NAME" or "NAME:n"; A1..A4 default to n = 1.
Entry get_spec(const std::string& spec);

bool takes_parameter(const std::string& name);

/// The orientation-preserving involution psi = rho o (-I) that is the
/// identity's deformation by rotations near (3,3) and (-3,-3). psi equals
/// p - (6,6) on the unit ball about (3,3), so Dpsi = I there.
PlanarMap example_c_map();

/// C^1 bump: pi on [-1, 1], 0 outside (-2, 2), smoothstep in between.
double example_c_eta(double t);

}  // namespace invol::gallery
