#pragma once

namespace majcl {

/// Caps on the exponential enumerations (permutation orbits, subset scans).
struct Limits {
  int orbit_cap = 8;
  int subset_cap = 20;
};

/// Defaults, with MF_ORBIT_CAP overriding the orbit cap when set.
Limits limits_from_env();

}  // namespace majcl
