#pragma once

// Desk-scale resource guards.  Every cap can be overridden through the
// CLI's --config file; the library takes a Limits value so callers stay
// in control.

namespace domino {

struct Limits {
  // Exhaustive enumeration refuses graphs with more vertices than this
  // unless the caller forces it.
  int oracle_vertex_guard = 40;

  // Strip width cap for the 2D transfer matrix (order 2^m).
  int transfer_width_cap = 12;

  // Cross-section cell cap for 3D boxes (order 2^(k*m)).
  int box3d_cell_cap = 16;

  // Lowest index reachable by Laurent backward extrapolation.
  long laurent_depth_floor = -6;
};

}  // namespace domino
