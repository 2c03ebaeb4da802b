#pragma once

#include <cstdint>
#include <string>

namespace cutlab {

// Resource caps for the exact oracles. Exceeding one raises Error::Code::cap;
// results below the caps are exact, there is no approximate fallback.
struct Caps {
  int vertex_enum_dim = 10;        // enumerate_vertices dimension cap
  int distance_points = 12;        // sq_distance vertex-count cap
  std::int64_t hull_box_cells = 1000000;  // integer enumeration: product of ranges
  int gomory_iters = 400;          // gomory_loop iteration cap
  int chromatic_nodes = 16;        // stable-set enumeration cap
  std::int64_t budget_ms = 0;      // 0 = no wall-clock budget

  // Applies overrides from a JSON object string, e.g. {"cap_n": 8}. Unknown
  // keys are rejected. Empty string is a no-op.
  void apply_json(const std::string& json);
  std::string to_json() const;
};

}  // namespace cutlab
