#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"

// Exact-cover search for k-sun and k-cycle systems of small hosts.  Columns
// are host edges, or edge orbits under a translation group; rows are blocks
// generated lazily through the first uncovered column.
namespace sunsys::search {

enum class block_kind { sun, cycle };

enum class outcome {
  found,
  impossible,    // exhaustive search without symmetry, or a counting condition
  exhausted,     // no system invariant under the chosen symmetry
  cap_exceeded,  // time or node cap hit first
};

std::string to_string(outcome o);

struct options {
  double time_cap_seconds = 10.0;
  long long node_cap = 0;  // 0 = no node cap
  std::uint32_t seed = 1;
  // Translation group order for complete hosts: vertices are laid out as
  // Z_m x [0, L-1] plus at most one fixed point.  0 picks automatically,
  // 1 disables symmetry.
  int symmetry = 0;
};

struct result {
  outcome status = outcome::cap_exceeded;
  int symmetry = 1;
  long long nodes = 0;
  std::string reason;
  sun_system suns;      // kind == sun and status == found
  cycle_system cycles;  // kind == cycle and status == found
};

// Searches `host` (vertices named by `legend` in host order).  A found
// system is verified before it is returned.
result exact_cover_search(const host_graph& host, const std::vector<vertex>& legend, int k, block_kind kind,
                          const options& opt = {});

// The same on K_v with the points 0..v-1.
result search_complete(int k, int v, block_kind kind, const options& opt = {});

}  // namespace sunsys::search
