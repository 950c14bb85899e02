#pragma once

#include <string>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"

namespace sunsys {

struct verify_report {
  bool pass = false;
  std::size_t block_count = 0;
  long long expected_blocks = 0;
  long long host_edges = 0;
  // "block i: reason" entries for blocks of the wrong shape or size.
  std::vector<std::string> malformed;
  // Host edges no block covers, as legend index pairs.
  std::vector<index_edge> uncovered;
  // Block edges covered more than once or absent from the host.
  std::vector<index_edge> surplus;
  std::vector<std::string> problems;

  std::string summary() const;
};

// Exact multiset comparison of the block edges against the host edges.
// `legend` lists the host's vertices in canonical numbering order.
verify_report verify_blocks(const host_graph& host, const std::vector<vertex>& legend, int k,
                            const std::vector<sun>& blocks);
verify_report verify_blocks(const host_graph& host, const std::vector<vertex>& legend, int k,
                            const std::vector<cycle>& blocks);

inline verify_report verify_system(const sun_system& s, int k) { return verify_blocks(s.host, s.legend, k, s.blocks); }
inline verify_report verify_system(const cycle_system& s, int k) { return verify_blocks(s.host, s.legend, k, s.blocks); }

// Throws verification_error with the report summary when verification fails.
void require_valid(const sun_system& s, int k, const std::string& what);
void require_valid(const cycle_system& s, int k, const std::string& what);

}  // namespace sunsys
