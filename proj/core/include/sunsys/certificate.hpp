#pragma once

#include <string>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"
#include "sunsys/verify.hpp"

namespace sunsys {

// Self-contained, serialisable decomposition: host descriptor, vertex
// legend in host numbering order, and the block list.
struct certificate {
  int format = 1;
  std::string kind;  // "sun-system" or "cycle-system"
  int k = 0;
  host_graph host;
  std::vector<vertex> legend;
  std::vector<sun> suns;
  std::vector<cycle> cycles;
};

certificate make_certificate(const sun_system& s, int k);
certificate make_certificate(const cycle_system& s, int k);

// Deterministic JSON text: fixed key order, one vertex or block per line.
std::string to_json(const certificate& c);
// Throws parse_error on malformed input.
certificate certificate_from_json(const std::string& text);

std::string vertex_to_json(const vertex& v);
std::string host_to_json(const host_graph& h);

// Independent check of a certificate: only its own contents are used.
verify_report verify(const certificate& c);

}  // namespace sunsys
