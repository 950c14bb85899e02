#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sunsys/graph.hpp"
#include "sunsys/group.hpp"

namespace sunsys {

// Subgroup of G given by its sorted element list.
using subgroup = std::vector<group_element>;

subgroup whole_group(const group_spec& g);

// Per level pair (i, j) the sorted multiset of (i, j)-differences.  Both
// orientations are recorded, so delta[(i,j)] = -delta[(j,i)].
using diff_list = std::map<std::pair<int, int>, std::vector<group_element>>;

vertex translate(const group_spec& g, const vertex& v, const group_element& t);
cycle translate(const group_spec& g, const cycle& c, const group_element& t);
sun translate(const group_spec& g, const sun& s, const group_element& t);
std::vector<edge> translate(const group_spec& g, const std::vector<edge>& es, const group_element& t);

// Translations in `within` fixing the block.
subgroup stabilizer(const group_spec& g, const cycle& c, const subgroup& within);
subgroup stabilizer(const group_spec& g, const sun& s, const subgroup& within);
subgroup stabilizer(const group_spec& g, const cycle& c);
subgroup stabilizer(const group_spec& g, const sun& s);

// Partial mixed differences over one edge transversal of the stabilizer.
diff_list delta(const group_spec& g, const cycle& c);
diff_list delta(const group_spec& g, const sun& s);
// Differences of a plain edge list (every edge counted once).
diff_list delta_edges(const group_spec& g, const std::vector<edge>& es);

void merge_into(diff_list& acc, const diff_list& more);
const std::vector<group_element>& diff_at(const diff_list& d, int i, int j);
// Asserts delta[(i,j)] = -delta[(j,i)]; throws invalid_block_error otherwise.
void check_antisymmetry(const group_spec& g, const diff_list& d);

template <class Block>
struct base_family {
  group_spec group;
  int levels = 1;
  int infinities = 0;
  std::vector<Block> blocks;
};

template <class Block>
struct decomposition {
  host_graph host;
  std::vector<vertex> legend;
  std::vector<Block> blocks;
};

using sun_system = decomposition<sun>;
using cycle_system = decomposition<cycle>;

// Multiset of vertices adjacent to `inf` across the family.
std::vector<vertex> neighbours_of_infinity(const base_family<cycle>& f, const vertex& inf);
std::vector<vertex> neighbours_of_infinity(const base_family<sun>& f, const vertex& inf);

struct family_report {
  bool differences_ok = true;
  bool infinities_ok = true;
  std::vector<std::string> problems;
  diff_list differences;
  bool pass() const { return differences_ok && infinities_ok; }
};

// The two conditions of the mixed difference method: no repeated
// difference, and each infinity sees exactly one vertex per level.
family_report check_base_family(const base_family<cycle>& f);
family_report check_base_family(const base_family<sun>& f);

// DiffSpec generated by the family's differences.
diff_spec spec_of(const group_spec& g, int levels, const diff_list& d);

// Union of the orbits of the blocks under `acting`, canonicalised and in
// canonical block order.  Distinct translates only.
std::vector<cycle> orbit_union(const group_spec& g, const std::vector<cycle>& blocks, const subgroup& acting);
std::vector<sun> orbit_union(const group_spec& g, const std::vector<sun>& blocks, const subgroup& acting);

// Full-group development of a family that passes check_base_family, paired
// with its host <Delta F> + w.  Throws precondition_error otherwise.
cycle_system develop(const base_family<cycle>& f);
sun_system develop(const base_family<sun>& f);

// Dev of an edge list: the union of all translates under `acting`.
std::vector<edge> dev_edges(const group_spec& g, const std::vector<edge>& es, const subgroup& acting);

}  // namespace sunsys
