#include "sunsys/diff.hpp"

#include <algorithm>
#include <set>

#include "sunsys/errors.hpp"

namespace sunsys {

subgroup whole_group(const group_spec& g) { return g.elements(); }

vertex translate(const group_spec& g, const vertex& v, const group_element& t) {
  if (!v.is_point()) return v;
  vertex w = v;
  w.elem = add(g, v.elem, t);
  return w;
}

cycle translate(const group_spec& g, const cycle& c, const group_element& t) {
  cycle out;
  out.rim.reserve(c.rim.size());
  for (const auto& v : c.rim) out.rim.push_back(translate(g, v, t));
  return out;
}

sun translate(const group_spec& g, const sun& s, const group_element& t) {
  sun out;
  out.rim.reserve(s.rim.size());
  out.pendants.reserve(s.pendants.size());
  for (const auto& v : s.rim) out.rim.push_back(translate(g, v, t));
  for (const auto& v : s.pendants) out.pendants.push_back(translate(g, v, t));
  return out;
}

std::vector<edge> translate(const group_spec& g, const std::vector<edge>& es, const group_element& t) {
  std::vector<edge> out;
  out.reserve(es.size());
  for (const auto& e : es) out.emplace_back(translate(g, e.a, t), translate(g, e.b, t));
  return out;
}

namespace {

template <class Block>
subgroup stabilizer_impl(const group_spec& g, const Block& b, const subgroup& within) {
  const Block canon = canonical(b);
  subgroup out;
  for (const auto& t : within)
    if (canonical(translate(g, b, t)) == canon) out.push_back(t);
  return out;
}

void record(const group_spec& g, diff_list& d, const edge& e) {
  if (!e.a.is_point() || !e.b.is_point()) return;
  const int i = e.a.level;
  const int j = e.b.level;
  const group_element fwd = sub(g, e.b.elem, e.a.elem);
  const group_element bwd = neg(g, fwd);
  if (i == j) {
    d[{i, i}].push_back(fwd);
    d[{i, i}].push_back(bwd);
  } else {
    d[{i, j}].push_back(fwd);
    d[{j, i}].push_back(bwd);
  }
}

template <class Block>
diff_list delta_impl(const group_spec& g, const Block& b) {
  const subgroup st = stabilizer_impl(g, b, whole_group(g));
  std::set<edge> covered;
  diff_list d;
  for (const auto& e : block_edges(b)) {
    if (covered.count(e)) continue;
    for (const auto& t : st) covered.insert(edge(translate(g, e.a, t), translate(g, e.b, t)));
    record(g, d, e);
  }
  for (auto& [key, v] : d) std::sort(v.begin(), v.end());
  check_antisymmetry(g, d);
  return d;
}

}  // namespace

subgroup stabilizer(const group_spec& g, const cycle& c, const subgroup& within) {
  return stabilizer_impl(g, c, within);
}
subgroup stabilizer(const group_spec& g, const sun& s, const subgroup& within) {
  return stabilizer_impl(g, s, within);
}
subgroup stabilizer(const group_spec& g, const cycle& c) { return stabilizer_impl(g, c, whole_group(g)); }
subgroup stabilizer(const group_spec& g, const sun& s) { return stabilizer_impl(g, s, whole_group(g)); }

diff_list delta(const group_spec& g, const cycle& c) { return delta_impl(g, c); }
diff_list delta(const group_spec& g, const sun& s) { return delta_impl(g, s); }

diff_list delta_edges(const group_spec& g, const std::vector<edge>& es) {
  diff_list d;
  for (const auto& e : es) record(g, d, e);
  for (auto& [key, v] : d) std::sort(v.begin(), v.end());
  return d;
}

void merge_into(diff_list& acc, const diff_list& more) {
  for (const auto& [key, v] : more) {
    auto& dst = acc[key];
    dst.insert(dst.end(), v.begin(), v.end());
    std::sort(dst.begin(), dst.end());
  }
}

const std::vector<group_element>& diff_at(const diff_list& d, int i, int j) {
  static const std::vector<group_element> empty;
  auto it = d.find({i, j});
  return it == d.end() ? empty : it->second;
}

void check_antisymmetry(const group_spec& g, const diff_list& d) {
  for (const auto& [key, v] : d) {
    std::vector<group_element> negated;
    negated.reserve(v.size());
    for (const auto& x : diff_at(d, key.second, key.first)) negated.push_back(neg(g, x));
    std::sort(negated.begin(), negated.end());
    if (negated != v)
      throw invalid_block_error("difference lists violate antisymmetry at (" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ")");
  }
}

namespace {

template <class Block>
std::vector<vertex> neighbours_impl(const base_family<Block>& f, const vertex& inf) {
  std::vector<vertex> out;
  for (const auto& b : f.blocks)
    for (const auto& e : block_edges(b)) {
      if (e.a == inf) out.push_back(e.b);
      if (e.b == inf) out.push_back(e.a);
    }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Block>
family_report check_impl(const base_family<Block>& f) {
  family_report rep;
  for (const auto& b : f.blocks) merge_into(rep.differences, delta(f.group, b));
  for (const auto& [key, v] : rep.differences) {
    if (key.first > key.second) continue;
    auto it = std::adjacent_find(v.begin(), v.end());
    if (it != v.end()) {
      rep.differences_ok = false;
      rep.problems.push_back("repeated (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                             ")-difference " + to_string(*it));
    }
  }
  std::set<vertex> seen_inf;
  for (const auto& b : f.blocks)
    for (const auto& v : block_vertices(b))
      if (v.is_infinity()) seen_inf.insert(v);
  for (const auto& v : seen_inf)
    if (v.kind != vertex_kind::inf || v.index < 1 || v.index > f.infinities) {
      rep.infinities_ok = false;
      rep.problems.push_back("undeclared infinity " + to_string(v));
    }
  for (int u = 1; u <= f.infinities; ++u) {
    const auto nb = neighbours_impl(f, vertex::inf(u));
    std::vector<int> levels;
    bool ok = nb.size() == static_cast<std::size_t>(f.levels);
    for (const auto& v : nb) {
      if (!v.is_point()) ok = false;
      else levels.push_back(v.level);
    }
    std::sort(levels.begin(), levels.end());
    for (std::size_t i = 0; ok && i < levels.size(); ++i) ok = levels[i] == static_cast<int>(i);
    if (!ok) {
      rep.infinities_ok = false;
      rep.problems.push_back("infinity " + std::to_string(u) + " does not see exactly one vertex per level");
    }
  }
  return rep;
}

struct block_less {
  bool operator()(const cycle& a, const cycle& b) const { return a.rim < b.rim; }
  bool operator()(const sun& a, const sun& b) const {
    if (a.rim != b.rim) return a.rim < b.rim;
    return a.pendants < b.pendants;
  }
};

template <class Block>
std::vector<Block> orbit_union_impl(const group_spec& g, const std::vector<Block>& blocks, const subgroup& acting) {
  std::set<Block, block_less> out;
  for (const auto& b : blocks)
    for (const auto& t : acting) out.insert(canonical(translate(g, b, t)));
  return {out.begin(), out.end()};
}

template <class Block>
decomposition<Block> develop_impl(const base_family<Block>& f) {
  const family_report rep = check_impl(f);
  if (!rep.pass()) {
    std::string msg = "base family fails the difference conditions:";
    for (const auto& p : rep.problems) msg += " " + p + ";";
    throw precondition_error(msg);
  }
  decomposition<Block> out;
  out.host = host_graph::plus(host_graph::diff(spec_of(f.group, f.levels, rep.differences)), f.infinities);
  out.legend = *out.host.natural_labels();
  out.blocks = orbit_union_impl(f.group, f.blocks, whole_group(f.group));
  return out;
}

}  // namespace

std::vector<vertex> neighbours_of_infinity(const base_family<cycle>& f, const vertex& inf) {
  return neighbours_impl(f, inf);
}
std::vector<vertex> neighbours_of_infinity(const base_family<sun>& f, const vertex& inf) {
  return neighbours_impl(f, inf);
}

family_report check_base_family(const base_family<cycle>& f) { return check_impl(f); }
family_report check_base_family(const base_family<sun>& f) { return check_impl(f); }

diff_spec spec_of(const group_spec& g, int levels, const diff_list& d) {
  diff_spec out(g, levels);
  for (const auto& [key, v] : d)
    if (key.first <= key.second) out.add(key.first, key.second, v);
  return out;
}

std::vector<cycle> orbit_union(const group_spec& g, const std::vector<cycle>& blocks, const subgroup& acting) {
  return orbit_union_impl(g, blocks, acting);
}
std::vector<sun> orbit_union(const group_spec& g, const std::vector<sun>& blocks, const subgroup& acting) {
  return orbit_union_impl(g, blocks, acting);
}

cycle_system develop(const base_family<cycle>& f) { return develop_impl(f); }
sun_system develop(const base_family<sun>& f) { return develop_impl(f); }

std::vector<edge> dev_edges(const group_spec& g, const std::vector<edge>& es, const subgroup& acting) {
  std::set<edge> out;
  for (const auto& t : acting)
    for (const auto& e : es) out.insert(edge(translate(g, e.a, t), translate(g, e.b, t)));
  return {out.begin(), out.end()};
}

}  // namespace sunsys
