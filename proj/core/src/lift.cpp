#include "sunsys/lift.hpp"

#include <algorithm>

#include "sunsys/errors.hpp"

namespace sunsys::lift {

vertex overline_map::operator()(const vertex& v) const {
  vertex w = v;
  switch (v.kind) {
    case vertex_kind::point:
      if (v.level < 0 || v.level > 3) throw precondition_error("overline: level outside [0,3]");
      w.level = static_cast<std::int16_t>(v.level >= 2 ? v.level - 2 : v.level + 2);
      break;
    case vertex_kind::inf:
      if (v.index < 1 || v.index > 2 * u) throw precondition_error("overline: infinity outside [1,2u]");
      w.index = v.index > u ? v.index - u : v.index + u;
      break;
    case vertex_kind::inf_primed:
      break;
  }
  return w;
}

edge overline_map::operator()(const edge& e) const { return edge((*this)(e.a), (*this)(e.b)); }

cycle overline_map::operator()(const cycle& c) const {
  cycle out;
  for (const auto& v : c.rim) out.rim.push_back((*this)(v));
  return out;
}

sun overline_map::operator()(const sun& s) const {
  sun out;
  for (const auto& v : s.rim) out.rim.push_back((*this)(v));
  for (const auto& v : s.pendants) out.pendants.push_back((*this)(v));
  return out;
}

std::vector<sun> overline_map::operator()(const std::vector<sun>& ss) const {
  std::vector<sun> out;
  out.reserve(ss.size());
  for (const auto& s : ss) out.push_back((*this)(s));
  return out;
}

std::vector<edge> blowup_edges(const std::vector<edge>& edges, const overline_map& bar) {
  std::vector<edge> out;
  out.reserve(4 * edges.size());
  for (const auto& e : edges) {
    const vertex xb = bar(e.a);
    const vertex yb = bar(e.b);
    out.emplace_back(e.a, e.b);
    out.emplace_back(e.a, yb);
    out.emplace_back(xb, e.b);
    out.emplace_back(xb, yb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<edge> one_factor(const group_spec& group, const overline_map& bar) {
  std::vector<edge> out;
  for (int level = 0; level < 2; ++level)
    for (const auto& x : group.elements()) {
      const vertex z = vertex::point(x, level);
      out.emplace_back(z, bar(z));
    }
  std::sort(out.begin(), out.end());
  return out;
}

sun sun_from_cycle(const cycle& c, const std::vector<bool>& choices, const overline_map& bar) {
  const std::size_t k = c.rim.size();
  if (!choices.empty() && choices.size() != k) throw precondition_error("one choice per cycle vertex");
  for (const auto& v : c.rim)
    if ((v.is_point() && v.level > 1) || (v.kind == vertex_kind::inf && v.index > bar.u))
      throw precondition_error("sun_from_cycle needs a cycle over Z_M x {0,1} u {inf_1..inf_u}");
  std::vector<vertex> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = !choices.empty() && choices[i] ? bar(c.rim[i]) : c.rim[i];
  sun out;
  out.rim = s;
  for (std::size_t i = 0; i < k; ++i) out.pendants.push_back(bar(s[(i + 1) % k]));
  return out;
}

sun sigma(const cycle& c, const overline_map& bar) { return sun_from_cycle(c, {}, bar); }

std::vector<sun> lift_cycles(const std::vector<cycle>& cycles, const overline_map& bar) {
  std::vector<sun> out;
  out.reserve(2 * cycles.size());
  for (const auto& c : cycles) {
    const sun s = sigma(c, bar);
    out.push_back(s);
    out.push_back(bar(s));
  }
  return out;
}

namespace {

int plain_infinities(const std::vector<vertex>& legend) {
  int n = 0;
  for (const auto& v : legend)
    if (v.kind == vertex_kind::inf) n = std::max(n, static_cast<int>(v.index));
  return n;
}

}  // namespace

sun_system lift_cycle_system(const cycle_system& cs, int k) {
  (void)k;
  const overline_map bar{plain_infinities(cs.legend)};
  sun_system out;
  out.host = host_graph::blowup(cs.host, false);
  out.legend = cs.legend;
  for (const auto& v : cs.legend) out.legend.push_back(bar(v));
  out.blocks = lift_cycles(cs.blocks, bar);
  return out;
}

std::vector<vertex> hole_legend(int k, int plain, int primed) {
  std::vector<vertex> out;
  const auto g = group_spec::cyclic(k);
  for (int level = 0; level < 4; ++level)
    for (const auto& x : g.elements()) out.push_back(vertex::point(x, level));
  for (int h = 1; h <= plain; ++h) out.push_back(vertex::inf(h));
  for (int h = 1; h <= primed; ++h) out.push_back(vertex::inf_primed(h));
  return out;
}

sun_system compose_4k(int k, const std::vector<cycle>& gamma1_cycles, int w1, const std::vector<sun>& gamma2_suns,
                      int w2) {
  const overline_map bar{w1};
  int primed = 0;
  for (const auto& s : gamma2_suns)
    for (const auto& v : block_vertices(s))
      if (v.kind == vertex_kind::inf_primed) primed = std::max(primed, static_cast<int>(v.index));
  if (primed > w2) throw precondition_error("more primed infinities than w2");
  sun_system out;
  out.host = host_graph::complete_plus(4 * k, 2 * w1 + w2);
  out.legend = hole_legend(k, 2 * w1 + w2 - primed, primed);
  out.blocks = lift_cycles(gamma1_cycles, bar);
  auto renumber = [&](vertex v) {
    if (v.kind == vertex_kind::inf) v.index += 2 * w1;
    return v;
  };
  for (const auto& s : gamma2_suns) {
    sun t;
    for (const auto& v : s.rim) t.rim.push_back(renumber(v));
    for (const auto& v : s.pendants) t.pendants.push_back(renumber(v));
    out.blocks.push_back(std::move(t));
  }
  return out;
}

}  // namespace sunsys::lift
