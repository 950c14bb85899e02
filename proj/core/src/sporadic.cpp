#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "sunsys/assembly.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::assembly {

namespace {

// A listed vertex: group coordinates, or the point at infinity.
struct label {
  std::vector<long long> c;
  bool inf = false;
};
const label oo{{}, true};

vertex to_vertex(const group_spec& g, const label& l) {
  return l.inf ? vertex::inf(1) : vertex::point(g.reduce(l.c), 0);
}

sun make_sun(const group_spec& g, const std::vector<label>& rim, const std::vector<label>& pendants) {
  sun s;
  for (const auto& l : rim) s.rim.push_back(to_vertex(g, l));
  for (const auto& l : pendants) s.pendants.push_back(to_vertex(g, l));
  return s;
}

// Dev over the subgroup generated by (x, 0) of (0,0) ~ (x,0) ~ (y,j): rim
// vertex (ax, 0) carries the pendant (ax + y - x, j).
sun dev_first_factor(const group_spec& g, int p, int x, int y, int j) {
  sun s;
  for (int a = 0; a < p; ++a) {
    s.rim.push_back(vertex::point(g.reduce({1LL * a * x, 0}), 0));
    s.pendants.push_back(vertex::point(g.reduce({1LL * a * x + y - x, j}), 0));
  }
  return s;
}

std::vector<vertex> legend_of(const group_spec& g, bool with_inf) {
  std::vector<vertex> out;
  for (const auto& x : g.elements()) out.push_back(vertex::point(x, 0));
  if (with_inf) out.push_back(vertex::inf(1));
  return out;
}

// Orbits of `full` under G and of `partial` under `acting`, checked against K_v.
sun_system assemble(const group_spec& g, bool with_inf, const std::vector<sun>& full, const std::vector<sun>& partial,
                    const subgroup& acting, int k, const std::string& what) {
  sun_system out;
  out.legend = legend_of(g, with_inf);
  out.host = host_graph::complete(static_cast<int>(out.legend.size()));
  out.blocks = orbit_union(g, full, whole_group(g));
  if (!partial.empty()) {
    const auto more = orbit_union(g, partial, acting);
    out.blocks.insert(out.blocks.end(), more.begin(), more.end());
  }
  require_valid(out, k, what);
  return out;
}

// The two cyclic 7-suns shared by K84 and K85, and the third with its last
// pendant left open.
std::vector<sun> k84_suns(const group_spec& g, const label& last) {
  using L = label;
  return {
      make_sun(g, {L{{0}}, L{{-1}}, L{{3}}, L{{-4}}, L{{6}}, L{{-7}}, L{{16}}},
               {L{{31}}, L{{27}}, L{{37}}, L{{18}}, L{{43}}, L{{12}}, L{{56}}}),
      make_sun(g, {L{{0}}, L{{-2}}, L{{3}}, L{{-5}}, L{{6}}, L{{-8}}, L{{17}}},
               {L{{32}}, L{{27}}, L{{38}}, L{{19}}, L{{44}}, L{{12}}, L{{58}}}),
      make_sun(g, {L{{0}}, L{{-3}}, L{{3}}, L{{-6}}, L{{6}}, L{{-9}}, L{{18}}},
               {L{{33}}, L{{27}}, L{{39}}, L{{20}}, L{{45}}, L{{12}}, last}),
  };
}

sun_system k84() {
  const auto g = group_spec::cyclic(83);
  return assemble(g, true, k84_suns(g, oo), {}, {}, 7, "K84");
}

sun_system k85() {
  const auto g = group_spec::cyclic(85);
  return assemble(g, false, k84_suns(g, label{{60}}), {}, {}, 7, "K85");
}

// Rim (0,0), (1,t), -(2,t), (3,t), ... over Z_p x Z_13.
std::vector<label> alternating_rim(int p, int t) {
  std::vector<label> rim{label{{0, 0}}};
  for (int a = 1; a < p; ++a) rim.push_back(a % 2 ? label{{a, t}} : label{{-a, -t}});
  return rim;
}

sun_system k92() {
  const auto g = group_spec({7, 13});
  using L = label;
  const std::vector<sun> full{
      make_sun(g, alternating_rim(7, 1),
               {oo, L{{-1, 1}}, L{{2, 7}}, L{{-3, 5}}, L{{-3, -5}}, L{{-5, -7}}, L{{6, 7}}}),
      make_sun(g, alternating_rim(7, 2),
               {L{{0, 10}}, L{{-1, -8}}, L{{2, 8}}, L{{-3, 7}}, L{{-3, -7}}, L{{-5, -8}}, L{{6, 8}}}),
      make_sun(g, alternating_rim(7, 3),
               {L{{0, 12}}, L{{-1, -9}}, L{{2, 9}}, L{{-3, 9}}, L{{-3, -9}}, L{{-5, -9}}, L{{6, 9}}}),
  };
  const std::vector<sun> partial{dev_first_factor(g, 7, 4, 6, 8), dev_first_factor(g, 7, 6, 6, 8)};
  return assemble(g, true, full, partial, generated_subgroup(g, {g.make({0, 1})}), 7, "K92");
}

// The listed second sun repeats (6,6) as its sixth and seventh pendants.
// The sixth pendant -(7,2) is one of the two single-entry repairs that
// verify; the other is (4,3) in the seventh slot.
sun_system k144() {
  const auto g = group_spec({11, 13});
  using L = label;
  const std::vector<sun> full{
      make_sun(g, alternating_rim(11, 1),
               {oo, L{{-1, 1}}, L{{2, 7}}, L{{-3, -7}}, L{{4, 7}}, L{{-5, 1}}, L{{-5, -5}}, L{{-7, -7}}, L{{8, 7}},
                L{{-9, -7}}, L{{10, 7}}}),
      make_sun(g, alternating_rim(11, 2),
               {L{{0, 10}}, L{{-1, -8}}, L{{2, 8}}, L{{-3, -8}}, L{{4, 8}}, L{{-7, -2}}, L{{-5, -7}}, L{{-7, -8}},
                L{{8, 8}}, L{{-9, -8}}, L{{10, 8}}}),
      make_sun(g, alternating_rim(11, 3),
               {L{{0, 12}}, L{{-1, -9}}, L{{2, 9}}, L{{-3, -9}}, L{{4, 9}}, L{{-5, 9}}, L{{-5, -9}}, L{{-7, -9}},
                L{{8, 9}}, L{{-9, -9}}, L{{10, 9}}}),
  };
  const std::vector<sun> partial{dev_first_factor(g, 11, 4, 6, 8), dev_first_factor(g, 11, 6, 5, 8),
                                 dev_first_factor(g, 11, 8, 8, 8)};
  return assemble(g, true, full, partial, generated_subgroup(g, {g.make({0, 1})}), 11, "K144");
}

sun_system k105() {
  const auto g = group_spec({7, 15});
  using L = label;
  const long long half = 8;  // inverse of 2 in Z_15
  std::vector<sun> partial;
  for (long long i = 1; i <= 3; ++i)
    for (long long j = 1; j <= 7; ++j) {
      if (i == 1 && (j == 3 || j == 6)) continue;
      partial.push_back(make_sun(g,
                                 {L{{0, 0}}, L{{i, j * half}}, L{{2 * i, j}}, L{{3 * i, 0}}, L{{4 * i, j}},
                                  L{{5 * i, 0}}, L{{6 * i, j}}},
                                 {L{{i, -j * half}}, L{{2 * i, 0}}, L{{3 * i, 2 * j}}, L{{4 * i, -j}},
                                  L{{5 * i, 2 * j}}, L{{6 * i, -j}}, L{{0, 2 * j}}}));
    }
  const std::vector<sun> full{make_sun(g,
                                       {L{{0, 0}}, L{{0, 7}}, L{{0, 2}}, L{{0, 5}}, L{{0, -1}}, L{{0, 3}}, L{{0, 1}}},
                                       {L{{2, 0}}, L{{3, 7}}, L{{1, 2}}, L{{1, 8}}, L{{1, 5}}, L{{1, 0}}, L{{1, 10}}})};
  return assemble(g, false, full, partial, generated_subgroup(g, {g.make({0, 1})}), 7, "K105");
}

// p-sun system of K_{p^2} over GF(p^2): S has rim 0, r, 2r, ..., (p-1)r
// with pendant x + 1 at x, and the system is the union of the orbits of
// r^{2i} S for i in [0, (q-5)/4].
sun_system kq(int p) {
  if (p < 3 || !is_prime(p)) throw precondition_error("Kq needs an odd prime p, got " + std::to_string(p));
  const long long q = 1LL * p * p;
  const auto g = group_spec::galois_square(p);
  const auto r = primitive_root(g);
  const auto one = g.one();
  sun s;
  for (int j = 0; j < p; ++j) {
    const auto x = scale(g, r, j);
    s.rim.push_back(vertex::point(x, 0));
    s.pendants.push_back(vertex::point(add(g, x, one), 0));
  }
  std::vector<sun> base;
  for (long long i = 0; i <= (q - 5) / 4; ++i) {
    const auto m = field_pow(g, r, 2 * i);
    sun t;
    for (const auto& v : s.rim) t.rim.push_back(vertex::point(field_mul(g, m, v.elem), 0));
    for (const auto& v : s.pendants) t.pendants.push_back(vertex::point(field_mul(g, m, v.elem), 0));
    base.push_back(t);
  }
  return assemble(g, false, base, {}, {}, p, "K" + std::to_string(q));
}

std::optional<int> kq_prime(const std::string& name) {
  if (name.rfind("Kq:", 0) != 0) return std::nullopt;
  try {
    std::size_t used = 0;
    const int p = std::stoi(name.substr(3), &used);
    if (used + 3 != name.size()) return std::nullopt;
    return p;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::string> sporadic_names() { return {"K84", "K85", "K92", "K144", "K105", "K49"}; }

int sporadic_k(const std::string& name) {
  if (name == "K84" || name == "K85" || name == "K92" || name == "K105" || name == "K49") return 7;
  if (name == "K144") return 11;
  if (const auto p = kq_prime(name)) return *p;
  throw precondition_error("unknown sporadic system: " + name);
}

sun_system sporadic(const std::string& name) {
  if (name == "K84") return k84();
  if (name == "K85") return k85();
  if (name == "K92") return k92();
  if (name == "K144") return k144();
  if (name == "K105") return k105();
  if (name == "K49") return kq(7);
  if (const auto p = kq_prime(name)) return kq(*p);
  throw precondition_error("unknown sporadic system: " + name);
}

}  // namespace sunsys::assembly
