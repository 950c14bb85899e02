#include "sunsys/prime.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::prime {

namespace {

vertex zp(const group_spec& g, long long a, long long level, int m) {
  return vertex::point(g.reduce({a}), static_cast<int>(mod(level, m)));
}

long long power_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

int smallest_primitive_root(int p) { return primitive_root(group_spec::cyclic(p))[0]; }

// Every vertex of G x [0, m-1] in vertex order, then inf_1..inf_w.
std::vector<vertex> full_legend(const group_spec& g, int m, int w) {
  std::vector<vertex> out;
  for (int lev = 0; lev < m; ++lev)
    for (const auto& x : g.elements()) out.push_back(vertex::point(x, lev));
  for (int u = 1; u <= w; ++u) out.push_back(vertex::inf(u));
  return out;
}

// Develops `base` under the whole group and checks it against K_v.
sun_system finish(const group_spec& g, int m, int w, const std::vector<sun>& base, int k, const std::string& what,
                  bool developed = true) {
  sun_system out;
  out.legend = full_legend(g, m, w);
  out.host = host_graph::complete(static_cast<int>(out.legend.size()));
  if (!developed) {
    for (const auto& b : base) out.blocks.push_back(canonical(b));
    std::sort(out.blocks.begin(), out.blocks.end(), [](const sun& a, const sun& b) {
      return a.rim != b.rim ? a.rim < b.rim : a.pendants < b.pendants;
    });
    require_valid(out, k, what);
    return out;
  }
  base_family<sun> f{g, m, w, base};
  const auto rep = check_base_family(f);
  if (!rep.pass()) {
    std::string msg = what + ": base family fails the difference conditions:";
    for (const auto& p : rep.problems) msg += " " + p + ";";
    throw verification_error(msg);
  }
  out.blocks = orbit_union(g, base, whole_group(g));
  require_valid(out, k, what);
  return out;
}

bool has_pure_repeat(const group_spec& g, const sun& s) {
  const auto d = delta(g, s);
  for (const auto& [key, v] : d)
    if (key.first == key.second && std::adjacent_find(v.begin(), v.end()) != v.end()) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// K_4k and K_4k+1

zigzag_sun zigzag_base(int k, bool plus_one) {
  if (k < 7 || k % 2 == 0) throw precondition_error("zigzag base sun needs odd k >= 7, got " + std::to_string(k));
  const long long t = (k - 1) / 2;
  zigzag_sun z;
  z.rim.push_back(0);
  for (long long i = 1; i < t; ++i) {
    z.rim.push_back(-i);
    z.rim.push_back(i);
  }
  z.rim.push_back(-t);
  z.rim.push_back(2 * t);

  std::vector<long long> sorted = z.rim;
  std::sort(sorted.begin(), sorted.end());
  std::vector<long long> d2;
  for (long long d = 2 * t + 1; d <= 3 * t - 1; ++d) d2.push_back(d);
  for (long long d = 3 * t + 1; d <= 4 * t + 2; ++d) d2.push_back(d);

  std::map<long long, long long> pendant_of;
  for (long long r = 1; r <= k; ++r) {
    const bool subtract = t % 2 == 1 && r == (t + 1) / 2;
    pendant_of[sorted[r - 1]] = subtract ? sorted[r - 1] - d2[r - 1] : sorted[r - 1] + d2[r - 1];
  }
  for (std::size_t i = 0; i < z.rim.size(); ++i) {
    z.pendants.push_back(pendant_of[z.rim[i]]);
    if (!plus_one && z.rim[i] == sorted.back()) z.inf_position = static_cast<int>(i);
  }
  return z;
}

sun zigzag_base_sun(int k, bool plus_one) {
  const auto z = zigzag_base(k, plus_one);
  const auto g = group_spec::cyclic(plus_one ? 4 * k + 1 : 4 * k - 1);
  sun s;
  for (std::size_t i = 0; i < z.rim.size(); ++i) {
    s.rim.push_back(zp(g, z.rim[i], 0, 1));
    s.pendants.push_back(static_cast<int>(i) == z.inf_position ? vertex::inf(1) : zp(g, z.pendants[i], 0, 1));
  }
  validate(s);
  return s;
}

sun_system zigzag_system(int k, bool plus_one) {
  const auto g = group_spec::cyclic(plus_one ? 4 * k + 1 : 4 * k - 1);
  return finish(g, 1, plus_one ? 0 : 1, {zigzag_base_sun(k, plus_one)}, k,
                std::to_string(k) + "-sun system of K_" + std::to_string(plus_one ? 4 * k + 1 : 4 * k));
}

// ---------------------------------------------------------------------------
// Suns of type (i, j)

sun type_ij_sun(int p, int i, int j, int x, int y) {
  if (i == j) throw precondition_error("type (i, j) sun needs i != j");
  if (mod(x, p) == 0) throw precondition_error("type (i, j) sun needs x != 0 (mod p)");
  const int m = std::max(i, j) + 1;
  const auto g = group_spec::cyclic(p);
  // Rim Dev({(0,i), (x,i)}) walked as 0, x, 2x, ..; (a x, i) carries (a x + y, j).
  sun s;
  for (long long a = 0; a < p; ++a) {
    s.rim.push_back(zp(g, a * x, i, m));
    s.pendants.push_back(zp(g, a * x + y, j, m));
  }
  return s;
}

std::vector<type_sun> complete_with_type_suns(int p, int m, const std::vector<sun>& base, bool developed) {
  const auto g = group_spec::cyclic(p);
  // Edges per difference class: pure (i, i, x) with x in [1, (p-1)/2] and
  // mixed (i, j, y) with i < j.  A class is either untouched or full.
  std::map<std::array<int, 3>, int> load;
  for (const auto& s : base) {
    std::set<edge> es;
    for (const auto& e : sun_edges(s)) {
      if (!developed) {
        es.insert(e);
        continue;
      }
      for (long long t = 0; t < p; ++t) es.insert(edge(translate(g, e.a, g.reduce({t})), translate(g, e.b, g.reduce({t}))));
    }
    for (const auto& e : es) {
      if (!e.a.is_point() || !e.b.is_point()) continue;
      const int d = static_cast<int>(mod(e.b.elem[0] - e.a.elem[0], p));
      if (e.a.level == e.b.level) ++load[{e.a.level, e.a.level, std::min(d, p - d)}];
      else if (e.a.level < e.b.level) ++load[{e.a.level, e.b.level, d}];
      else ++load[{e.b.level, e.a.level, p - d == p ? 0 : p - d}];
    }
  }
  for (const auto& [key, n] : load)
    if (n != p)
      throw verification_error("difference class (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                               std::to_string(key[2]) + ") carries " + std::to_string(n) + " edges instead of " +
                               std::to_string(p));

  std::vector<std::pair<int, int>> pure;   // (level, x)
  std::vector<std::array<int, 3>> mixed;  // (i, j, y)
  for (int i = 0; i < m; ++i) {
    for (int x = 1; x <= (p - 1) / 2; ++x)
      if (!load.count({i, i, x})) pure.emplace_back(i, x);
    for (int j = i + 1; j < m; ++j)
      for (int y = 0; y < p; ++y)
        if (!load.count({i, j, y})) mixed.push_back({i, j, y});
  }
  if (pure.size() != mixed.size())
    throw verification_error("leftover differences do not balance: " + std::to_string(pure.size()) + " pure pairs, " +
                             std::to_string(mixed.size()) + " mixed classes");

  std::vector<std::vector<int>> adj(pure.size());
  for (std::size_t a = 0; a < pure.size(); ++a)
    for (std::size_t b = 0; b < mixed.size(); ++b)
      if (mixed[b][0] == pure[a].first || mixed[b][1] == pure[a].first) adj[a].push_back(static_cast<int>(b));
  std::vector<int> match_right(mixed.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int a) {
    for (int b : adj[a]) {
      if (seen[b]) continue;
      seen[b] = 1;
      if (match_right[b] < 0 || augment(match_right[b])) {
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < pure.size(); ++a) {
    seen.assign(mixed.size(), 0);
    if (!augment(static_cast<int>(a))) throw verification_error("leftover differences admit no type-sun pairing");
  }

  std::vector<type_sun> out(pure.size());
  for (std::size_t b = 0; b < mixed.size(); ++b) {
    const auto [level, x] = pure[match_right[b]];
    const auto [i, j, y] = mixed[b];
    out[match_right[b]] = level == i ? type_sun{i, j, x, y} : type_sun{j, i, x, static_cast<int>(mod(-y, p))};
  }
  return out;
}

// ---------------------------------------------------------------------------
// K_{3p+1}

namespace {

// Rim and pendants of the Z_3-labelled base sun with some pendants
// overridden.  Rim position 0 is the infinity.
struct labelled {
  std::vector<std::pair<long long, int>> rim;   // (element, level); rim[0] unused
  std::vector<std::pair<long long, int>> pend;  // pendant labels
};

sun to_sun(const group_spec& g, const labelled& l, const std::map<int, std::pair<long long, int>>& overrides) {
  sun s;
  for (std::size_t i = 0; i < l.rim.size(); ++i) {
    s.rim.push_back(i == 0 ? vertex::inf(1) : zp(g, l.rim[i].first, l.rim[i].second, 3));
    auto it = overrides.find(static_cast<int>(i));
    const auto& lab = it == overrides.end() ? l.pend[i] : it->second;
    s.pendants.push_back(zp(g, lab.first, lab.second, 3));
  }
  return s;
}

bool distinct_vertices(const sun& s) {
  auto vs = block_vertices(s);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end() && vs.size() == 2 * s.size();
}

struct override_family {
  std::vector<std::pair<int, std::pair<long long, int>>> options;  // (index, replacement)
  int count = 0;
};

// Picks `count` options from each family, smallest index first, keeping the
// labels distinct and the pure differences repeat-free; the leaf test
// decides.  Backtracks over at most `budget` leaves.
std::optional<sun> pick_overrides(const group_spec& g, int p, const labelled& l,
                                  const std::vector<override_family>& families, long budget) {
  std::map<int, std::pair<long long, int>> chosen;
  std::optional<sun> found;
  long leaves = 0;
  std::function<bool(std::size_t, std::size_t, int)> go = [&](std::size_t f, std::size_t pos, int left) -> bool {
    if (f == families.size()) {
      if (leaves++ >= budget) return true;
      sun s = to_sun(g, l, chosen);
      try {
        complete_with_type_suns(p, 3, {s}, true);
      } catch (const verification_error&) {
        return false;
      }
      found = s;
      return true;
    }
    if (left == 0) return go(f + 1, 0, f + 1 < families.size() ? families[f + 1].count : 0);
    const auto& opts = families[f].options;
    for (std::size_t o = pos; o + left <= opts.size(); ++o) {
      chosen[opts[o].first] = opts[o].second;
      const sun s = to_sun(g, l, chosen);
      if (distinct_vertices(s) && !has_pure_repeat(g, s) && go(f, o + 1, left - 1)) return true;
      chosen.erase(opts[o].first);
    }
    return false;
  };
  go(0, 0, families.empty() ? 0 : families[0].count);
  return found;
}

sun base_3p1_p13() {
  const auto g = group_spec::cyclic(13);
  const std::vector<std::pair<int, int>> rim{{2, 1}, {4, 2}, {8, 0}, {3, 1}, {6, 2}, {12, 0},
                                             {11, 1}, {9, 2}, {5, 0}, {10, 1}, {7, 2}, {1, 0}};
  const std::vector<std::pair<int, int>> pend{{0, 2}, {4, 1}, {8, 1},  {3, 2}, {6, 0}, {12, 1}, {11, 2},
                                              {9, 0}, {5, 1}, {10, 2}, {7, 0}, {1, 1}, {2, 2}};
  sun s;
  s.rim.push_back(vertex::inf(1));
  for (const auto& [a, lev] : rim) s.rim.push_back(zp(g, a, lev, 3));
  for (const auto& [a, lev] : pend) s.pendants.push_back(zp(g, a, lev, 3));
  return s;
}

// p = 1 (mod 12): c_i = (r^i, i), l_i = (r^{i+1}, i + 2).  The overrides
// move l_i to (r^{i+1}, i), turning its edge into a pure difference on level
// i mod 3.  Exactly (p - 9)/4 pure pairs are needed.  Level 1 alone offers
// only (p - 1)/6 distinct classes, so the remaining ones are taken on levels
// 0 and 2.
sun base_3p1_one_mod_12(int p) {
  const auto g = group_spec::cyclic(p);
  const long long r = smallest_primitive_root(p);
  labelled l;
  l.rim.push_back({0, 0});
  l.pend.push_back({0, 2});
  for (int i = 1; i < p; ++i) {
    l.rim.push_back({power_mod(r, i, p), i % 3});
    l.pend.push_back({power_mod(r, i + 1, p), (i + 2) % 3});
  }
  const int need = (p - 9) / 4;
  const int per_level = (p - 1) / 6;
  auto family = [&](int level, int count) {
    override_family f;
    f.count = count;
    for (int i = 1; i < p; ++i)
      if (i % 3 == level) f.options.push_back({i, {power_mod(r, i + 1, p), level}});
    return f;
  };
  for (int s1 = std::min(need, per_level); s1 >= 0; --s1)
    for (int s0 = std::min(need - s1, per_level); s0 >= 0; --s0) {
      const int s2 = need - s1 - s0;
      if (s2 > per_level) continue;
      if (auto s = pick_overrides(g, p, l, {family(1, s1), family(0, s0), family(2, s2)}, 64)) return *s;
    }
  throw unsupported_error("no override set found for the K_" + std::to_string(3 * p + 1) + " base sun");
}

// p = 5 (mod 12), with the two override families on indices i = 0 (mod 3).
sun base_3p1_five_mod_12(int p) {
  const auto g = group_spec::cyclic(p);
  const long long r = smallest_primitive_root(p);
  auto pw = [&](long long e) { return power_mod(r, e, p); };
  labelled l;
  l.rim.push_back({0, 0});
  for (int i = 1; i <= p - 2; ++i) l.rim.push_back({pw(i), i % 3});
  l.rim.push_back({1, 0});
  l.pend.push_back({0, 2});
  l.pend.push_back({r, 2});
  for (int i = 2; i <= (p - 1) / 2; ++i) l.pend.push_back({pw(i - 1), (i + 1) % 3});
  for (int i = (p + 1) / 2; i <= p - 3; ++i) l.pend.push_back({pw(i + 1), (i + 2) % 3});
  l.pend.push_back({1, 1});
  l.pend.push_back({1, 2});

  override_family low, high;
  low.count = (p - 17) / 6;
  high.count = (p - 5) / 12;
  for (int i = 3; i <= (p - 1) / 2; i += 3) low.options.push_back({i, {pw(i - 1), 0}});
  for (int i = (p + 1) / 2; i <= p - 5; ++i)
    if (i % 3 == 0) high.options.push_back({i, {pw(i + 1), 0}});
  if (auto s = pick_overrides(g, p, l, {low, high}, 4096)) return *s;
  throw unsupported_error("no override set found for the K_" + std::to_string(3 * p + 1) + " base sun");
}

void require_prop64(int p) {
  if (!is_prime(p) || p % 4 != 1 || p < 13)
    throw precondition_error("K_{3p+1} construction needs a prime p = 1 (mod 4), p >= 13; got " + std::to_string(p));
}

}  // namespace

sun base_sun_3p1(int p) {
  require_prop64(p);
  if (p == 13) return base_3p1_p13();
  return p % 12 == 1 ? base_3p1_one_mod_12(p) : base_3p1_five_mod_12(p);
}

sun_system system_3p1(int p) {
  const sun s = base_sun_3p1(p);
  std::vector<sun> base{s};
  for (const auto& t : complete_with_type_suns(p, 3, base, true)) base.push_back(type_ij_sun(p, t.i, t.j, t.x, t.y));
  return finish(group_spec::cyclic(p), 3, 1, base, p, std::to_string(p) + "-sun system of K_" + std::to_string(3 * p + 1));
}

// ---------------------------------------------------------------------------
// K_{5p+1}

namespace {

void require_prop65(int p) {
  if (!is_prime(p) || p % 4 != 3)
    throw precondition_error("K_{5p+1} construction needs a prime p = 3 (mod 4); got " + std::to_string(p));
}

vertex z5(const group_spec& g, long long a, long long b) { return vertex::point(g.reduce({a, b}), 0); }

}  // namespace

sun base_sun_5p1(int p) {
  require_prop65(p);
  const auto g = group_spec({p, 5});
  const int n = (p - 3) / 4;
  sun s;
  s.rim.push_back(z5(g, 0, 0));
  s.pendants.push_back(vertex::inf(1));
  for (long long i = 1; i < p; ++i) {
    const long long sg = i % 2 == 1 ? 1 : -1;
    s.rim.push_back(z5(g, sg * i, sg));
    if (i <= n) s.pendants.push_back(z5(g, -sg * i, sg));
    else if (i == 2 * n + 1) s.pendants.push_back(z5(g, -2 * n - 1, 3));
    else if (i == 2 * n + 2) s.pendants.push_back(z5(g, -2 * n - 1, -3));
    else s.pendants.push_back(z5(g, -sg * i, -sg * 3));
  }
  validate(s);
  return s;
}

std::vector<std::pair<int, std::pair<int, int>>> pairing_5p1(int p) {
  const auto g = group_spec({p, 5});
  const int n = (p - 3) / 4;
  const auto d = delta(g, base_sun_5p1(p));
  const auto& used = diff_at(d, 0, 0);
  std::set<group_element> have(used.begin(), used.end());
  // One representative per pair +-e of the complement, smaller first.
  std::vector<group_element> level0, other;
  for (const auto& e : g.elements()) {
    if (e == g.zero() || have.count(e)) continue;
    const auto ne = neg(g, e);
    if (ne < e) continue;
    (e[1] == 0 ? level0 : other).push_back(e);
  }
  if (level0.size() != static_cast<std::size_t>(n + 1) || other.size() != level0.size())
    throw verification_error("unexpected complement of the K_" + std::to_string(5 * p + 1) + " base sun");
  std::vector<std::pair<int, std::pair<int, int>>> out;
  for (int x = n + 1; x <= 2 * n + 1; ++x) {
    const auto e = g.reduce({2LL * x, 0});
    const auto ne = neg(g, e);
    if (!std::count(level0.begin(), level0.end(), std::min(e, ne)))
      throw verification_error("complement lacks +-(2x, 0) for x = " + std::to_string(x));
    const auto& o = other[x - n - 1];
    out.push_back({x, {o[0], o[1]}});
  }
  return out;
}

sun_system system_5p1(int p) {
  require_prop65(p);
  const auto g = group_spec({p, 5});
  std::vector<sun> base{base_sun_5p1(p)};
  for (const auto& [x, rs] : pairing_5p1(p)) {
    sun s;
    for (long long a = 0; a < p; ++a) {
      s.rim.push_back(z5(g, a * 2 * x, 0));
      s.pendants.push_back(z5(g, a * 2 * x + rs.first, rs.second));
    }
    base.push_back(s);
  }
  return finish(g, 1, 1, base, p, std::to_string(p) + "-sun system of K_" + std::to_string(5 * p + 1));
}

// ---------------------------------------------------------------------------
// K_{mp}

sun sun_mp(int m, int p, int r, int s, int h) {
  const auto g = group_spec::cyclic(p);
  sun out;
  long long a = 0;
  long long lev = 0;
  for (int i = 0; i < p; ++i) {
    if (i > 0) {
      const bool minus = i >= m + 2 && (i - m) % 2 == 0;
      a += r;
      lev += minus ? -s : s;
    }
    const bool pend_plus = i >= m + 1 && (i - m) % 2 == 1;
    out.rim.push_back(zp(g, a, lev + h, m));
    out.pendants.push_back(zp(g, a + r, lev + (pend_plus ? s : -s) + h, m));
  }
  validate(out);
  return out;
}

sun_system system_mp(int m, int p) {
  if (!is_prime(m) || !is_prime(p) || m < 3 || m > p || (p - m) % 4 != 0)
    throw precondition_error("K_{mp} construction needs odd primes m <= p with m = p (mod 4); got m = " +
                             std::to_string(m) + ", p = " + std::to_string(p));
  std::vector<sun> base;
  for (int h = 0; h < m; ++h) {
    for (int r = 1; r <= (p + m - 2) / 4; ++r) base.push_back(sun_mp(m, p, r, 1, h));
    for (int r = 1; r <= (p - 1) / 2; ++r)
      for (int s = 2; s <= (m - 1) / 2; ++s) base.push_back(sun_mp(m, p, r, s, h));
  }
  for (const auto& t : complete_with_type_suns(p, m, base, false)) base.push_back(type_ij_sun(p, t.i, t.j, t.x, t.y));
  return finish(group_spec::cyclic(p), m, 0, base, p, std::to_string(p) + "-sun system of K_" + std::to_string(m * p), false);
}

// ---------------------------------------------------------------------------

bool admissible(int p, long long v) { return v >= 2LL * p && (v * (v - 1)) % (4LL * p) == 0; }

sun_system direct(int p, int v) {
  if (!is_prime(p) || p < 7) throw precondition_error("direct constructions need a prime p >= 7");
  if (!admissible(p, v)) throw inadmissible_error("K_" + std::to_string(v) + " admits no " + std::to_string(p) + "-sun system");
  if (v == 4 * p) return zigzag_system(p, false);
  if (v == 4 * p + 1) return zigzag_system(p, true);
  if (p % 4 == 1 && v == 3 * p + 1) return system_3p1(p);
  if (p % 4 == 1 && v == 5 * p) return system_mp(5, p);
  if (p % 4 == 3 && v == 5 * p + 1) return system_5p1(p);
  if (p % 4 == 3 && v == 3 * p) return system_mp(3, p);
  throw unsupported_error("no direct construction for K_" + std::to_string(v) + " with p = " + std::to_string(p));
}

}  // namespace sunsys::prime
