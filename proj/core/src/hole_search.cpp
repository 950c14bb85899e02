#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>

#include "sunsys/cycles.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/holes.hpp"
#include "sunsys/verify.hpp"

// Z_k-invariant k-sun systems of K_4k + n over Z_k x [0,3] u {inf_1..inf_n}.
//
// Every infinity lies on the rim of exactly one base sun (which covers three
// of its four level classes) and is the pendant of a rim point in another
// base sun (the fourth level).  Base suns put t <= 3 infinities on rim
// positions 0, 2, .., 2t-2.  Point classes left over by the base suns are
// covered by suns Dev(pure difference d on level j) with pendants in one
// mixed class.  The search runs in three stages: levels, then the pairing
// of infinity slots, then differences and coordinates.
namespace sunsys::holes {

namespace {

constexpr int levels = 4;

struct proto_sun {
  int t = 0;
  std::vector<int> rim;   // level of each rim point, -1 at infinities
  std::vector<int> pend;  // level of each point pendant, -1 for an infinity pendant
};

int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  static const int table[levels][levels] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

std::pair<int, int> pair_levels(int idx) {
  static const std::array<std::pair<int, int>, 6> table{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return table[idx];
}

class level_search {
public:
  level_search(int k, int n, std::vector<int> ts, int dev, std::mt19937& rng) : k_(k), n_(n), dev_(dev), rng_(rng) {
    for (int t : ts) {
      proto_sun s;
      s.t = t;
      s.rim.assign(k, 0);
      s.pend.assign(k, 0);
      for (int i = 0; i < 2 * t; i += 2) s.rim[i] = -1;
      suns_.push_back(s);
    }
  }

  bool run(long iterations) {
    randomize();
    long cost = total_cost();
    for (long it = 0; it < iterations && cost > 0; ++it) {
      auto saved = suns_;
      mutate();
      if (!slots_distinct()) {
        suns_ = std::move(saved);
        continue;
      }
      const long c = total_cost();
      if (c <= cost || std::uniform_int_distribution<int>(0, 99)(rng_) == 0)
        cost = c;
      else
        suns_ = std::move(saved);
    }
    return cost == 0;
  }

  const std::vector<proto_sun>& suns() const { return suns_; }

private:
  bool is_inf(const proto_sun& s, int i) const { return s.rim[i] < 0; }

  int rand(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  void randomize() {
    std::vector<std::pair<int, int>> point_positions;
    for (int si = 0; si < static_cast<int>(suns_.size()); ++si) {
      auto& s = suns_[si];
      for (int i = 0; i < k_; ++i) {
        if (!is_inf(s, i)) {
          s.rim[i] = rand(levels);
          point_positions.emplace_back(si, i);
        }
      }
      for (int i = 0; i < k_; ++i) s.pend[i] = rand(levels);
    }
    // exactly n rim points carry an infinity pendant
    std::shuffle(point_positions.begin(), point_positions.end(), rng_);
    for (int j = 0; j < n_; ++j) suns_[point_positions[j].first].pend[point_positions[j].second] = -1;
    while (!slots_distinct())
      for (auto& s : suns_)
        for (int i = 0; i < k_; ++i)
          if (is_inf(s, i) && !slot_distinct(s, i)) {
            s.rim[(i + k_ - 1) % k_] = rand(levels);
            s.rim[(i + 1) % k_] = rand(levels);
            s.pend[i] = rand(levels);
          }
  }

  void mutate() {
    auto& s = suns_[rand(static_cast<int>(suns_.size()))];
    const int i = rand(k_);
    switch (rand(3)) {
      case 0:
        if (!is_inf(s, i)) s.rim[i] = rand(levels);
        break;
      case 1:
        if (s.pend[i] >= 0) s.pend[i] = rand(levels);
        break;
      default: {
        auto& o = suns_[rand(static_cast<int>(suns_.size()))];
        const int j = rand(k_);
        if (!is_inf(s, i) && !is_inf(o, j) && (s.pend[i] < 0) != (o.pend[j] < 0)) {
          std::swap(s.pend[i], o.pend[j]);
          if (s.pend[i] >= 0) s.pend[i] = rand(levels);
          if (o.pend[j] >= 0) o.pend[j] = rand(levels);
        }
      }
    }
  }

  bool slot_distinct(const proto_sun& s, int i) const {
    const int a = s.rim[(i + k_ - 1) % k_], b = s.rim[(i + 1) % k_], c = s.pend[i];
    return a != b && a != c && b != c;
  }

  bool slots_distinct() const {
    for (const auto& s : suns_)
      for (int i = 0; i < k_; ++i)
        if (is_inf(s, i) && !slot_distinct(s, i)) return false;
    return true;
  }

  long total_cost() const {
    std::array<int, levels> missing{}, pslots{}, pure{};
    std::array<int, 6> mixed{};
    auto count_edge = [&](int a, int b) {
      if (a == b)
        ++pure[a];
      else
        ++mixed[pair_index(a, b)];
    };
    long crowd = 0;
    for (const auto& s : suns_) {
      std::array<int, levels> on{};
      for (int i = 0; i < k_; ++i) {
        if (!is_inf(s, i)) ++on[s.rim[i]];
        if (s.pend[i] >= 0) ++on[s.pend[i]];
      }
      for (int j = 0; j < levels; ++j) crowd += std::max(0, on[j] - k_);
    }
    for (const auto& s : suns_)
      for (int i = 0; i < k_; ++i) {
        if (is_inf(s, i)) {
          const int a = s.rim[(i + k_ - 1) % k_], b = s.rim[(i + 1) % k_], c = s.pend[i];
          ++missing[6 - a - b - c];
          continue;
        }
        const int nx = (i + 1) % k_;
        if (!is_inf(s, nx)) count_edge(s.rim[i], s.rim[nx]);
        if (s.pend[i] < 0)
          ++pslots[s.rim[i]];
        else
          count_edge(s.rim[i], s.pend[i]);
      }
    const int half = (k_ - 1) / 2;
    long cost = crowd;
    std::array<int, levels> d{};
    std::array<int, 6> m{};
    for (int j = 0; j < levels; ++j) {
      cost += std::abs(missing[j] - pslots[j]);
      d[j] = half - pure[j];
      cost += std::max(0, -d[j]);
    }
    for (int p = 0; p < 6; ++p) {
      m[p] = k_ - mixed[p];
      cost += std::max(0, -m[p]);
    }
    int dsum = 0, msum = 0;
    for (int j = 0; j < levels; ++j) dsum += std::max(0, d[j]);
    for (int p = 0; p < 6; ++p) msum += std::max(0, m[p]);
    cost += std::abs(dsum - dev_) + std::abs(msum - dev_);
    // Hall's condition for matching Dev slots to leftover mixed classes
    for (int mask = 1; mask < (1 << levels); ++mask) {
      int need = 0, have = 0;
      for (int j = 0; j < levels; ++j)
        if (mask >> j & 1) need += std::max(0, d[j]);
      for (int p = 0; p < 6; ++p) {
        const auto [a, b] = pair_levels(p);
        if ((mask >> a & 1) || (mask >> b & 1)) have += std::max(0, m[p]);
      }
      cost += std::max(0, need - have);
    }
    return cost;
  }

  int k_, n_, dev_;
  std::mt19937& rng_;
  std::vector<proto_sun> suns_;
};

// Kuhn's augmenting paths; adj[l] lists the right vertices allowed for l.
bool perfect_matching(const std::vector<std::vector<int>>& adj, int right, std::vector<int>& match_left, std::mt19937& rng) {
  std::vector<int> match_right(right, -1);
  match_left.assign(adj.size(), -1);
  std::vector<int> order(adj.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int l) {
    for (int r : adj[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (match_right[r] < 0 || augment(match_right[r])) {
        match_right[r] = l;
        match_left[l] = r;
        return true;
      }
    }
    return false;
  };
  for (int l : order) {
    seen.assign(right, 0);
    if (!augment(l)) return false;
  }
  return true;
}

// Point edge of a proto sun between vertex slots u and v (rim i is slot i,
// pendant i is slot k + i).
struct point_edge {
  int sun = 0;
  int u = 0;
  int v = 0;
  int lu = 0;
  int lv = 0;
};

class coordinate_search {
public:
  coordinate_search(int k, const std::vector<proto_sun>& suns, std::mt19937& rng) : k_(k), suns_(suns), rng_(rng) {
    for (int si = 0; si < static_cast<int>(suns.size()); ++si) {
      const auto& s = suns[si];
      for (int i = 0; i < k; ++i) {
        if (s.rim[i] < 0) continue;
        const int nx = (i + 1) % k;
        if (s.rim[nx] >= 0) add_edge(si, i, nx, s.rim[i], s.rim[nx]);
        if (s.pend[i] >= 0) add_edge(si, i, k + i, s.rim[i], s.pend[i]);
      }
      for (int i = 0; i < k; ++i) {
        if (s.rim[i] >= 0) level_of_[si][i] = s.rim[i];
        if (s.pend[i] >= 0) level_of_[si][k + i] = s.pend[i];
      }
    }
  }

  // Assigns a class to every edge and coordinates to every point.  Returns
  // the unused pure differences per level and mixed differences per pair.
  bool run(long iterations) {
    const int half = (k_ - 1) / 2;
    for (auto& [key, idx] : groups_) {
      const bool pure = key < levels;
      const int size = pure ? half : k_;
      std::vector<int> pool(size);
      for (int d = 0; d < size; ++d) pool[d] = pure ? d + 1 : d;
      std::shuffle(pool.begin(), pool.end(), rng_);
      pools_[key] = pool;  // the first |idx| entries are in use
    }
    for (auto& e : sign_) e = rng_() % 2 ? 1 : -1;
    std::vector<int> bad;
    for (long it = 0; it < iterations; ++it) {
      bad.clear();
      for (int si = 0; si < static_cast<int>(suns_.size()); ++si)
        if (!place(si)) bad.push_back(si);
      if (bad.empty()) return true;
      // move one class of a conflicting sun
      const int si = bad[rng_() % bad.size()];
      std::vector<int> mine;
      for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (edges_[e].sun == si) mine.push_back(e);
      if (mine.empty()) return false;
      const int e = mine[rng_() % mine.size()];
      const int key = key_of(edges_[e]);
      auto& pool = pools_[key];
      const auto& idx = groups_[key];
      const int pos = static_cast<int>(std::find(idx.begin(), idx.end(), e) - idx.begin());
      std::swap(pool[pos], pool[rng_() % pool.size()]);
      sign_[e] = -sign_[e];
    }
    return false;
  }

  int diff_of(int e) const {
    const int key = key_of(edges_[e]);
    const auto& idx = groups_.at(key);
    const int pos = static_cast<int>(std::find(idx.begin(), idx.end(), e) - idx.begin());
    return pools_.at(key)[pos];
  }

  std::vector<int> unused(int key) const {
    const auto it = groups_.find(key);
    const std::size_t used = it == groups_.end() ? 0 : it->second.size();
    if (it == groups_.end()) {
      const bool pure = key < levels;
      std::vector<int> all;
      for (int d = 0; d < (pure ? (k_ - 1) / 2 : k_); ++d) all.push_back(pure ? d + 1 : d);
      return all;
    }
    const auto& pool = pools_.at(key);
    return {pool.begin() + used, pool.end()};
  }

  const std::map<int, int>& coords(int si) const { return coord_.at(si); }

private:
  // keys: 0..3 pure on a level, 4 + pair index for mixed classes
  static int key_of(const point_edge& e) { return e.lu == e.lv ? e.lu : levels + pair_index(e.lu, e.lv); }

  void add_edge(int si, int u, int v, int lu, int lv) {
    edges_.push_back({si, u, v, lu, lv});
    sign_.push_back(1);
    groups_[key_of(edges_.back())].push_back(static_cast<int>(edges_.size()) - 1);
    level_of_[si][u] = lu;
    level_of_[si][v] = lv;
  }

  // Offset of v relative to u along edge e.
  int delta(int e, int from) const {
    const auto& ed = edges_[e];
    const int d = diff_of(e);
    int step;
    if (ed.lu == ed.lv)
      step = sign_[e] * d;
    else
      step = ed.lu < ed.lv ? d : -d;  // class d joins (x, low) to (x + d, high)
    return from == ed.u ? step : -step;
  }

  bool place(int si) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // slot -> (edge, other)
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      if (edges_[e].sun == si) {
        adj[edges_[e].u].emplace_back(e, edges_[e].v);
        adj[edges_[e].v].emplace_back(e, edges_[e].u);
      }
    // components with relative coordinates
    std::vector<std::vector<std::pair<int, int>>> comps;  // (slot, relative coordinate)
    std::map<int, int> rel;
    for (const auto& [slot, lvl] : level_of_[si]) {
      (void)lvl;
      if (rel.count(slot)) continue;
      std::vector<std::pair<int, int>> comp{{slot, 0}};
      rel[slot] = 0;
      for (std::size_t h = 0; h < comp.size(); ++h) {
        const int x = comp[h].first;
        for (const auto& [e, y] : adj[x]) {
          const int c = static_cast<int>(mod(rel[x] + delta(e, x), k_));
          auto it = rel.find(y);
          if (it == rel.end()) {
            rel[y] = c;
            comp.emplace_back(y, c);
          } else if (it->second != c) {
            return false;
          }
        }
      }
      comps.push_back(std::move(comp));
    }
    // offsets for the components, avoiding collisions on a level
    std::vector<std::vector<char>> used(levels, std::vector<char>(k_, 0));
    std::vector<int> offset(comps.size(), 0);
    std::function<bool(std::size_t)> solve = [&](std::size_t c) {
      if (c == comps.size()) return true;
      const int start = static_cast<int>(rng_() % k_);
      for (int o0 = 0; o0 < k_; ++o0) {
        const int o = (start + o0) % k_;
        bool ok = true;
        std::vector<std::pair<int, int>> mark;
        for (const auto& [slot, r] : comps[c]) {
            auto& cell = used[level_of_[si][slot]][(r + o) % k_];
            if (cell) {
              ok = false;
              break;
            }
            cell = 1;
            mark.emplace_back(level_of_[si][slot], (r + o) % k_);
          }
        if (ok && solve(c + 1)) {
          offset[c] = o;
          return true;
        }
        for (const auto& [l, x] : mark) used[l][x] = 0;
      }
      return false;
    };
    if (!solve(0)) return false;
    auto& out = coord_[si];
    out.clear();
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (const auto& [slot, r] : comps[c]) out[slot] = (r + offset[c]) % k_;
    return true;
  }

  int k_;
  const std::vector<proto_sun>& suns_;
  std::mt19937& rng_;
  std::vector<point_edge> edges_;
  std::vector<int> sign_;
  std::map<int, std::vector<int>> groups_;
  std::map<int, std::vector<int>> pools_;
  std::map<int, std::map<int, int>> level_of_;  // sun -> slot -> level (points only)
  std::map<int, std::map<int, int>> coord_;
};

}  // namespace

sun_system searched_hole(int k, int n, std::uint32_t seed) {
  if (k < 5 || k % 2 == 0) throw precondition_error("searched hole: k must be odd and at least 5");
  if (n < 1) throw precondition_error("searched hole: n must be positive");
  // D = 4k - 1 + 2n - kS Dev suns, one per unused pure class.
  int s_count = 0, dev = -1;
  for (int s = 1; s <= 4 * k + n; ++s) {
    const int d = 4 * k - 1 + 2 * n - k * s;
    if (d >= 0 && d <= 2 * (k - 1) && n <= 3 * s && n >= 2 * s) {
      s_count = s;
      dev = d;
      break;
    }
  }
  if (dev < 0) throw precondition_error("searched hole: no base sun count fits (k, n)");
  std::vector<int> ts(s_count, 3);
  for (int i = 0; i < 3 * s_count - n; ++i) ts[s_count - 1 - i] = 2;

  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    level_search ls(k, n, ts, dev, rng);
    if (!ls.run(200000)) continue;
    const auto& protos = ls.suns();

    // pair each rim slot with a pendant slot of its missing level in another sun
    std::vector<std::pair<int, int>> rim_slots, pend_slots;  // (sun, position)
    std::vector<int> rim_missing, pend_level;
    for (int si = 0; si < s_count; ++si)
      for (int i = 0; i < k; ++i) {
        const auto& s = protos[si];
        if (s.rim[i] < 0) {
          rim_slots.emplace_back(si, i);
          rim_missing.push_back(6 - s.rim[(i + k - 1) % k] - s.rim[(i + 1) % k] - s.pend[i]);
        } else if (s.pend[i] < 0) {
          pend_slots.emplace_back(si, i);
          pend_level.push_back(s.rim[i]);
        }
      }
    std::vector<std::vector<int>> adj(rim_slots.size());
    for (std::size_t a = 0; a < rim_slots.size(); ++a)
      for (std::size_t b = 0; b < pend_slots.size(); ++b)
        if (rim_missing[a] == pend_level[b] && rim_slots[a].first != pend_slots[b].first)
          adj[a].push_back(static_cast<int>(b));
    std::vector<int> match;
    if (!perfect_matching(adj, static_cast<int>(pend_slots.size()), match, rng)) continue;

    coordinate_search cs(k, protos, rng);
    if (!cs.run(20000)) continue;

    // Dev slots against leftover mixed classes
    std::vector<std::pair<int, int>> dev_slots;  // (level, pure difference)
    for (int j = 0; j < levels; ++j)
      for (int d : cs.unused(j)) dev_slots.emplace_back(j, d);
    std::vector<std::pair<int, int>> mixed_left;  // (pair, difference)
    for (int p = 0; p < 6; ++p)
      for (int d : cs.unused(levels + p)) mixed_left.emplace_back(p, d);
    if (dev_slots.size() != mixed_left.size()) continue;
    std::vector<std::vector<int>> dadj(dev_slots.size());
    for (std::size_t a = 0; a < dev_slots.size(); ++a)
      for (std::size_t b = 0; b < mixed_left.size(); ++b) {
        const auto [lo, hi] = pair_levels(mixed_left[b].first);
        if (dev_slots[a].first == lo || dev_slots[a].first == hi) dadj[a].push_back(static_cast<int>(b));
      }
    std::vector<int> dmatch;
    if (!perfect_matching(dadj, static_cast<int>(mixed_left.size()), dmatch, rng)) continue;

    // assemble
    const auto z = cycles::zk(k);
    std::map<std::pair<int, int>, int> inf_id;  // rim slot -> infinity
    for (std::size_t a = 0; a < rim_slots.size(); ++a) inf_id[rim_slots[a]] = static_cast<int>(a) + 1;
    std::map<std::pair<int, int>, int> pend_inf;
    for (std::size_t a = 0; a < rim_slots.size(); ++a) pend_inf[pend_slots[match[a]]] = static_cast<int>(a) + 1;
    sun_system sys;
    sys.host = host_graph::complete_plus(4 * k, n);
    sys.legend = lift::hole_legend(k, n, 0);
    for (int si = 0; si < s_count; ++si) {
      const auto& s = protos[si];
      const auto& xy = cs.coords(si);
      sun base;
      for (int i = 0; i < k; ++i) {
        if (s.rim[i] < 0) {
          base.rim.push_back(vertex::inf(inf_id.at({si, i})));
          base.pendants.push_back(cycles::pt(k, xy.at(k + i), s.pend[i]));
        } else {
          base.rim.push_back(cycles::pt(k, xy.at(i), s.rim[i]));
          base.pendants.push_back(s.pend[i] < 0 ? vertex::inf(pend_inf.at({si, i}))
                                                : cycles::pt(k, xy.at(k + i), s.pend[i]));
        }
      }
      validate(base);
      for (int g = 0; g < k; ++g) sys.blocks.push_back(translate(z, base, z.reduce({g})));
    }
    for (std::size_t a = 0; a < dev_slots.size(); ++a) {
      const auto [j, d] = dev_slots[a];
      const auto [p, e] = mixed_left[dmatch[a]];
      const auto [lo, hi] = pair_levels(p);
      const int other = j == lo ? hi : lo;
      const int shift = j == lo ? e : -e;
      sun dv;
      for (int i = 0; i < k; ++i) {
        dv.rim.push_back(cycles::pt(k, static_cast<long long>(i) * d, j));
        dv.pendants.push_back(cycles::pt(k, static_cast<long long>(i) * d + shift, other));
      }
      sys.blocks.push_back(dv);
    }
    require_valid(sys, k, "searched K_" + std::to_string(4 * k) + "+" + std::to_string(n));
    return sys;
  }
  throw unsupported_error("searched hole: no system found for K_" + std::to_string(4 * k) + "+" + std::to_string(n));
}

}  // namespace sunsys::holes
