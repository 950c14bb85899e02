#include <algorithm>
#include <numeric>
#include <random>

#include "sunsys/assembly.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/lift.hpp"
#include "sunsys/verify.hpp"

// K_{g x 2k} is handled as Z_k x [0, 2g-1] with part x = levels {2x, 2x+1}:
// every pair of levels from different parts carries all k differences.  The
// level graph K_{g x 2} is split into odd cycles, and an odd level cycle
// L_0 .. L_{m-1} becomes m base k-cycles A_0 .. A_{m-1}.  A_r zigzags
// between L_r and L_{r+1} over the differences [c_r, c_r + k - m] and then
// walks once around the remaining levels; the tail edges of the m rotations
// fill the m - 1 differences each pair still misses.
namespace sunsys::assembly {

namespace {

int part_of(int level) { return level / 2; }

// Triangle decomposition of a graph with even degrees and 3 | |E|, by
// hill climbing: take a live vertex x with uncovered edges xy, xz and add
// {x, y, z}, evicting the triangle that held yz if any.
bool triangle_hill_climb(int nv, const std::vector<std::vector<char>>& edges, std::mt19937& rng,
                         std::vector<std::array<int, 3>>& out) {
  std::vector<std::vector<int>> third(nv, std::vector<int>(nv, -1));  // -1 uncovered, -2 absent
  int uncovered = 0;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      if (!edges[a][b]) third[a][b] = -2;
      else if (a < b) ++uncovered;
    }
  const long limit = 2000L * nv * nv;
  for (long it = 0; uncovered > 0 && it < limit; ++it) {
    std::vector<int> live;
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b)
        if (third[a][b] == -1) {
          live.push_back(a);
          break;
        }
    const int x = live[rng() % live.size()];
    std::vector<int> free;
    for (int b = 0; b < nv; ++b)
      if (third[x][b] == -1) free.push_back(b);
    if (free.size() < 2) return false;
    std::shuffle(free.begin(), free.end(), rng);
    const int y = free[0];
    const int z = free[1];
    if (third[y][z] == -2) continue;
    if (third[y][z] >= 0) {
      const int w = third[y][z];
      for (auto [a, b] : {std::pair{y, w}, std::pair{z, w}, std::pair{y, z}}) third[a][b] = third[b][a] = -1;
      uncovered += 3;
    }
    third[x][y] = third[y][x] = z;
    third[x][z] = third[z][x] = y;
    third[y][z] = third[z][y] = x;
    uncovered -= 3;
  }
  if (uncovered > 0) return false;
  out.clear();
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (third[a][b] > b) out.push_back({a, b, third[a][b]});
  return true;
}

// Parameters of the m rotations: main interval starts c_r and tail
// differences t_r[1..m-1] (t_r[0] unused).
struct block_params {
  std::vector<long long> c;
  std::vector<std::vector<long long>> t;
};

block_params odd_block_params(int k, int m) {
  const long long h = (k - m) / 2;
  block_params bp;
  bp.c.assign(m, 0);
  bp.t.assign(m, std::vector<long long>(m, 0));
  if (m == 3) {
    // Pair q needs {t_{q-1}[1], t_{q-2}[2]} = {c_q - 2, c_q - 1}, with
    // t_r[1] = z_r - c_r - h and t_r[2] = -z_r.
    for (long long c0 = 0; c0 < k; ++c0)
      for (long long c1 = 0; c1 < k; ++c1)
        for (long long c2 = 0; c2 < k; ++c2) {
          const long long c[3] = {c0, c1, c2};
          for (int mask = 0; mask < 8; ++mask) {
            long long z[3];
            for (int r = 0; r < 3; ++r) z[r] = mod(((mask >> r) & 1 ? 1 : 2) - c[(r + 2) % 3], k);
            bool ok = true;
            for (int q = 0; q < 3 && ok; ++q) {
              const int r1 = (q + 2) % 3;
              const int r2 = (q + 1) % 3;
              long long got[2] = {mod(z[r1] - c[r1] - h, k), mod(-z[r2], k)};
              long long want[2] = {mod(c[q] - 2, k), mod(c[q] - 1, k)};
              std::sort(got, got + 2);
              std::sort(want, want + 2);
              ok = got[0] == want[0] && got[1] == want[1];
            }
            if (!ok) continue;
            for (int r = 0; r < 3; ++r) {
              bp.c[r] = c[r];
              bp.t[r][1] = mod(z[r] - c[r] - h, k);
              bp.t[r][2] = mod(-z[r], k);
            }
            return bp;
          }
        }
    throw unsupported_error("no triangle block parameters for k = " + std::to_string(k));
  }
  // Symmetric rotations: m c = m(m-1)/2 - h (mod k) and t[j] = c - j.
  if (std::gcd(m, k) != 1) throw unsupported_error("odd level cycle length shares a factor with k");
  long long inv = 1;
  while (mod(inv * m, k) != 1) ++inv;
  const long long c = mod((static_cast<long long>(m) * (m - 1) / 2 - h) * inv, k);
  for (int r = 0; r < m; ++r) {
    bp.c[r] = c;
    for (int j = 1; j < m; ++j) bp.t[r][j] = mod(c - j, k);
  }
  return bp;
}

// Base k-cycles of one odd level cycle, vertices (a, level) over Z_k.
std::vector<std::vector<std::pair<long long, int>>> odd_block_cycles(int k, const std::vector<int>& levels,
                                                                      const block_params& bp) {
  const int m = static_cast<int>(levels.size());
  const long long h = (k - m) / 2;
  std::vector<std::vector<std::pair<long long, int>>> out;
  for (int r = 0; r < m; ++r) {
    std::vector<std::pair<long long, int>> cyc;
    const int lo = levels[r];
    const int hi = levels[(r + 1) % m];
    for (long long s = 0; s <= h; ++s) {
      cyc.push_back({mod(-s, k), lo});
      cyc.push_back({mod(bp.c[r] + s, k), hi});
    }
    long long cur = mod(bp.c[r] + h, k);
    for (int j = 1; j <= m - 2; ++j) {
      cur = mod(cur + bp.t[r][j], k);
      cyc.push_back({cur, levels[(r + j + 1) % m]});
    }
    out.push_back(cyc);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> level_cycles(int k, int g, std::uint32_t seed) {
  if (k < 3 || k % 2 == 0) throw precondition_error("multipartite filler needs odd k >= 3");
  if (g < 3) throw precondition_error("multipartite filler needs g >= 3 parts");
  const int nv = 2 * g;
  const long long e = 2LL * g * (g - 1);

  // Odd cycles of length m >= 5 absorb |E| mod 3.
  int m = 0;
  int b = 0;
  if (e % 3 != 0) {
    for (int cand = 5; cand <= std::min(k, nv); cand += 2) {
      if (std::gcd(cand, k) != 1 || cand % 3 == 0) continue;
      const int need = cand % 3 == 1 ? 1 : 2;
      if (need * cand > nv) continue;
      m = cand;
      b = need;
      break;
    }
    if (m == 0)
      throw unsupported_error("no odd cycle length fits K_{" + std::to_string(g) + " x 2} for k = " + std::to_string(k));
  }

  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::vector<char>> edges(nv, std::vector<char>(nv, 0));
    for (int a = 0; a < nv; ++a)
      for (int c = 0; c < nv; ++c)
        if (part_of(a) != part_of(c)) edges[a][c] = 1;
    std::vector<std::vector<int>> cycles;
    // b vertex-disjoint m-cycles through distinct parts where possible
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
    else std::stable_sort(order.begin(), order.end(), [](int x, int y) { return x % 2 < y % 2; });
    bool placed = true;
    for (int i = 0; i < b && placed; ++i) {
      std::vector<int> cyc(order.begin() + i * m, order.begin() + (i + 1) * m);
      for (int j = 0; j < m; ++j)
        if (!edges[cyc[j]][cyc[(j + 1) % m]]) placed = false;
      if (!placed) break;
      for (int j = 0; j < m; ++j) edges[cyc[j]][cyc[(j + 1) % m]] = edges[cyc[(j + 1) % m]][cyc[j]] = 0;
      cycles.push_back(cyc);
    }
    if (!placed) continue;
    std::vector<std::array<int, 3>> tris;
    if (!triangle_hill_climb(nv, edges, rng, tris)) continue;
    for (const auto& t : tris) cycles.push_back({t[0], t[1], t[2]});
    return cycles;
  }
  throw unsupported_error("no odd-cycle decomposition of K_{" + std::to_string(g) + " x 2} found");
}

cycle_system multipartite_cycle_system(int k, int g) {
  const auto zgk = group_spec::cyclic(g * k);
  auto label = [&](long long a, int level) {
    return vertex::point(zgk.reduce({static_cast<long long>(part_of(level)) * k + mod(a, k)}), level % 2);
  };
  std::vector<block_params> params(k + 1);
  std::vector<char> have(k + 1, 0);
  cycle_system out;
  out.host = host_graph::multipartite(g, 2 * k);
  for (int x = 0; x < g; ++x)
    for (int level = 0; level < 2; ++level)
      for (int a = 0; a < k; ++a) out.legend.push_back(label(a, 2 * x + level));
  for (const auto& lc : level_cycles(k, g)) {
    const int m = static_cast<int>(lc.size());
    if (!have[m]) {
      params[m] = odd_block_params(k, m);
      have[m] = 1;
    }
    for (const auto& base : odd_block_cycles(k, lc, params[m]))
      for (long long t = 0; t < k; ++t) {
        cycle c;
        for (const auto& [a, level] : base) c.rim.push_back(label(a + t, level));
        out.blocks.push_back(c);
      }
  }
  require_valid(out, k, "k-cycle system of K_{" + std::to_string(g) + " x " + std::to_string(2 * k) + "}");
  return out;
}

sun_system multipartite_sun_system(int k, int g) {
  const auto out = lift::lift_cycle_system(multipartite_cycle_system(k, g), k);
  require_valid(out, k, "k-sun system of K_{" + std::to_string(g) + " x " + std::to_string(4 * k) + "}");
  return out;
}

}  // namespace sunsys::assembly
