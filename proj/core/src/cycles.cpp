#include "sunsys/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::cycles {

std::vector<int> interval::values() const {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

group_spec zk(int k) { return group_spec::cyclic(k); }

vertex pt(int k, long long x, int level) {
  group_element e;
  e.n = 1;
  e.c[0] = static_cast<std::int32_t>(mod(x, k));
  return vertex::point(e, level);
}

host_graph host_of(const k2_graph& g) {
  const auto z = zk(g.k);
  diff_spec d(z, 2);
  for (int x : g.d00) d.add(0, 0, z.reduce({x}));
  for (int x : g.d01) d.add(0, 1, z.reduce({x}));
  for (int x : g.d11) d.add(1, 1, z.reduce({x}));
  return host_graph::plus(host_graph::diff(d), g.w);
}

cycle_system as_system(const k2_graph& g, std::vector<cycle> cycles) {
  cycle_system out;
  out.host = host_of(g);
  out.legend = *out.host.natural_labels();
  out.blocks = std::move(cycles);
  return out;
}

void require_cycle_system(const k2_graph& g, const std::vector<cycle>& cycles, const std::string& what) {
  require_valid(as_system(g, cycles), g.k, what);
}

namespace {

int ell_of(int k) { return (k - 1) / 2; }

void require_odd_k(int k) {
  if (k < 3 || k % 2 == 0) throw precondition_error("k must be odd and at least 3");
}

cycle cayley_cycle(int k, int d, int level) {
  cycle c;
  for (int i = 0; i < k; ++i) c.rim.push_back(pt(k, 1LL * i * d, level));
  return c;
}

// Number of connected components of a 2-regular colour class.
int components(int k, int a, int b, const std::vector<int>& ca, const std::vector<int>& cb, int colour) {
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = k;
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[x] = y;
      --comps;
    }
  };
  for (int x = 0; x < k; ++x) {
    if (ca[x] == colour) unite(x, (x + a) % k);
    if (cb[x] == colour) unite(x, (x + b) % k);
  }
  return comps;
}

std::vector<int> trace_colour(int k, int a, int b, const std::vector<int>& ca, const std::vector<int>& cb,
                              int colour) {
  std::vector<std::vector<int>> adj(k);
  for (int x = 0; x < k; ++x) {
    if (ca[x] == colour) {
      adj[x].push_back((x + a) % k);
      adj[(x + a) % k].push_back(x);
    }
    if (cb[x] == colour) {
      adj[x].push_back((x + b) % k);
      adj[(x + b) % k].push_back(x);
    }
  }
  std::vector<int> order{0};
  int prev = -1;
  int cur = 0;
  while (true) {
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    if (next == 0) break;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace

std::vector<std::vector<int>> hamilton_pair(int k, int a, int b) {
  require_odd_k(k);
  a = static_cast<int>(mod(a, k));
  b = static_cast<int>(mod(b, k));
  if (a == 0 || b == 0 || a == b || (a + b) % k == 0) throw precondition_error("hamilton_pair needs distinct non-zero +-differences");
  if (std::gcd(std::gcd(a, b), k) != 1) throw precondition_error("Cay(Z_k, {a, b}) is not connected");
  // colour 0 starts as the a-edges, colour 1 as the b-edges
  std::vector<int> ca(k, 0), cb(k, 1);
  auto objective = [&] { return components(k, a, b, ca, cb, 0) + components(k, a, b, ca, cb, 1); };
  std::mt19937 rng(static_cast<unsigned>(k * 1000003 + a * 1009 + b));
  int current = objective();
  for (long iter = 0; current > 2; ++iter) {
    if (iter > 200000) throw precondition_error("Hamilton decomposition search did not converge");
    std::vector<int> best;
    int best_value = current + 1;
    std::vector<int> valid;
    for (int x = 0; x < k; ++x) {
      const int xa = (x + a) % k;
      const int xb = (x + b) % k;
      if (ca[x] != ca[xb] || cb[x] != cb[xa] || ca[x] == cb[x]) continue;
      valid.push_back(x);
      ca[x] ^= 1, ca[xb] ^= 1, cb[x] ^= 1, cb[xa] ^= 1;
      const int v = objective();
      ca[x] ^= 1, ca[xb] ^= 1, cb[x] ^= 1, cb[xa] ^= 1;
      if (v < best_value) {
        best_value = v;
        best = {x};
      } else if (v == best_value) {
        best.push_back(x);
      }
    }
    if (valid.empty()) throw precondition_error("no alternating square available");
    int x;
    if (best_value <= current && !best.empty()) {
      x = best[rng() % best.size()];
    } else {
      x = valid[rng() % valid.size()];
    }
    const int xa = (x + a) % k;
    const int xb = (x + b) % k;
    ca[x] ^= 1, ca[xb] ^= 1, cb[x] ^= 1, cb[xa] ^= 1;
    current = objective();
  }
  return {trace_colour(k, a, b, ca, cb, 0), trace_colour(k, a, b, ca, cb, 1)};
}

std::vector<std::vector<int>> interval_partition(int k, interval iv) {
  const int l = ell_of(k);
  if (iv.empty()) return {};
  if (iv.lo < 1 || iv.hi > l) throw precondition_error("interval must lie inside [1, l]");
  std::vector<std::vector<int>> parts;
  auto pair_up = [&](int lo, int hi) {
    for (int x = lo; x + 1 <= hi; x += 2) parts.push_back({x, x + 1});
  };
  if (iv.size() % 2 == 0) {
    pair_up(iv.lo, iv.hi);
    return parts;
  }
  int c = -1;
  for (int x = iv.lo; x <= iv.hi && c < 0; ++x)
    if (std::gcd(x, k) == 1) c = x;
  if (c < 0) throw precondition_error("odd-size interval without an element coprime with k");
  parts.push_back({c});
  const int left = c - iv.lo;
  if (left % 2 == 0) {
    pair_up(iv.lo, c - 1);
    pair_up(c + 1, iv.hi);
  } else {
    pair_up(iv.lo, c - 2);
    parts.push_back({c - 1, c + 1});
    pair_up(c + 2, iv.hi);
  }
  return parts;
}

std::vector<cycle> cayley_interval_system(int k, interval ab, interval cd) {
  require_odd_k(k);
  std::vector<cycle> out;
  for (int level : {0, 1}) {
    for (const auto& part : interval_partition(k, level == 0 ? ab : cd)) {
      if (part.size() == 1) {
        out.push_back(cayley_cycle(k, part[0], level));
        continue;
      }
      for (const auto& seq : hamilton_pair(k, part[0], part[1])) {
        cycle c;
        for (int x : seq) c.rim.push_back(pt(k, x, level));
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<cycle> ell_pair_system(int k, const std::vector<int>& s_in) {
  require_odd_k(k);
  const int l = ell_of(k);
  std::vector<int> s;
  for (int x : s_in) s.push_back(static_cast<int>(mod(x, k)));
  std::sort(s.begin(), s.end());
  {
    std::set<int> used;
    for (int x : s)
      if (!used.insert(x).second || !used.insert((x + 1) % k).second)
        throw precondition_error("pairs {s, s+1} must be pairwise disjoint");
  }
  const int sigma = static_cast<int>(s.size());
  // Order the pass values so each consecutive forward gap is at most l + 1:
  // start right after the largest cyclic gap.
  std::vector<int> order;
  if (sigma > 0) {
    int cut = 0;
    int widest = -1;
    for (int i = 0; i < sigma; ++i) {
      const int gap = static_cast<int>(mod(s[(i + 1) % sigma] - s[i], k));
      const int g = sigma == 1 ? k : gap;
      if (g > widest) {
        widest = g;
        cut = (i + 1) % sigma;
      }
    }
    for (int i = 0; i < sigma; ++i) order.push_back(s[(cut + i) % sigma]);
  }
  // 2 sigma + 1 cycles; cycle 0 takes j = l - sigma, the rest j = 0.
  const int cycles = 2 * sigma + 1;
  std::vector<cycle> out;
  long long pos = 0;  // unwrapped descent position
  long long v = 0;    // start vertex on level 0
  for (int c = 0; c < cycles; ++c) {
    const int j = c == 0 ? l - sigma : 0;
    const int len = l - j;
    cycle cy;
    for (int i = 0; i <= 2 * j + 1; ++i) {
      if (i == 2 * j + 1 && len == 0) break;  // segment closes on itself
      cy.rim.push_back(pt(k, v + 1LL * i * l, 0));
    }
    for (int step = 0; step < len; ++step) {
      const long long x = pos + len - step;  // unwrapped position of this descent
      const long long h = v + len - step;
      const int pass = static_cast<int>((x - 1) / k);
      cy.rim.push_back(pt(k, h + order[pass], 1));
      if (step + 1 < len) cy.rim.push_back(pt(k, h - 1, 0));
    }
    out.push_back(cy);
    pos += len;
    v += len;
  }
  return out;
}

std::vector<cycle> ell_shift_system(int k, const std::vector<int>& s, bool shifted) {
  require_odd_k(k);
  for (int x : s)
    if (x < 1 || x > k - 2 || x % 2 == 0) throw precondition_error("S must consist of odd integers in [1, 2l-1]");
  auto out = ell_pair_system(k, s);
  if (shifted)
    for (auto& c : out) c = shift_level1(k, c, 1);
  return out;
}

edge plus_r_result::level0_tag() const { return edge(a[s - u - 1], a[s - u]); }
edge plus_r_result::level1_tag() const { return edge(a[s + u + 1], a[s + u + 2]); }

plus_r_result plus_r_cycle(int k, int s, int s2, int r, int g, int eps, int u) {
  require_odd_k(k);
  const int l = ell_of(k);
  if (!(1 <= s && s <= s2 && s2 <= std::min(s + 1, l))) throw precondition_error("need 1 <= s <= s' <= min(s+1, l)");
  if (r <= 0 || (r - s - s2) % 2 == 0) throw precondition_error("need 0 < r and r not congruent to s+s' mod 2");
  if (eps != 0 && eps != 1) throw precondition_error("eps must be 0 or 1");
  const int t = k - (s + s2 + 2 * r);
  if (t < 1) throw precondition_error("difference interval would be empty");
  if (!(u == 0 || (u == 1 && eps == 0 && s >= 2))) throw precondition_error("need u = 0 or u = 1 - eps = 1 <= s - 1");

  plus_r_result res;
  res.s = s;
  res.s2 = s2;
  res.u = u;
  const int na = s + s2 + 2;
  res.a.resize(na);
  for (int i = 0; i <= s; ++i)
    res.a[i] = i % 2 == 0 ? pt(k, -i / 2, 0) : pt(k, -s - eps + (i - 1) / 2, 0);
  for (int i = s + 1; i <= std::min(2 * s + 1, na - 1); ++i) {
    vertex v = res.a[2 * s + 1 - i];
    v.level = 1;
    res.a[i] = v;
  }
  if (s + s2 + 1 > 2 * s + 1) res.a[s + s2 + 1] = pt(k, -s2 - eps, 1);

  const int nb = t + r;
  res.b.resize(nb);
  for (int j = 0; j < nb; ++j) {
    if (j == t + r - 1) {
      res.b[j] = res.a[s + s2 + 1];
    } else if (j % 2 == 0) {
      res.b[j] = pt(k, j / 2, 0);
    } else if (j <= t - 1) {
      res.b[j] = pt(k, t - (j + 1) / 2, 1);
    } else {
      res.b[j] = pt(k, t + (j - t) / 2, 1);
    }
  }
  // F = P followed by Q reversed, with the infinities interleaved.
  cycle f;
  for (const auto& v : res.a) f.rim.push_back(v);
  for (int h = r; h >= 1; --h) {
    f.rim.push_back(vertex::inf(h));
    if (h >= 2) f.rim.push_back(res.b[t + h - 2]);
  }
  for (int j = t - 1; j >= 1; --j) f.rim.push_back(res.b[j]);
  validate(f);
  if (static_cast<int>(f.rim.size()) != k) throw precondition_error("internal: base cycle has wrong length");

  res.base = shift_level1(k, f, g);
  for (auto& v : res.a)
    if (v.is_point() && v.level == 1) v = pt(k, v.elem[0] + g, 1);
  for (auto& v : res.b)
    if (v.is_point() && v.level == 1) v = pt(k, v.elem[0] + g, 1);
  return res;
}

k2_graph plus_r_host(int k, int s, int s2, int r, int g, int eps) {
  k2_graph out;
  out.k = k;
  out.w = r;
  for (int x = 1 + eps; x <= s + eps; ++x) out.d00.push_back(x);
  for (int x = 1 + eps; x <= s2 + eps; ++x) out.d11.push_back(x);
  const int t = k - (s + s2 + 2 * r);
  for (int x = g; x < g + t; ++x) out.d01.push_back(x);
  return out;
}

cycle plus_ell_base(int k, int h) {
  require_odd_k(k);
  const int l = ell_of(k);
  if (h != 0 && h != 1) throw precondition_error("h must be 0 or 1");
  cycle c;
  c.rim.push_back(pt(k, 0, 1 - h));
  c.rim.push_back(pt(k, h * l, 0));
  for (int j = 3; j <= l + 2; ++j) {
    c.rim.push_back(vertex::inf(j - 2));
    if (j <= l + 1) c.rim.push_back(j % 2 == 1 ? pt(k, (j - 1) / 2, 1) : pt(k, j / 2, 0));
  }
  validate(c);
  return c;
}

namespace {

cycle relabel(const cycle& c, const std::map<vertex, vertex>& pi) {
  cycle out;
  for (const auto& v : c.rim) {
    auto it = pi.find(v);
    out.rim.push_back(it == pi.end() ? v : it->second);
  }
  return out;
}

std::vector<vertex> all_points(int k) {
  std::vector<vertex> out;
  for (int j = 0; j < 2; ++j)
    for (int x = 0; x < k; ++x) out.push_back(pt(k, x, j));
  return out;
}

}  // namespace

std::vector<cycle> plus_ell_one_factor(int k, const std::vector<edge>& factor) {
  require_odd_k(k);
  if (ell_of(k) % 2 == 0) throw precondition_error("the 1-factor form needs l odd");
  if (static_cast<int>(factor.size()) != k) throw precondition_error("a 1-factor of K_2k has k edges");
  std::map<vertex, vertex> pi;
  for (int g = 0; g < k; ++g) {
    pi[pt(k, g, 0)] = factor[g].a;
    pi[pt(k, g, 1)] = factor[g].b;
  }
  std::set<vertex> image;
  for (const auto& [from, to] : pi) image.insert(to);
  if (image.size() != static_cast<std::size_t>(2 * k)) throw precondition_error("edges do not form a 1-factor");
  const auto z = zk(k);
  const cycle base = plus_ell_base(k, 0);
  std::vector<cycle> out;
  for (int g = 0; g < k; ++g) out.push_back(relabel(translate(z, base, z.reduce({g})), pi));
  return out;
}

std::vector<cycle> plus_ell_cycle(int k, const cycle& gamma) {
  require_odd_k(k);
  const int l = ell_of(k);
  if (l % 2 == 1) throw precondition_error("the k-cycle form needs l even");
  if (static_cast<int>(gamma.rim.size()) != k) throw precondition_error("Gamma must be a k-cycle");
  validate(gamma);
  std::map<vertex, vertex> pi;
  std::set<vertex> used(gamma.rim.begin(), gamma.rim.end());
  for (int j = 0; j < k; ++j) pi[pt(k, 1LL * j * l, 0)] = gamma.rim[j];
  std::vector<vertex> rest;
  for (const auto& v : all_points(k))
    if (!used.count(v)) rest.push_back(v);
  if (rest.size() != static_cast<std::size_t>(k)) throw precondition_error("Gamma must use points of Z_k x {0,1}");
  for (int x = 0; x < k; ++x) pi[pt(k, x, 1)] = rest[x];
  const auto z = zk(k);
  const cycle base = plus_ell_base(k, 1);
  std::vector<cycle> out;
  for (int j = 0; j < k; ++j) out.push_back(relabel(translate(z, base, z.reduce({1LL * j * l})), pi));
  return out;
}

cycle plus_ell_difference(int k, int d) {
  require_odd_k(k);
  const int l = ell_of(k);
  if (l % 2 == 1) return shift_level1(k, plus_ell_base(k, 0), d);
  if (std::gcd(static_cast<int>(mod(d, k)), k) != 1) throw precondition_error("cycle form needs d coprime with k");
  // multiplier m with m * l = d maps the l-cycle onto the d-cycle
  int m = -1;
  for (int x = 1; x < k && m < 0; ++x)
    if (mod(1LL * x * l - d, k) == 0) m = x;
  cycle out;
  for (const auto& v : plus_ell_base(k, 1).rim)
    out.rim.push_back(v.is_point() ? pt(k, 1LL * m * v.elem[0], v.level) : v);
  return out;
}

std::vector<std::vector<edge>> one_factorization(int k, const std::vector<int>& d_in) {
  require_odd_k(k);
  const int l = ell_of(k);
  std::vector<int> d;
  for (int x : d_in) {
    if (x < 1 || x > l) throw precondition_error("D must lie inside [1, l]");
    d.push_back(x);
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  const int delta = 2 * static_cast<int>(d.size());
  const int colours = delta + 1;
  // Misra-Gries edge colouring of Cay(Z_k, +-D) with delta + 1 colours.
  std::vector<std::vector<int>> col(k, std::vector<int>(k, -2));  // -2: no edge
  for (int x = 0; x < k; ++x)
    for (int s : d) {
      col[x][(x + s) % k] = -1;
      col[(x + s) % k][x] = -1;
    }
  auto is_free = [&](int x, int c) {
    for (int y = 0; y < k; ++y)
      if (col[x][y] == c) return false;
    return true;
  };
  auto free_colour = [&](int x) {
    for (int c = 0; c < colours; ++c)
      if (is_free(x, c)) return c;
    throw precondition_error("internal: no free colour");
  };
  auto set = [&](int x, int y, int c) {
    col[x][y] = c;
    col[y][x] = c;
  };
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      if (col[u][v] != -1) continue;
      std::vector<int> fan{v};
      std::vector<bool> in_fan(k, false);
      in_fan[v] = true;
      for (bool grown = true; grown;) {
        grown = false;
        for (int z = 0; z < k; ++z)
          if (!in_fan[z] && col[u][z] >= 0 && is_free(fan.back(), col[u][z])) {
            fan.push_back(z);
            in_fan[z] = true;
            grown = true;
            break;
          }
      }
      const int c = free_colour(u);
      const int dcol = free_colour(fan.back());
      // invert the cd-path starting at u
      {
        std::vector<std::pair<int, int>> path;
        int cur = u;
        int want = dcol;
        int prev = -1;
        for (;;) {
          int next = -1;
          for (int y = 0; y < k; ++y)
            if (y != prev && col[cur][y] == want) {
              next = y;
              break;
            }
          if (next < 0) break;
          path.emplace_back(cur, next);
          prev = cur;
          cur = next;
          want = want == dcol ? c : dcol;
        }
        for (const auto& [x, y] : path) set(x, y, col[x][y] == dcol ? c : dcol);
      }
      std::size_t w = 0;
      for (std::size_t i = 0; i < fan.size(); ++i) {
        bool prefix_is_fan = true;
        for (std::size_t j = 1; j <= i && prefix_is_fan; ++j)
          prefix_is_fan = col[u][fan[j]] >= 0 && is_free(fan[j - 1], col[u][fan[j]]);
        if (!prefix_is_fan) break;
        if (is_free(fan[i], dcol)) {
          w = i;
          break;
        }
      }
      for (std::size_t j = 0; j < w; ++j) set(u, fan[j], col[u][fan[j + 1]]);
      set(u, fan[w], dcol);
    }
  std::vector<std::vector<edge>> out(colours);
  for (int c = 0; c < colours; ++c) {
    for (int x = 0; x < k; ++x) {
      for (int y = x + 1; y < k; ++y)
        if (col[x][y] == c) {
          out[c].emplace_back(pt(k, x, 0), pt(k, y, 0));
          out[c].emplace_back(pt(k, x, 1), pt(k, y, 1));
        }
      if (is_free(x, c)) out[c].emplace_back(pt(k, x, 0), pt(k, x, 1));
    }
    std::sort(out[c].begin(), out[c].end());
  }
  for (const auto& m : out) {
    std::set<vertex> seen;
    for (const auto& e : m)
      if (!seen.insert(e.a).second || !seen.insert(e.b).second)
        throw precondition_error("internal: colour class is not a matching");
    if (seen.size() != static_cast<std::size_t>(2 * k)) throw precondition_error("internal: colour class is not perfect");
  }
  return out;
}

vertex flip(const vertex& v) {
  if (!v.is_point()) return v;
  vertex w = v;
  w.level = static_cast<std::int16_t>(1 - v.level);
  return w;
}

cycle flip(const cycle& c) {
  cycle out;
  for (const auto& v : c.rim) out.rim.push_back(flip(v));
  return out;
}

std::vector<cycle> flip(const std::vector<cycle>& cs) {
  std::vector<cycle> out;
  for (const auto& c : cs) out.push_back(flip(c));
  return out;
}

k2_graph flip(const k2_graph& g) {
  k2_graph out = g;
  out.d00 = g.d11;
  out.d11 = g.d00;
  out.d01.clear();
  for (int x : g.d01) out.d01.push_back(static_cast<int>(mod(-x, g.k)));
  return out;
}

cycle shift_level1(int k, const cycle& c, int g) {
  cycle out;
  for (const auto& v : c.rim)
    out.rim.push_back(v.is_point() && v.level == 1 ? pt(k, v.elem[0] + g, 1) : v);
  return out;
}

}  // namespace sunsys::cycles
