#include "sunsys/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::search {

std::string to_string(outcome o) {
  switch (o) {
    case outcome::found:
      return "found";
    case outcome::impossible:
      return "impossible";
    case outcome::exhausted:
      return "exhausted";
    case outcome::cap_exceeded:
      return "cap-exceeded";
  }
  return "?";
}

namespace {

struct cap_hit {};

// Vertex layout under Z_m: vertex 0 is the fixed point when there is one,
// then (level, a) -> fixed + level * m + a.
struct layout {
  int v = 0;
  int m = 1;
  int fixed = 0;

  int translate(int id, int t) const {
    if (id < fixed) return id;
    const int r = id - fixed;
    return fixed + (r / m) * m + (r % m + t) % m;
  }
  int level(int id) const { return (id - fixed) / m; }
  int elem(int id) const { return (id - fixed) % m; }
  int at(int level, long long a) const { return fixed + level * m + static_cast<int>(mod(a, m)); }
};

struct placed_row {
  std::vector<int> rim;
  std::vector<int> pendants;
  bool invariant = false;  // fixed by every translation
};

class engine {
public:
  engine(int v, int k, block_kind kind, layout lay, const std::vector<index_edge>& host_edges, const options& opt)
      : v_(v), k_(k), kind_(kind), lay_(lay), opt_(opt), orbit_(static_cast<std::size_t>(v) * v, -1) {
    std::vector<char> present(static_cast<std::size_t>(v) * v, 0);
    for (const auto& [a, b] : host_edges) present[a * v + b] = present[b * v + a] = 1;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) {
        if (!present[a * v + b] || orbit_[a * v + b] >= 0) continue;
        const int id = static_cast<int>(rep_.size());
        rep_.push_back({a, b});
        for (int t = 0; t < lay_.m; ++t) {
          const int x = lay_.translate(a, t);
          const int y = lay_.translate(b, t);
          orbit_[x * v + y] = orbit_[y * v + x] = id;
        }
      }
    covered_.assign(rep_.size(), 0);
    in_block_.assign(v, 0);
    if (lay_.m == k_ && lay_.m > 1) add_invariant_rows();
  }

  std::size_t columns() const { return rep_.size(); }
  std::size_t invariant_rows() const { return invariant_list_.size(); }

  // Runs one attempt with the given vertex order and node budget.  Returns
  // true when a system was found, false when the space was exhausted.
  bool run(const std::vector<int>& order, const std::vector<std::size_t>& inv_order, long long budget,
           std::chrono::steady_clock::time_point deadline) {
    order_ = order;
    inv_order_ = inv_order;
    budget_ = budget;
    deadline_ = deadline;
    std::fill(covered_.begin(), covered_.end(), 0);
    std::fill(in_block_.begin(), in_block_.end(), 0);
    chosen_.clear();
    // Invariant rows cover one or two columns, full rows 2k (suns) or k
    // (cycles); fix the number b of invariant rows first, smallest first.
    const long long ncols = static_cast<long long>(rep_.size());
    const int per_full = kind_ == block_kind::sun ? 2 * k_ : k_;
    const int per_inv = kind_ == block_kind::sun ? 2 : 1;
    const long long max_b = invariant_list_.empty() ? 0 : ncols / per_inv;
    for (long long b = 0; b <= max_b; ++b) {
      if ((ncols - per_inv * b) % per_full != 0) continue;
      if (pick_invariant(0, b)) return true;
    }
    return false;
  }

  long long nodes() const { return nodes_; }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> expand() const {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& r : chosen_) {
      const int copies = r.invariant ? 1 : lay_.m;
      for (int t = 0; t < copies; ++t) {
        std::pair<std::vector<int>, std::vector<int>> b;
        for (int x : r.rim) b.first.push_back(lay_.translate(x, t));
        for (int x : r.pendants) b.second.push_back(lay_.translate(x, t));
        out.push_back(std::move(b));
      }
    }
    return out;
  }

private:
  int v_;
  int k_;
  block_kind kind_;
  layout lay_;
  options opt_;
  std::vector<int> orbit_;
  std::vector<std::pair<int, int>> rep_;
  std::vector<char> covered_;
  std::vector<char> in_block_;
  std::vector<placed_row> invariant_list_;
  std::vector<std::size_t> inv_order_;
  std::vector<int> order_;
  std::vector<placed_row> chosen_;
  std::vector<int> rim_;
  std::vector<int> pend_;
  long long nodes_ = 0;
  long long budget_ = 0;
  std::chrono::steady_clock::time_point deadline_;

  int col(int a, int b) const { return orbit_[a * v_ + b]; }

  void tick() {
    ++nodes_;
    if (budget_ > 0 && nodes_ > budget_) throw cap_hit{};
    if ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() > deadline_) throw cap_hit{};
  }

  // Blocks fixed by all of Z_k (k = m): the rim runs through a whole level
  // with a step x coprime to k; suns attach the pendants (ax + y, j).
  void add_invariant_rows() {
    const int levels = (v_ - lay_.fixed) / lay_.m;
    for (int l = 0; l < levels; ++l)
      for (int x = 1; x <= (k_ - 1) / 2; ++x) {
        if (std::gcd(x, k_) != 1) continue;
        placed_row base;
        base.invariant = true;
        for (int a = 0; a < k_; ++a) base.rim.push_back(lay_.at(l, 1LL * a * x));
        const int rim_col = col(base.rim[0], base.rim[1]);
        if (rim_col < 0) continue;
        if (kind_ == block_kind::cycle) {
          invariant_list_.push_back(base);
          continue;
        }
        for (int j = 0; j < levels; ++j) {
          if (j == l) continue;
          for (int y = 0; y < k_; ++y) {
            placed_row r = base;
            for (int a = 0; a < k_; ++a) r.pendants.push_back(lay_.at(j, 1LL * a * x + y));
            const int pc = col(r.rim[0], r.pendants[0]);
            if (pc < 0) continue;
            invariant_list_.push_back(r);
          }
        }
      }
  }

  std::vector<int> row_columns(const placed_row& r) const {
    std::vector<int> out;
    for (int i = 0; i < k_; ++i) out.push_back(col(r.rim[i], r.rim[(i + 1) % k_]));
    for (int i = 0; i < static_cast<int>(r.pendants.size()); ++i) out.push_back(col(r.rim[i], r.pendants[i]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Chooses `left` more invariant rows from invariant_list_[from..], then
  // covers the rest with full orbits.
  bool pick_invariant(std::size_t from, long long left) {
    if (left == 0) return solve();
    tick();
    for (std::size_t i = from; i + left <= inv_order_.size(); ++i) {
      const auto& row = invariant_list_[inv_order_[i]];
      const auto cols = row_columns(row);
      if (std::any_of(cols.begin(), cols.end(), [&](int x) { return covered_[x]; })) continue;
      for (int x : cols) covered_[x] = 1;
      chosen_.push_back(row);
      if (pick_invariant(i + 1, left - 1)) return true;
      chosen_.pop_back();
      for (int x : cols) covered_[x] = 0;
    }
    return false;
  }

  bool solve() {
    const auto it = std::find(covered_.begin(), covered_.end(), 0);
    if (it == covered_.end()) return true;
    const int c = static_cast<int>(it - covered_.begin());
    tick();
    const auto [x, y] = rep_[c];
    rim_.assign(k_, -1);
    pend_.assign(k_, -1);
    covered_[c] = 1;
    in_block_[x] = in_block_[y] = 1;
    bool found = false;
    // xy on the rim
    rim_[0] = x;
    rim_[1] = y;
    found = extend_rim(2);
    if (!found && kind_ == block_kind::sun) {
      // xy as a pendant edge, attached at x or at y
      for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        rim_.assign(k_, -1);
        pend_.assign(k_, -1);
        rim_[0] = a;
        pend_[0] = b;
        if ((found = extend_rim(1))) break;
      }
    }
    if (!found) {
      covered_[c] = 0;
      in_block_[x] = in_block_[y] = 0;
    }
    return found;
  }

  bool extend_rim(int pos) {
    tick();
    if (pos == k_) {
      const int cc = col(rim_[k_ - 1], rim_[0]);
      if (cc < 0 || covered_[cc]) return false;
      covered_[cc] = 1;
      if (kind_ == block_kind::cycle ? commit() : attach(0)) return true;
      covered_[cc] = 0;
      return false;
    }
    for (int z : order_) {
      if (in_block_[z]) continue;
      const int cc = col(rim_[pos - 1], z);
      if (cc < 0 || covered_[cc]) continue;
      covered_[cc] = 1;
      in_block_[z] = 1;
      rim_[pos] = z;
      if (extend_rim(pos + 1)) return true;
      rim_[pos] = -1;
      in_block_[z] = 0;
      covered_[cc] = 0;
    }
    return false;
  }

  bool attach(int i) {
    if (i == k_) return commit();
    if (pend_[i] >= 0) return attach(i + 1);
    tick();
    for (int z : order_) {
      if (in_block_[z]) continue;
      const int cc = col(rim_[i], z);
      if (cc < 0 || covered_[cc]) continue;
      covered_[cc] = 1;
      in_block_[z] = 1;
      pend_[i] = z;
      if (attach(i + 1)) return true;
      pend_[i] = -1;
      in_block_[z] = 0;
      covered_[cc] = 0;
    }
    return false;
  }

  bool commit() {
    placed_row r;
    r.rim = rim_;
    if (kind_ == block_kind::sun) r.pendants = pend_;
    const auto saved_rim = rim_;
    const auto saved_pend = pend_;
    for (int z : r.rim) in_block_[z] = 0;
    for (int z : r.pendants) in_block_[z] = 0;
    chosen_.push_back(std::move(r));
    if (solve()) return true;
    chosen_.pop_back();
    rim_ = saved_rim;
    pend_ = saved_pend;
    for (int z : rim_)
      if (z >= 0) in_block_[z] = 1;
    for (int z : pend_)
      if (z >= 0) in_block_[z] = 1;
    return false;
  }
};

// 1, 1, 2, 1, 1, 2, 4, 1, 1, 2, ...
long long luby(long long i) {
  for (long long size = 1;; size = 2 * size + 1) {
    if (size == i) return (size + 1) / 2;
    if (i < size) return luby(i - (size - 1) / 2);
  }
}

// Z_k when K_v splits as Z_k x [0, L-1] plus at most one fixed point.
layout choose_layout(int v, int k, int requested) {
  layout lay;
  lay.v = v;
  int m = requested;
  if (m == 0) m = (v > 12 && (v % k == 0 || v % k == 1)) ? k : 1;
  if (m < 1 || (m % 2 == 0 && m > 1)) throw precondition_error("symmetry order must be 1 or odd");
  if (m > 1 && v % m != 0 && v % m != 1) throw precondition_error("symmetry order must divide v or v - 1");
  lay.m = m;
  lay.fixed = m > 1 ? v % m : 0;
  return lay;
}

}  // namespace

result exact_cover_search(const host_graph& host, const std::vector<vertex>& legend, int k, block_kind kind,
                          const options& opt) {
  if (k < 3) throw precondition_error("block size must be at least 3");
  const int v = static_cast<int>(host.vertex_count());
  if (static_cast<int>(legend.size()) != v) throw precondition_error("legend size differs from the host");
  result res;
  const long long e = host.edge_count();
  const int block_edges = kind == block_kind::sun ? 2 * k : k;
  const int block_vertices = kind == block_kind::sun ? 2 * k : k;
  if (e % block_edges != 0 || v < block_vertices) {
    res.status = outcome::impossible;
    res.reason = e % block_edges != 0 ? "edge count not divisible by block size" : "fewer vertices than a block";
    return res;
  }
  const bool complete = host.type() == host_graph::kind::complete;
  if (!complete && opt.symmetry > 1) throw precondition_error("symmetry needs a complete host");
  const layout lay = complete ? choose_layout(v, k, opt.symmetry) : layout{v, 1, 0};
  res.symmetry = lay.m;
  engine eng(v, k, kind, lay, host.edges(), opt);

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opt.time_cap_seconds));
  std::mt19937 rng(opt.seed);
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> inv_order(eng.invariant_rows());
  std::iota(inv_order.begin(), inv_order.end(), 0);
  // Restarts over reshuffled vertex and invariant-row orders with node
  // budgets following the Luby sequence; the first attempt keeps the
  // natural order.  Budgets grow without bound, so an attempt eventually
  // runs to exhaustion.
  bool exhausted = false;
  try {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 0) {
        std::shuffle(order.begin(), order.end(), rng);
        std::shuffle(inv_order.begin(), inv_order.end(), rng);
      }
      long long b = 4096 * luby(attempt + 1);
      if (opt.node_cap > 0) b = std::min(b, opt.node_cap - eng.nodes());
      if (b <= 0) throw cap_hit{};
      try {
        exhausted = !eng.run(order, inv_order, eng.nodes() + b, deadline);
        break;
      } catch (const cap_hit&) {
        if (std::chrono::steady_clock::now() > deadline) throw;
        if (opt.node_cap > 0 && eng.nodes() >= opt.node_cap) throw;
      }
    }
  } catch (const cap_hit&) {
    res.status = outcome::cap_exceeded;
    res.nodes = eng.nodes();
    res.reason = "time or node cap reached";
    return res;
  }
  res.nodes = eng.nodes();
  if (exhausted) {
    res.status = lay.m == 1 ? outcome::impossible : outcome::exhausted;
    res.reason = lay.m == 1 ? "exhaustive search found no system"
                            : "no system invariant under Z_" + std::to_string(lay.m);
    return res;
  }
  res.status = outcome::found;
  const auto blocks = eng.expand();
  if (kind == block_kind::sun) {
    res.suns.host = host;
    res.suns.legend = legend;
    for (const auto& [rim, pend] : blocks) {
      sun s;
      for (int x : rim) s.rim.push_back(legend[x]);
      for (int x : pend) s.pendants.push_back(legend[x]);
      res.suns.blocks.push_back(canonical(s));
    }
    std::sort(res.suns.blocks.begin(), res.suns.blocks.end(), [](const sun& a, const sun& b) {
      return a.rim != b.rim ? a.rim < b.rim : a.pendants < b.pendants;
    });
    require_valid(res.suns, k, "searched sun system");
  } else {
    res.cycles.host = host;
    res.cycles.legend = legend;
    for (const auto& [rim, pend] : blocks) {
      cycle c;
      for (int x : rim) c.rim.push_back(legend[x]);
      res.cycles.blocks.push_back(canonical(c));
    }
    std::sort(res.cycles.blocks.begin(), res.cycles.blocks.end(),
              [](const cycle& a, const cycle& b) { return a.rim < b.rim; });
    require_valid(res.cycles, k, "searched cycle system");
  }
  return res;
}

result search_complete(int k, int v, block_kind kind, const options& opt) {
  if (v < 1) throw precondition_error("v must be positive");
  const auto g = group_spec::cyclic(v);
  std::vector<vertex> legend;
  for (int i = 0; i < v; ++i) legend.push_back(vertex::point(g.reduce({i}), 0));
  return exact_cover_search(host_graph::complete(v), legend, k, kind, opt);
}

}  // namespace sunsys::search
