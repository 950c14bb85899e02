#include "sunsys/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sunsys/errors.hpp"

namespace sunsys {

std::string to_string(const vertex& v) {
  switch (v.kind) {
    case vertex_kind::inf:
      return "inf" + std::to_string(v.index);
    case vertex_kind::inf_primed:
      return "inf'" + std::to_string(v.index);
    case vertex_kind::point:
      break;
  }
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.elem.n; ++i) os << v.elem.c[i] << ',';
  os << v.level << ')';
  return os.str();
}

std::size_t vertex_hash::operator()(const vertex& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.kind) * 1000003u + static_cast<std::size_t>(v.level);
  h = h * 1000033u + static_cast<std::size_t>(v.index);
  for (std::size_t i = 0; i < v.elem.n; ++i) h = h * 1000037u + static_cast<std::size_t>(v.elem.c[i]);
  return h ^ (h >> 29);
}

edge::edge(const vertex& x, const vertex& y) {
  if (x == y) throw invalid_block_error("loop at " + to_string(x));
  if (x < y) {
    a = x;
    b = y;
  } else {
    a = y;
    b = x;
  }
}

std::string to_string(const edge& e) { return "{" + to_string(e.a) + "," + to_string(e.b) + "}"; }

std::size_t edge_hash::operator()(const edge& e) const noexcept {
  vertex_hash h;
  return h(e.a) * 0x9e3779b97f4a7c15ULL + h(e.b);
}

namespace {

void require_distinct(const std::vector<vertex>& vs, const char* what) {
  std::vector<vertex> s = vs;
  std::sort(s.begin(), s.end());
  auto it = std::adjacent_find(s.begin(), s.end());
  if (it != s.end()) throw invalid_block_error(std::string(what) + " repeats vertex " + to_string(*it));
}

}  // namespace

void validate(const cycle& c) {
  if (c.rim.size() < 3) throw invalid_block_error("cycle shorter than 3");
  require_distinct(c.rim, "cycle");
}

void validate(const sun& s) {
  if (s.rim.size() < 3) throw invalid_block_error("sun rim shorter than 3");
  if (s.rim.size() != s.pendants.size()) throw invalid_block_error("sun rim and pendant lists differ in length");
  std::vector<vertex> all = s.rim;
  all.insert(all.end(), s.pendants.begin(), s.pendants.end());
  require_distinct(all, "sun");
}

std::vector<edge> cycle_edges(const cycle& c) {
  validate(c);
  std::vector<edge> out;
  out.reserve(c.rim.size());
  for (std::size_t i = 0; i < c.rim.size(); ++i) out.emplace_back(c.rim[i], c.rim[(i + 1) % c.rim.size()]);
  return out;
}

std::vector<edge> sun_edges(const sun& s) {
  validate(s);
  std::vector<edge> out;
  const std::size_t k = s.rim.size();
  out.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(s.rim[i], s.rim[(i + 1) % k]);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(s.rim[i], s.pendants[i]);
  return out;
}

std::vector<vertex> block_vertices(const cycle& c) { return c.rim; }

std::vector<vertex> block_vertices(const sun& s) {
  std::vector<vertex> all = s.rim;
  all.insert(all.end(), s.pendants.begin(), s.pendants.end());
  return all;
}

namespace {

// Index order of the canonical traversal: start at the least rim vertex and
// walk in the direction whose rim sequence is lexicographically smaller.
std::vector<std::size_t> canonical_order(const std::vector<vertex>& rim) {
  const std::size_t k = rim.size();
  std::size_t start = static_cast<std::size_t>(std::min_element(rim.begin(), rim.end()) - rim.begin());
  std::vector<std::size_t> fwd(k), bwd(k);
  for (std::size_t i = 0; i < k; ++i) {
    fwd[i] = (start + i) % k;
    bwd[i] = (start + k - i) % k;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (rim[fwd[i]] < rim[bwd[i]]) return fwd;
    if (rim[bwd[i]] < rim[fwd[i]]) return bwd;
  }
  return fwd;
}

}  // namespace

cycle canonical(const cycle& c) {
  if (c.rim.empty()) return c;
  cycle out;
  for (std::size_t i : canonical_order(c.rim)) out.rim.push_back(c.rim[i]);
  return out;
}

sun canonical(const sun& s) {
  if (s.rim.empty()) return s;
  sun out;
  for (std::size_t i : canonical_order(s.rim)) {
    out.rim.push_back(s.rim[i]);
    out.pendants.push_back(s.pendants[i]);
  }
  return out;
}

bool same_block(const cycle& a, const cycle& b) { return canonical(a) == canonical(b); }
bool same_block(const sun& a, const sun& b) { return canonical(a) == canonical(b); }

std::string to_string(const cycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.rim.size(); ++i) out += (i ? " " : "") + to_string(c.rim[i]);
  return out + ")";
}

std::string to_string(const sun& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.rim.size(); ++i) out += (i ? " " : "") + to_string(s.rim[i]);
  out += " | ";
  for (std::size_t i = 0; i < s.pendants.size(); ++i) out += (i ? " " : "") + to_string(s.pendants[i]);
  return out + "]";
}

namespace {

using adjacency = std::map<vertex, std::vector<vertex>>;

adjacency build_adjacency(const std::vector<edge>& edges) {
  std::set<edge> seen;
  adjacency adj;
  for (const auto& e : edges) {
    if (!seen.insert(e).second) throw invalid_block_error("repeated edge " + to_string(e));
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

// Walks the cycle through the vertices of `on_cycle` starting at `start`.
std::vector<vertex> walk_cycle(const adjacency& adj, const std::set<vertex>& on_cycle, const vertex& start) {
  std::vector<vertex> order{start};
  vertex prev = start;
  vertex cur = start;
  for (;;) {
    const vertex* next = nullptr;
    for (const auto& w : adj.at(cur))
      if (on_cycle.count(w) && w != prev) {
        next = &w;
        break;
      }
    if (!next) throw invalid_block_error("rim is not a cycle");
    if (*next == start) break;
    if (order.size() > on_cycle.size()) throw invalid_block_error("rim is not a single cycle");
    prev = cur;
    cur = *next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace

sun sun_from_edge_set(const std::vector<edge>& edges) {
  adjacency adj = build_adjacency(edges);
  std::set<vertex> rim_set;
  for (const auto& [v, nb] : adj) {
    if (nb.size() == 3) {
      rim_set.insert(v);
    } else if (nb.size() != 1) {
      throw invalid_block_error("vertex " + to_string(v) + " has degree " + std::to_string(nb.size()) +
                                " in a would-be sun");
    }
  }
  if (rim_set.size() < 3 || 2 * rim_set.size() != adj.size() || edges.size() != 2 * rim_set.size())
    throw invalid_block_error("edge set does not have sun shape");
  sun s;
  s.rim = walk_cycle(adj, rim_set, *rim_set.begin());
  if (s.rim.size() != rim_set.size()) throw invalid_block_error("rim is not a single cycle");
  for (const auto& v : s.rim) {
    const vertex* pend = nullptr;
    for (const auto& w : adj.at(v))
      if (!rim_set.count(w)) {
        if (pend) throw invalid_block_error("rim vertex with two pendants");
        pend = &w;
      }
    if (!pend) throw invalid_block_error("rim vertex without pendant");
    s.pendants.push_back(*pend);
  }
  validate(s);
  return s;
}

cycle cycle_from_edge_set(const std::vector<edge>& edges) {
  adjacency adj = build_adjacency(edges);
  std::set<vertex> all;
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) throw invalid_block_error("edge set is not 2-regular");
    all.insert(v);
  }
  if (all.size() < 3) throw invalid_block_error("cycle shorter than 3");
  cycle c;
  c.rim = walk_cycle(adj, all, *all.begin());
  if (c.rim.size() != all.size()) throw invalid_block_error("edge set is not a single cycle");
  return c;
}

diff_spec::diff_spec(group_spec g, int m) : group_(std::move(g)), m_(m) {
  if (m < 1) throw precondition_error("level count must be positive");
}

void diff_spec::add(int i, int j, const group_element& d) {
  if (i < 0 || j < 0 || i >= m_ || j >= m_) throw precondition_error("level out of range");
  if (!group_.contains(d)) throw spec_mismatch_error("difference outside group");
  auto insert = [&](int a, int b, const group_element& x) {
    auto& v = d_[{a, b}];
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  };
  if (i == j) {
    if (d == group_.zero()) throw precondition_error("pure difference set contains 0");
    insert(i, i, d);
    insert(i, i, neg(group_, d));
  } else if (i < j) {
    insert(i, j, d);
  } else {
    insert(j, i, neg(group_, d));
  }
}

void diff_spec::add(int i, int j, const std::vector<group_element>& ds) {
  for (const auto& d : ds) add(i, j, d);
}

const std::vector<group_element>& diff_spec::at(int i, int j) const {
  static const std::vector<group_element> empty;
  auto it = d_.find({i, j});
  return it == d_.end() ? empty : it->second;
}

std::vector<edge> diff_graph_edges(const diff_spec& d) {
  std::set<edge> out;
  const auto elems = d.group().elements();
  for (const auto& [key, ds] : d.entries())
    for (const auto& x : elems)
      for (const auto& delta : ds)
        out.insert(edge(vertex::point(x, key.first), vertex::point(add(d.group(), x, delta), key.second)));
  return {out.begin(), out.end()};
}

host_graph host_graph::complete(int v) {
  if (v < 1) throw precondition_error("complete graph needs at least one vertex");
  host_graph h;
  h.kind_ = kind::complete;
  h.a_ = v;
  return h;
}

host_graph host_graph::plus(const host_graph& inner, int w) {
  if (w < 0) throw precondition_error("negative number of added vertices");
  host_graph h;
  h.kind_ = kind::plus;
  h.a_ = w;
  h.inner_ = std::make_shared<const host_graph>(inner);
  return h;
}

host_graph host_graph::multipartite(int g, int hsize) {
  if (g < 1 || hsize < 1) throw precondition_error("multipartite graph needs positive parameters");
  host_graph h;
  h.kind_ = kind::multipartite;
  h.a_ = g;
  h.b_ = hsize;
  return h;
}

host_graph host_graph::diff(const diff_spec& d) {
  host_graph h;
  h.kind_ = kind::diff;
  h.diff_ = std::make_shared<const diff_spec>(d);
  return h;
}

host_graph host_graph::blowup(const host_graph& inner, bool with_one_factor) {
  host_graph h;
  h.kind_ = kind::blowup;
  h.one_factor_ = with_one_factor;
  h.inner_ = std::make_shared<const host_graph>(inner);
  return h;
}

std::size_t host_graph::vertex_count() const {
  switch (kind_) {
    case kind::complete:
      return static_cast<std::size_t>(a_);
    case kind::plus:
      return inner_->vertex_count() + static_cast<std::size_t>(a_);
    case kind::multipartite:
      return static_cast<std::size_t>(a_) * static_cast<std::size_t>(b_);
    case kind::diff:
      return static_cast<std::size_t>(diff_->group().order()) * static_cast<std::size_t>(diff_->levels());
    case kind::blowup:
      return 2 * inner_->vertex_count();
  }
  return 0;
}

long long host_graph::edge_count() const {
  switch (kind_) {
    case kind::complete:
      return 1LL * a_ * (a_ - 1) / 2;
    case kind::plus:
      return inner_->edge_count() + 1LL * a_ * static_cast<long long>(inner_->vertex_count());
    case kind::multipartite:
      return 1LL * a_ * (a_ - 1) / 2 * b_ * b_;
    case kind::diff: {
      long long total = 0;
      const long long n = diff_->group().order();
      for (const auto& [key, ds] : diff_->entries()) {
        if (key.first != key.second) {
          total += n * static_cast<long long>(ds.size());
        } else {
          // each unordered pair {d, -d} gives n edges; an involution gives n/2
          total += n * static_cast<long long>(ds.size()) / 2;
        }
      }
      return total;
    }
    case kind::blowup:
      return 4 * inner_->edge_count() + (one_factor_ ? static_cast<long long>(inner_->vertex_count()) : 0);
  }
  return 0;
}

void host_graph::append_edges(std::vector<index_edge>& out, std::uint32_t offset) const {
  auto push = [&](std::uint32_t x, std::uint32_t y) {
    x += offset;
    y += offset;
    out.emplace_back(std::min(x, y), std::max(x, y));
  };
  switch (kind_) {
    case kind::complete:
      for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(a_); ++i)
        for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(a_); ++j) push(i, j);
      return;
    case kind::plus: {
      inner_->append_edges(out, offset);
      const auto n = static_cast<std::uint32_t>(inner_->vertex_count());
      for (std::uint32_t w = 0; w < static_cast<std::uint32_t>(a_); ++w)
        for (std::uint32_t i = 0; i < n; ++i) push(i, n + w);
      return;
    }
    case kind::multipartite:
      for (std::uint32_t i = 0; i < vertex_count(); ++i)
        for (std::uint32_t j = i + 1; j < vertex_count(); ++j)
          if (i / b_ != j / b_) push(i, j);
      return;
    case kind::diff: {
      const auto& g = diff_->group();
      const long long n = g.order();
      const auto elems = g.elements();
      std::vector<index_edge> local;
      for (const auto& [key, ds] : diff_->entries())
        for (const auto& x : elems)
          for (const auto& d : ds) {
            auto i = static_cast<std::uint32_t>(key.first * n + g.index_of(x));
            auto j = static_cast<std::uint32_t>(key.second * n + g.index_of(add(g, x, d)));
            local.emplace_back(std::min(i, j) + offset, std::max(i, j) + offset);
          }
      std::sort(local.begin(), local.end());
      local.erase(std::unique(local.begin(), local.end()), local.end());
      out.insert(out.end(), local.begin(), local.end());
      return;
    }
    case kind::blowup: {
      const auto n = static_cast<std::uint32_t>(inner_->vertex_count());
      std::vector<index_edge> base;
      inner_->append_edges(base, 0);
      for (const auto& [x, y] : base) {
        push(x, y);
        push(x, y + n);
        push(x + n, y);
        push(x + n, y + n);
      }
      if (one_factor_)
        for (std::uint32_t i = 0; i < n; ++i) push(i, i + n);
      return;
    }
  }
}

std::vector<index_edge> host_graph::edges() const {
  std::vector<index_edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  append_edges(out, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<vertex>> host_graph::labels_impl(int& plain_infinities) const {
  switch (kind_) {
    case kind::complete:
    case kind::multipartite:
      return std::nullopt;
    case kind::diff: {
      std::vector<vertex> out;
      for (int i = 0; i < diff_->levels(); ++i)
        for (const auto& x : diff_->group().elements()) out.push_back(vertex::point(x, i));
      return out;
    }
    case kind::plus: {
      auto base = inner_->labels_impl(plain_infinities);
      if (!base) return std::nullopt;
      for (int w = 0; w < a_; ++w) base->push_back(vertex::inf(++plain_infinities));
      return base;
    }
    case kind::blowup: {
      int inner_inf = 0;
      auto base = inner_->labels_impl(inner_inf);
      if (!base) return std::nullopt;
      int levels = 0;
      for (const auto& v : *base)
        if (v.is_point()) levels = std::max(levels, v.level + 1);
      std::vector<vertex> out = *base;
      for (const auto& v : *base) {
        vertex w = v;
        if (v.is_point()) {
          w.level = static_cast<std::int16_t>(v.level + levels);
        } else if (v.kind == vertex_kind::inf) {
          w.index = v.index + inner_inf;
        }
        out.push_back(w);
      }
      plain_infinities = 2 * inner_inf;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<vertex>> host_graph::natural_labels() const {
  int infinities = 0;
  return labels_impl(infinities);
}

std::string host_graph::describe() const {
  switch (kind_) {
    case kind::complete:
      return "K_" + std::to_string(a_);
    case kind::plus:
      return "(" + inner_->describe() + ")+" + std::to_string(a_);
    case kind::multipartite:
      return "K_{" + std::to_string(a_) + "x" + std::to_string(b_) + "}";
    case kind::diff:
      return "<D> over " + to_string(diff_->group()) + "x[0," + std::to_string(diff_->levels() - 1) + "]";
    case kind::blowup:
      return "(" + inner_->describe() + ")[2]" + (one_factor_ ? "+I" : "");
  }
  return "?";
}

}  // namespace sunsys
