#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunsys/group.hpp"

namespace sunsys {

enum class vertex_kind : std::uint8_t { point = 0, inf = 1, inf_primed = 2 };

// A point (x, level) of G x [0, m-1], or one of the two tiers of infinity
// points.  Ordering: points before plain infinities before primed ones;
// points by (level, element), infinities by index.
struct vertex {
  vertex_kind kind = vertex_kind::point;
  std::int16_t level = 0;
  group_element elem{};
  std::int32_t index = 0;

  static vertex point(const group_element& x, int level = 0) {
    vertex v;
    v.kind = vertex_kind::point;
    v.level = static_cast<std::int16_t>(level);
    v.elem = x;
    return v;
  }
  static vertex inf(int h) {
    vertex v;
    v.kind = vertex_kind::inf;
    v.index = h;
    return v;
  }
  static vertex inf_primed(int u) {
    vertex v;
    v.kind = vertex_kind::inf_primed;
    v.index = u;
    return v;
  }

  bool is_point() const { return kind == vertex_kind::point; }
  bool is_infinity() const { return kind != vertex_kind::point; }

  friend auto operator<=>(const vertex&, const vertex&) = default;
  friend bool operator==(const vertex&, const vertex&) = default;
};

std::string to_string(const vertex& v);

struct vertex_hash {
  std::size_t operator()(const vertex& v) const noexcept;
};

// Unordered pair of distinct vertices, stored with a < b.
struct edge {
  vertex a;
  vertex b;

  edge() = default;
  edge(const vertex& x, const vertex& y);

  friend auto operator<=>(const edge&, const edge&) = default;
  friend bool operator==(const edge&, const edge&) = default;
};

std::string to_string(const edge& e);

struct edge_hash {
  std::size_t operator()(const edge& e) const noexcept;
};

// A k-cycle given by its rim order.
struct cycle {
  std::vector<vertex> rim;

  std::size_t size() const { return rim.size(); }
  friend bool operator==(const cycle&, const cycle&) = default;
};

// A k-sun: rim x_1..x_k with pendant x'_i attached to x_i.
struct sun {
  std::vector<vertex> rim;
  std::vector<vertex> pendants;

  std::size_t size() const { return rim.size(); }
  friend bool operator==(const sun&, const sun&) = default;
};

// Throws invalid_block_error unless the block has the right shape.
void validate(const cycle& c);
void validate(const sun& s);

std::vector<edge> cycle_edges(const cycle& c);
std::vector<edge> sun_edges(const sun& s);
inline std::vector<edge> block_edges(const cycle& c) { return cycle_edges(c); }
inline std::vector<edge> block_edges(const sun& s) { return sun_edges(s); }

std::vector<vertex> block_vertices(const cycle& c);
std::vector<vertex> block_vertices(const sun& s);

// Rotation/reflection canonical forms: least rim vertex first, then the
// lexicographically smaller direction.
cycle canonical(const cycle& c);
sun canonical(const sun& s);

bool same_block(const cycle& a, const cycle& b);
bool same_block(const sun& a, const sun& b);

std::string to_string(const cycle& c);
std::string to_string(const sun& s);

// Recognises a k-sun from its edge set: the degree >= 2 vertices must form a
// single cycle and every one of them carries exactly one pendant edge.
sun sun_from_edge_set(const std::vector<edge>& edges);
// Recognises a single cycle from its edge set.
cycle cycle_from_edge_set(const std::vector<edge>& edges);

// The map (i <= j) -> D_ij describing <D_ij | 0 <= i <= j <= m-1> over G.
// Pure sets are stored closed under negation.
class diff_spec {
public:
  diff_spec() = default;
  diff_spec(group_spec g, int m);

  const group_spec& group() const { return group_; }
  int levels() const { return m_; }

  // Adds d to D_ij.  For i > j the element -d is recorded in D_ji; for i == j
  // both d and -d are recorded.
  void add(int i, int j, const group_element& d);
  void add(int i, int j, const std::vector<group_element>& ds);
  const std::vector<group_element>& at(int i, int j) const;
  const std::map<std::pair<int, int>, std::vector<group_element>>& entries() const { return d_; }

  friend bool operator==(const diff_spec&, const diff_spec&) = default;

private:
  group_spec group_;
  int m_ = 1;
  std::map<std::pair<int, int>, std::vector<group_element>> d_;
};

using index_edge = std::pair<std::uint32_t, std::uint32_t>;

// Host graphs.  Vertices are numbered canonically:
//   complete(v)          0..v-1
//   plus(inner, w)       inner vertices, then the w added vertices
//   multipartite(g, h)   part x occupies [x*h, (x+1)*h)
//   diff(D)              (x, i) -> i*|G| + index(x)
//   blowup(inner)        inner vertices, then their overline copies
class host_graph {
public:
  enum class kind { complete, plus, multipartite, diff, blowup };

  static host_graph complete(int v);
  static host_graph plus(const host_graph& inner, int w);
  static host_graph complete_plus(int a, int w) { return plus(complete(a), w); }
  static host_graph multipartite(int g, int h);
  static host_graph diff(const diff_spec& d);
  static host_graph blowup(const host_graph& inner, bool with_one_factor);

  kind type() const { return kind_; }
  int param() const { return a_; }
  int param2() const { return b_; }
  bool with_one_factor() const { return one_factor_; }
  const host_graph& inner() const { return *inner_; }
  const diff_spec& spec() const { return *diff_; }

  std::size_t vertex_count() const;
  // Closed-form edge count.
  long long edge_count() const;
  // Every edge exactly once, endpoints sorted, list sorted.
  std::vector<index_edge> edges() const;
  // Vertex labels matching the canonical numbering, when the host carries
  // them (difference graphs and hosts derived from them).
  std::optional<std::vector<vertex>> natural_labels() const;

  std::string describe() const;

private:
  kind kind_ = kind::complete;
  int a_ = 0;
  int b_ = 0;
  bool one_factor_ = false;
  std::shared_ptr<const host_graph> inner_;
  std::shared_ptr<const diff_spec> diff_;

  void append_edges(std::vector<index_edge>& out, std::uint32_t offset) const;
  std::optional<std::vector<vertex>> labels_impl(int& plain_infinities) const;
};

// Edge list of <D_ij> over explicit vertex labels.
std::vector<edge> diff_graph_edges(const diff_spec& d);

}  // namespace sunsys
