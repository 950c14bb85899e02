#pragma once

#include <map>
#include <string>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"

// k-cycle systems of subgraphs <D00, D01, D11> + w of K_2k + w, with
// vertices Z_k x {0,1} and infinities inf_1..inf_w.
namespace sunsys::cycles {

// Closed integer interval [lo, hi]; empty when lo > hi.
struct interval {
  int lo = 1;
  int hi = 0;

  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool empty() const { return hi < lo; }
  std::vector<int> values() const;
};

// Host <D00, D01, D11> + w.  Pure sets are taken up to sign.
struct k2_graph {
  int k = 0;
  std::vector<int> d00;
  std::vector<int> d01;
  std::vector<int> d11;
  int w = 0;
};

group_spec zk(int k);
vertex pt(int k, long long x, int level);

host_graph host_of(const k2_graph& g);
cycle_system as_system(const k2_graph& g, std::vector<cycle> cycles);
// Verifies `cycles` against the host; throws verification_error on failure.
void require_cycle_system(const k2_graph& g, const std::vector<cycle>& cycles, const std::string& what);

// Hamilton decomposition of the connected 4-regular Cay(Z_k, {a, b}).
std::vector<std::vector<int>> hamilton_pair(int k, int a, int b);

// Partition of an interval of [1, l] into pairs at distance 1 or 2 and at
// most one singleton coprime with k.
std::vector<std::vector<int>> interval_partition(int k, interval iv);

// k-cycle system of <[a,b], {}, [c,d]>.  Pure cycles on level 0 come first
// in interval order.
std::vector<cycle> cayley_interval_system(int k, interval ab, interval cd);

// k-cycle system of <{l}, S u (S+1), {}> for any S whose pairs {s, s+1} are
// pairwise disjoint mod k.
std::vector<cycle> ell_pair_system(int k, const std::vector<int>& s);
// The odd-S form; with `shifted` the mixed differences become (S+1) u (S+2).
std::vector<cycle> ell_shift_system(int k, const std::vector<int>& s, bool shifted);

// Base cycle of <[1+e, s+e], D, [1+e, s'+e]> + r whose orbit decomposes
// the graph.  `a` and `b` are the two defining vertex sequences; the tagged
// edges {a[s-u-1], a[s-u]} and {a[s+u+1], a[s+u+2]} develop into k-cycles on
// level 0 and level 1 respectively.
struct plus_r_result {
  cycle base;
  std::vector<vertex> a;
  std::vector<vertex> b;
  int s = 0;
  int s2 = 0;
  int u = 0;
  edge level0_tag() const;
  edge level1_tag() const;
};

// D = [g, g + |D| - 1] with |D| = k - (s + s2 + 2r).
plus_r_result plus_r_cycle(int k, int s, int s2, int r, int g, int eps, int u);
k2_graph plus_r_host(int k, int s, int s2, int r, int g, int eps);

// Base cycle C_h of <{}, {0}, {}> + l (h = 0, l odd) or
// <{l}, {}, {}> + l (h = 1, l even).  Positions 0 and 1 carry c1, c2.
cycle plus_ell_base(int k, int h);

// Relabelled systems of Gamma + l with one Gamma edge per cycle.
// For a 1-factor Gamma (l odd): cycles[g] contains factor edge g.
// For a k-cycle Gamma given by its vertex order (l even): cycles[j] starts
// with the Gamma edge {gamma[j], gamma[j+1]}.
std::vector<cycle> plus_ell_one_factor(int k, const std::vector<edge>& factor);
std::vector<cycle> plus_ell_cycle(int k, const cycle& gamma);
// Tagged form for <{}, {d}, {}> + l or <{d}, {}, {}> + l: base cycle with
// Dev({c1, c2}) = Gamma.
cycle plus_ell_difference(int k, int d);

// 2|D|+1 perfect matchings partitioning <D, {0}, D>.
std::vector<std::vector<edge>> one_factorization(int k, const std::vector<int>& d);

// (x, j) -> (x, 1 - j).
vertex flip(const vertex& v);
cycle flip(const cycle& c);
std::vector<cycle> flip(const std::vector<cycle>& cs);
k2_graph flip(const k2_graph& g);

// Maps level-1 points (x, 1) to (x + g, 1).
cycle shift_level1(int k, const cycle& c, int g);

}  // namespace sunsys::cycles
