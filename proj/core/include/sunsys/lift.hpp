#pragma once

#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"

// Doubling of graphs over Z_M x {0,1} u {inf_1..inf_u} into Z_M x [0,3] u
// {inf_1..inf_2u}, and the splitting of doubled cycles into suns.
namespace sunsys::lift {

// x -> x-bar: (a, j) <-> (a, j + 2) and inf_h <-> inf_{h+u}.  Primed
// infinities are fixed.
struct overline_map {
  int u = 0;

  vertex operator()(const vertex& v) const;
  edge operator()(const edge& e) const;
  cycle operator()(const cycle& c) const;
  sun operator()(const sun& s) const;
  std::vector<sun> operator()(const std::vector<sun>& ss) const;
};

// Gamma[2]: each edge {x, y} becomes {x,y}, {x,y-bar}, {x-bar,y}, {x-bar,y-bar}.
std::vector<edge> blowup_edges(const std::vector<edge>& edges, const overline_map& bar);

// The 1-factor {z, z-bar} for z in Z_M x {0,1}, with points taken from `group`.
std::vector<edge> one_factor(const group_spec& group, const overline_map& bar);

// Sun with rim s_i in {c_i, c_i-bar} (choices[i] picks the overline) and
// pendants s-bar_{i+1}.  An empty choice vector means all c_i.
sun sun_from_cycle(const cycle& c, const std::vector<bool>& choices, const overline_map& bar);
sun sigma(const cycle& c, const overline_map& bar);

// {S_i, S_i-bar} for the cycles of a system of Gamma + u, using sigma.
std::vector<sun> lift_cycles(const std::vector<cycle>& cycles, const overline_map& bar);

// Lifts a cycle system of Gamma + u to a sun system of Gamma[2] + 2u whose
// host is the blowup of the input host.
sun_system lift_cycle_system(const cycle_system& cs, int k);

// Vertex legend of K_{4k} + n built from Z_k x [0,3], the plain infinities
// inf_1..inf_plain and the primed infinities inf'_1..inf'_primed.
std::vector<vertex> hole_legend(int k, int plain, int primed);

// Given a cycle system of Gamma1 + w1 (infinities inf_1..inf_w1) and the suns
// of Gamma2*[2] + w2 (plain infinities inf_1.., primed infinities kept), where
// Gamma1 and Gamma2 partition K_2k, returns the sun system of
// K_{4k} + (2 w1 + w2).  Plain infinities of the second part are renumbered
// after the 2 w1 lifted ones.
sun_system compose_4k(int k, const std::vector<cycle>& gamma1_cycles, int w1, const std::vector<sun>& gamma2_suns,
                      int w2);

}  // namespace sunsys::lift
