#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"

// Composition of k-sun systems: the multipartite filler, the recursion
// K_{4kg+n} = K_n (+) g (K_4k + n) (+) K_{g x 4k}, the sporadic systems and
// the solve(k, v) dispatch.
namespace sunsys::assembly {

// v >= 2k and v(v-1) = 0 (mod 4k).
bool admissible(int k, long long v);

// Cyclic decomposition of the level graph K_{g x 2} (levels 2x, 2x+1 form
// part x) into odd cycles, each given by its level sequence.
std::vector<std::vector<int>> level_cycles(int k, int g, std::uint32_t seed = 1);

// k-cycle system of K_{g x 2k} over Z_{gk} x {0,1}; part x holds the
// elements [xk, xk + k) on both levels.  Host multipartite(g, 2k).
cycle_system multipartite_cycle_system(int k, int g);
// Lift of the above: k-sun system of K_{g x 4k}, host blowup(multipartite).
sun_system multipartite_sun_system(int k, int g);

// Systems developed from fixed base blocks.  Names: "K84", "K85", "K92", "K144", "K105" and
// "Kq:p" for the p-sun system of K_{p^2}.
std::vector<std::string> sporadic_names();
sun_system sporadic(const std::string& name);
// Block size of a sporadic system.
int sporadic_k(const std::string& name);

// One step of a solve plan.  Leaves fill the host they name; a join fills
// K_{n + 4kg} from its children: the K_n plan, a hole node standing for g
// copies of K_4k + n and, for g >= 3, the multipartite filler K_{g x 4k}.
struct plan_node {
  enum class step { direct, sporadic, oracle, hole, multipartite, join };
  step kind = step::direct;
  int k = 0;
  long long v = 0;   // order of the complete graph (direct, sporadic, oracle, join)
  std::string name;  // construction or sporadic name
  int g = 0;         // join, hole (copies), multipartite (parts)
  long long n = 0;   // join, hole
  std::vector<plan_node> inner;
};

// Largest order the exact-cover oracle is asked to fill for k in {3, 5}.
inline constexpr long long oracle_max_v = 100;

// Throws inadmissible_error or unsupported_error.
plan_node plan(int k, long long v);
std::string describe(const plan_node& p);
// Edges of the host a node fills.
long long plan_edges(const plan_node& p);
// Every join's children fill exactly its edges, recursively.
bool plan_partitions_edges(const plan_node& p);

// K_v relabelled onto the points 0..v-1 of Z_v.
std::vector<vertex> integer_legend(long long v);

// Verified k-sun system of K_v on the points 0..v-1.
sun_system solve(int k, long long v);

}  // namespace sunsys::assembly
