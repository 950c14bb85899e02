#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"

// Direct p-sun systems of K_v for an odd prime p and 2p < v < 6p, together
// with the k-sun systems of K_4k and K_4k+1 for every odd k >= 7.
namespace sunsys::prime {

// Base sun over Z_{4k+1} (plus_one) or over Z_{4k-1} u {inf_1}, as integer
// labels before reduction.  The infinity of the K_4k variant is returned as
// the pendant of the largest rim vertex.
struct zigzag_sun {
  std::vector<long long> rim;
  std::vector<long long> pendants;
  int inf_position = -1;  // rim index whose pendant is inf_1, or -1
};
zigzag_sun zigzag_base(int k, bool plus_one);
sun zigzag_base_sun(int k, bool plus_one);

// k-sun system of K_{4k+1} (plus_one) or K_4k for odd k >= 7.
sun_system zigzag_system(int k, bool plus_one);

// Dev over Z_p x {0} of (0,i) ~ (x,i) ~ (y+x,j) with vertices (a, level).
// Throws precondition_error for x = 0 (mod p) or i = j.
sun type_ij_sun(int p, int i, int j, int x, int y);

// A sun of type (i, j) by its parameters.
struct type_sun {
  int i = 0;
  int j = 0;
  int x = 0;
  int y = 0;
  friend bool operator==(const type_sun&, const type_sun&) = default;
};

// Covers the differences of Z_p x [0, m-1] left over by `base` with suns of
// type (i, j).  With `developed` each base sun stands for its Z_p orbit,
// otherwise the suns are taken as they are.  Each type sun takes one pure pair +-x
// at level i and one mixed class y from level i to level j.  Missing pure
// pairs and mixed classes are swept in canonical order and paired by a
// bipartite matching.  Throws verification_error when a difference class is
// covered partially or twice, or no pairing exists.
std::vector<type_sun> complete_with_type_suns(int p, int m, const std::vector<sun>& base, bool developed);

// p-sun system of K_{3p+1} over (Z_p x Z_3) u {inf_1}; p = 1 (mod 4), p >= 13.
sun_system system_3p1(int p);
// Base sun of the construction above (levels are the Z_3 coordinate).
sun base_sun_3p1(int p);

// p-sun system of K_{5p+1} over (Z_p x Z_5) u {inf_1}; p = 3 (mod 4).
sun_system system_5p1(int p);
sun base_sun_5p1(int p);
// The quadruple suns Dev((0,0) ~ (2x,0) ~ (r_x + 2x, s_x)) as (x, (r_x, s_x)).
std::vector<std::pair<int, std::pair<int, int>>> pairing_5p1(int p);

// p-sun system of K_{mp} over Z_p x Z_m; m <= p primes, m = p (mod 4).
sun_system system_mp(int m, int p);
// tau_(0,h) of the labelling B_{r,s}.
sun sun_mp(int m, int p, int r, int s, int h);

// v admits a p-sun system (p odd prime): v(v-1) = 0 (mod 4p) and v >= 2p.
bool admissible(int p, long long v);

// Dispatches to the construction covering v in (2p, 6p).  Throws
// unsupported_error when v is not one of 4p, 4p+1, 3p+1, 5p+1, 3p, 5p with
// the matching congruence.
sun_system direct(int p, int v);

}  // namespace sunsys::prime
