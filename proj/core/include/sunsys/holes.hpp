#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sunsys/diff.hpp"
#include "sunsys/graph.hpp"
#include "sunsys/lift.hpp"

// k-sun systems of K_4k + n for 2k < n < 10k, n = 0, 1 (mod 4).
// Vertices are Z_k x [0,3], plain infinities inf_1..inf_{n-nu} and primed
// infinities inf'_1..inf'_nu.
namespace sunsys::holes {

// n = 2(q l + r) + nu with 1 <= r <= l and nu in {2, 3}.
struct hole_params {
  int k = 0;
  int n = 0;
  int l = 0;
  int q = 0;
  int r = 0;
  int nu = 0;
};

enum class hole_case {
  k1,            // k = 1 (mod 4)
  k3_even,       // k = 3 (mod 4), q even, r < l
  k3_even_wide,  // the q >= 2r + 6 branch of k3_even
  k3_boundary,   // k = 3 (mod 4), q even, r = l
  k3_odd,        // k = 3 (mod 4), q odd, r < l - 1
  k3_odd_boundary,  // k = 3 (mod 4), q odd, r = l - 1
  searched          // no difference construction applies; cyclic search
};

std::string to_string(hole_case c);

// Throws precondition_error unless k >= 7 is odd, 2k < n < 10k and
// n = 0, 1 (mod 4).
hole_params derive_params(int k, int n);
bool is_exception(int k, int n);
hole_case classify(const hole_params& p);

// Simultaneous vertex replacement inside a sun.  `missing` are the edges of
// s lost by the replacement and `added` the new ones, so that
// E(t) = (E(s) \ missing) u added.
struct substitution_result {
  sun t;
  std::vector<edge> missing;
  std::vector<edge> added;
};
substitution_result apply_substitution(const sun& s, const std::vector<std::pair<vertex, vertex>>& replace);

// Dev(a ~ b ~ c) over Z_k: the rim is Dev({a, b}) and each rim vertex b + g
// carries the pendant c + g.
sun dev_path_sun(int k, const vertex& a, const vertex& b, const vertex& c);
// Dev({p, q} + {u, v}): rim Dev({p, q}); the endpoint of {u, v} on the rim
// level is the attachment point.
sun dev_pair_sun(int k, const vertex& p, const vertex& q, const vertex& u, const vertex& v);

// Named vertices and vertex sequences used to write suns as text patterns.
// Tokens: "x1", "~x1" (overline), "i'2" (primed infinity), "a[7..]" and
// "~a[7..]" (sequence a from its index 7 to its end).
class pattern_scope {
public:
  explicit pattern_scope(lift::overline_map bar) : bar_(bar) {}

  void bind(const std::string& name, const vertex& v) { names_[name] = v; }
  // Sequence whose first stored element has index `first`.
  void bind_seq(const std::string& name, int first, std::vector<vertex> vs) { seqs_[name] = {first, std::move(vs)}; }

  std::vector<vertex> expand(const std::string& pattern) const;
  vertex at(const std::string& token) const;
  sun make_sun(const std::string& rim, const std::string& pendants) const;
  cycle make_cycle(const std::string& rim) const;
  const lift::overline_map& bar() const { return bar_; }

private:
  lift::overline_map bar_;
  std::map<std::string, vertex> names_;
  std::map<std::string, std::pair<int, std::vector<vertex>>> seqs_;
};

// The two parts of a hole construction before composition: cycles of
// Gamma1 + w1 (infinities inf_1..inf_w1) and suns of Gamma2*[2] + w2.
struct hole_parts {
  std::vector<cycle> gamma1;
  int w1 = 0;
  std::vector<sun> orbit_suns;  // developed under Z_k
  std::vector<sun> fixed_suns;
  int w2 = 0;
};

// Throws precondition_error for the searched case.
hole_parts hole_parts_for(int k, int n);

// Z_k-invariant k-sun system of K_4k + n found by a seeded local search over
// base suns that carry up to three infinities on the rim.
sun_system searched_hole(int k, int n, std::uint32_t seed = 1);

// Builds and verifies the k-sun system of K_4k + n.  Throws
// exception_pair_error for the listed exceptions.
sun_system hole(int k, int n);

}  // namespace sunsys::holes
