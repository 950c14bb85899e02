#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "sunsys/cycles.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/holes.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;
using namespace sunsys::holes;
using sunsys::cycles::pt;

namespace {

std::vector<int> valid_ns(int k) {
  std::vector<int> out;
  for (int n = 2 * k + 1; n < 10 * k; ++n)
    if (n % 4 <= 1 && !is_exception(k, n)) out.push_back(n);
  return out;
}

sun line_sun(int k) {
  sun s;
  for (int i = 0; i < k; ++i) {
    s.rim.push_back(pt(k, i, 1));
    s.pendants.push_back(pt(k, i, 3));
  }
  return s;
}

}  // namespace

TEST_SUITE("hole-builders") {
  TEST_CASE("parameter derivation") {
    const auto p = derive_params(9, 21);
    CHECK(p.l == 4);
    CHECK(p.nu == 3);
    CHECK(p.q == 2);
    CHECK(p.r == 1);
    CHECK(classify(p) == hole_case::k1);
    CHECK_THROWS_AS(derive_params(7, 22), precondition_error);
    CHECK_THROWS_AS(derive_params(7, 14), precondition_error);
    CHECK_THROWS_AS(derive_params(7, 72), precondition_error);
    CHECK_THROWS_AS(derive_params(5, 12), precondition_error);
  }

  TEST_CASE("property: n = 2(q l + r) + nu with 1 <= r <= l and q = floor((n-4)/(k-1))") {
    for (int k = 7; k <= 25; k += 2)
      for (int n = 2 * k + 1; n < 10 * k; ++n) {
        if (n % 4 > 1) continue;
        const auto p = derive_params(k, n);
        CHECK(n == 2 * (p.q * p.l + p.r) + p.nu);
        CHECK(p.r >= 1);
        CHECK(p.r <= p.l);
        CHECK(p.q == (n - 4) / (k - 1));
      }
  }

  TEST_CASE("case dispatch follows k mod 4 and the parity of q") {
    CHECK(classify(derive_params(13, 40)) == hole_case::k1);
    CHECK(classify(derive_params(7, 29)) == hole_case::k3_even);
    CHECK(classify(derive_params(11, 84)) == hole_case::k3_even_wide);
    CHECK(classify(derive_params(11, 32)) == hole_case::k3_boundary);
    CHECK(classify(derive_params(11, 36)) == hole_case::k3_odd);
    CHECK(classify(derive_params(7, 24)) == hole_case::k3_odd_boundary);
    CHECK(classify(derive_params(11, 40)) == hole_case::k3_odd_boundary);
    // l = 3 leaves no room for the 1-factorization part once q >= 5
    for (int n : {36, 37, 48, 49, 60, 61}) CHECK(classify(derive_params(7, n)) == hole_case::searched);
  }

  TEST_CASE("exception pairs raise typed errors") {
    for (int n : {20, 21, 32, 33, 44, 45, 56, 57, 64, 65, 68, 69}) {
      CAPTURE(n);
      CHECK(is_exception(7, n));
      CHECK_THROWS_AS(hole(7, n), exception_pair_error);
    }
    for (int n : {100, 101}) CHECK_THROWS_AS(hole(11, n), exception_pair_error);
    // 112 and 113 lie outside 2k < n < 10k for k = 11 but stay excluded
    CHECK(is_exception(11, 112));
    CHECK(is_exception(11, 113));
    CHECK_FALSE(is_exception(9, 21));
  }

  TEST_CASE("reference instance K_36 + 21") {
    const auto sys = hole(9, 21);
    CHECK(sys.blocks.size() == 77);
    CHECK(verify_system(sys, 9).pass);
    const auto parts = hole_parts_for(9, 21);
    // the first cycle of the pure level-0 Cayley part is kept out of Gamma1
    CHECK(parts.w1 == 0);
    CHECK(parts.orbit_suns.size() == 4);
    CHECK(parts.fixed_suns.size() == 2 * 9 + 2 * 3 + 1);
  }

  TEST_CASE("q = 10 spreads w1 = (q - 2) l over the first cycles") {
    const auto p = derive_params(9, 89);
    CHECK(p.q == 10);
    const auto parts = hole_parts_for(9, 89);
    CHECK(parts.w1 == (p.q - 2) * p.l);
    CHECK(verify_system(hole(9, 89), 9).pass);
  }

  TEST_CASE("named instances verify") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{
             {7, 29}, {13, 40}, {7, 36}, {11, 68}, {7, 24}, {11, 48}, {11, 32}, {11, 40}}) {
      CAPTURE(k);
      CAPTURE(n);
      const auto sys = hole(k, n);
      CHECK(verify_system(sys, k).pass);
      const int edges = 4 * k * (4 * k - 1) / 2 + 4 * k * n;
      CHECK(static_cast<int>(sys.blocks.size()) == edges / (2 * k));
    }
  }

  TEST_CASE("edges at the primed infinities come from the T suns and are covered once") {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{9, 21}, {9, 24}, {7, 29}, {11, 32}, {11, 36}, {11, 41}}) {
      CAPTURE(k);
      CAPTURE(n);
      const auto parts = hole_parts_for(k, n);
      const auto z = cycles::zk(k);
      std::map<edge, int> seen;
      auto count = [&](const sun& s) {
        for (const auto& e : sun_edges(s))
          if (e.a.kind == vertex_kind::inf_primed || e.b.kind == vertex_kind::inf_primed) ++seen[e];
      };
      for (const auto& t : parts.orbit_suns)
        for (int g = 0; g < k; ++g) count(translate(z, t, z.reduce({g})));
      for (const auto& s : parts.fixed_suns) count(s);
      const int nu = n % 2 == 0 ? 2 : 3;
      CHECK(seen.size() == static_cast<std::size_t>(nu * 4 * k));
      CHECK(std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second == 1; }));
    }
  }

  TEST_CASE("substitution: replacing a pendant by a primed infinity") {
    const int k = 7;
    const sun s = line_sun(k);
    const vertex y2 = s.pendants[0];
    const auto res = apply_substitution(s, {{y2, vertex::inf_primed(1)}});
    CHECK(res.missing == std::vector<edge>{edge(s.rim[0], y2)});
    CHECK(res.added == std::vector<edge>{edge(s.rim[0], vertex::inf_primed(1))});
    // E(T) = (E(S) \ M) u N
    auto expect = sun_edges(s);
    expect.erase(std::find(expect.begin(), expect.end(), res.missing[0]));
    expect.push_back(res.added[0]);
    auto got = sun_edges(res.t);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }

  TEST_CASE("substitution: empty list is the identity, collisions are rejected") {
    const sun s = line_sun(7);
    const auto id = apply_substitution(s, {});
    CHECK(id.t == s);
    CHECK(id.missing.empty());
    CHECK(id.added.empty());
    CHECK_THROWS_AS(apply_substitution(s, {{s.pendants[0], s.rim[3]}}), invalid_block_error);
    CHECK_THROWS_AS(apply_substitution(s, {{pt(7, 0, 0), vertex::inf_primed(1)}}), invalid_block_error);
  }

  TEST_CASE("Dev patch suns are genuine suns") {
    const sun a = dev_path_sun(7, pt(7, 0, 0), pt(7, 2, 0), pt(7, 5, 1));
    validate(a);
    CHECK(a.rim[1] == pt(7, 4, 0));
    CHECK(a.pendants[0] == pt(7, 5, 1));
    const sun b = dev_pair_sun(7, pt(7, 0, 2), pt(7, 1, 2), pt(7, 3, 0), pt(7, 6, 2));
    CHECK(b.rim[0] == pt(7, 6, 2));
    CHECK(b.pendants[0] == pt(7, 3, 0));
    CHECK_THROWS_AS(dev_pair_sun(7, pt(7, 0, 2), pt(7, 1, 2), pt(7, 3, 2), pt(7, 6, 2)), invalid_block_error);
    CHECK_THROWS_AS(dev_path_sun(7, pt(7, 0, 0), pt(7, 0, 1), pt(7, 5, 1)), invalid_block_error);
  }

  TEST_CASE("searched systems are deterministic") {
    const auto a = searched_hole(7, 36);
    const auto b = searched_hole(7, 36);
    CHECK(a.blocks == b.blocks);
    CHECK(a.blocks.size() == 99);
  }

  TEST_CASE("sweep: every admissible n for k in {7, 9, 11, 13}") {
    for (int k : {7, 9, 11, 13})
      for (int n : valid_ns(k)) {
        CAPTURE(k);
        CAPTURE(n);
        const auto sys = hole(k, n);
        CHECK(verify_system(sys, k).pass);
      }
  }
}
