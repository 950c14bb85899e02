#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "sunsys/cycles.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;
using namespace sunsys::cycles;

namespace {

std::vector<cycle> orbit(int k, const cycle& base) {
  const auto g = zk(k);
  std::vector<cycle> out;
  for (int x = 0; x < k; ++x) out.push_back(translate(g, base, g.reduce({x})));
  return out;
}

bool passes(const k2_graph& g, const std::vector<cycle>& cs) {
  return verify_system(as_system(g, cs), g.k).pass;
}

std::vector<int> range(int lo, int hi) { return interval{lo, hi}.values(); }

}  // namespace

TEST_SUITE("cycle-builders") {
  TEST_CASE("interval partition") {
    CHECK(interval_partition(9, {2, 3}) == std::vector<std::vector<int>>{{2, 3}});
    CHECK(interval_partition(9, {4, 4}) == std::vector<std::vector<int>>{{4}});
    CHECK(interval_partition(9, {1, 3}) == std::vector<std::vector<int>>{{1}, {2, 3}});
    // 3 is not coprime with 9: singleton 4, pair (2, 3) would leave 3 unpaired
    CHECK(interval_partition(9, {3, 4}) == std::vector<std::vector<int>>{{3, 4}});
    CHECK(interval_partition(15, {3, 5}) == std::vector<std::vector<int>>{{4}, {3, 5}});
    CHECK_THROWS_AS(interval_partition(9, {3, 3}), precondition_error);
  }

  TEST_CASE("Cayley interval systems of K_9 pieces") {
    CHECK(cayley_interval_system(9, {2, 3}, {}).size() == 2);
    CHECK(cayley_interval_system(9, {4, 4}, {}).size() == 1);
    const k2_graph g{9, range(1, 4), {}, range(2, 3), 0};
    const auto cs = cayley_interval_system(9, {1, 4}, {2, 3});
    CHECK(cs.size() == 6);
    CHECK(passes(g, cs));
  }

  TEST_CASE("property: every solvable interval decomposes") {
    for (int k = 5; k <= 25; k += 2) {
      const int l = (k - 1) / 2;
      for (int lo = 1; lo <= l; ++lo)
        for (int hi = lo; hi <= l; ++hi) {
          const interval iv{lo, hi};
          bool solvable = iv.size() % 2 == 0;
          for (int x = lo; x <= hi; ++x) solvable = solvable || std::gcd(x, k) == 1;
          if (!solvable) continue;
          CAPTURE(k);
          CAPTURE(lo);
          CAPTURE(hi);
          CHECK(passes(k2_graph{k, iv.values(), {}, {}, 0}, cayley_interval_system(k, iv, {})));
        }
    }
  }

  TEST_CASE("l-pair systems") {
    // k = 9, S = {1, 5}: <{4}, {1, 2, 5, 6}, {}> in 5 cycles
    const auto cs = ell_pair_system(9, {1, 5});
    CHECK(cs.size() == 5);
    CHECK(passes(k2_graph{9, {4}, {1, 2, 5, 6}, {}, 0}, cs));
    CHECK(passes(k2_graph{9, {4}, {}, {}, 0}, ell_pair_system(9, {})));
    CHECK_THROWS_AS(ell_pair_system(9, {1, 2}), precondition_error);
  }

  TEST_CASE("property: l-pair systems for random disjoint S") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const int k = 5 + 2 * static_cast<int>(rng() % 10);
      const int l = (k - 1) / 2;
      std::set<int> used;
      std::vector<int> s;
      const int want = static_cast<int>(rng() % (l + 1));
      for (int tries = 0; tries < 50 && static_cast<int>(s.size()) < want; ++tries) {
        const int x = static_cast<int>(rng() % k);
        if (used.count(x) || used.count((x + 1) % k)) continue;
        used.insert(x);
        used.insert((x + 1) % k);
        s.push_back(x);
      }
      std::vector<int> mixed(used.begin(), used.end());
      CAPTURE(k);
      CAPTURE(s.size());
      const auto cs = ell_pair_system(k, s);
      CHECK(cs.size() == 2 * s.size() + 1);
      CHECK(passes(k2_graph{k, {l}, mixed, {}, 0}, cs));
    }
  }

  TEST_CASE("odd-S form with and without the shift") {
    const std::vector<int> s{1, 3, 5};
    CHECK(passes(k2_graph{11, {5}, range(1, 6), {}, 0}, ell_shift_system(11, s, false)));
    CHECK(passes(k2_graph{11, {5}, range(2, 7), {}, 0}, ell_shift_system(11, s, true)));
  }

  TEST_CASE("plus-r base cycle matches the reference instance") {
    const auto res = plus_r_cycle(9, 1, 1, 1, 0, 0, 0);
    const group_spec g = zk(9);
    auto p = [&](int x, int lv) { return pt(9, x, lv); };
    const cycle want{{p(0, 0), p(8, 0), p(8, 1), p(0, 1), vertex::inf(1), p(2, 0), p(3, 1), p(1, 0), p(4, 1)}};
    CHECK(res.base == want);
    CHECK(passes(plus_r_host(9, 1, 1, 1, 0, 0), orbit(9, res.base)));
    (void)g;
  }

  TEST_CASE("property: plus-r cycles for all valid parameters") {
    int checked = 0;
    for (int k = 7; k <= 21; k += 2) {
      const int l = (k - 1) / 2;
      for (int s = 1; s <= l; ++s)
        for (int s2 = s; s2 <= std::min(s + 1, l); ++s2)
          for (int r = 1; k - (s + s2 + 2 * r) >= 1; ++r) {
            if ((r - s - s2) % 2 == 0) continue;
            for (int eps : {0, 1}) {
              if (s2 + eps > l) continue;
              for (int u : {0, 1}) {
                if (u == 1 && (eps == 1 || s < 2)) continue;
                for (int g : {0, 3}) {
                  CAPTURE(k);
                  CAPTURE(s);
                  CAPTURE(s2);
                  CAPTURE(r);
                  CAPTURE(eps);
                  const auto res = plus_r_cycle(k, s, s2, r, g, eps, u);
                  CHECK(passes(plus_r_host(k, s, s2, r, g, eps), orbit(k, res.base)));
                  const edge t0 = res.level0_tag();
                  const edge t1 = res.level1_tag();
                  CHECK(t0.a.level == 0);
                  CHECK(t0.b.level == 0);
                  CHECK(t1.a.level == 1);
                  CHECK(t1.b.level == 1);
                  CHECK(std::gcd(static_cast<int>(mod(t0.a.elem[0] - t0.b.elem[0], k)), k) == 1);
                  CHECK(std::gcd(static_cast<int>(mod(t1.a.elem[0] - t1.b.elem[0], k)), k) == 1);
                  ++checked;
                }
              }
            }
          }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("plus-l base cycles") {
    // l odd: <{}, {0}, {}> + l
    CHECK(passes(k2_graph{7, {}, {0}, {}, 3}, orbit(7, plus_ell_base(7, 0))));
    // l even: <{l}, {}, {}> + l
    CHECK(passes(k2_graph{9, {4}, {}, {}, 4}, orbit(9, plus_ell_base(9, 1))));
    CHECK(passes(k2_graph{7, {}, {2}, {}, 3}, orbit(7, plus_ell_difference(7, 2))));
    CHECK(passes(k2_graph{9, {2}, {}, {}, 4}, orbit(9, plus_ell_difference(9, 2))));
  }

  TEST_CASE("plus-l relabelled systems") {
    std::vector<edge> factor;
    for (int g = 0; g < 7; ++g) factor.emplace_back(pt(7, g, 0), pt(7, g + 2, 1));
    const auto cs = plus_ell_one_factor(7, factor);
    CHECK(passes(k2_graph{7, {}, {2}, {}, 3}, cs));
    for (int g = 0; g < 7; ++g) CHECK(edge(cs[g].rim[0], cs[g].rim[1]) == factor[g]);

    cycle gamma;
    for (int i = 0; i < 9; ++i) gamma.rim.push_back(pt(9, 2 * i, 1));
    const auto cs2 = plus_ell_cycle(9, gamma);
    CHECK(passes(k2_graph{9, {}, {}, {2}, 4}, cs2));
    CHECK(edge(cs2[3].rim[0], cs2[3].rim[1]) == edge(gamma.rim[3], gamma.rim[4]));
  }

  TEST_CASE("one-factorizations of <D, {0}, D>") {
    const auto f = one_factorization(9, {3, 4});
    CHECK(f.size() == 5);
    std::set<edge> all;
    for (const auto& m : f) {
      CHECK(m.size() == 9);
      all.insert(m.begin(), m.end());
    }
    CHECK(all.size() == 45);
    const auto host = host_of(k2_graph{9, {3, 4}, {0}, {3, 4}, 0});
    CHECK(all.size() == static_cast<std::size_t>(host.edge_count()));
    CHECK(one_factorization(11, {3, 4, 5}).size() == 7);
    CHECK(one_factorization(7, {}).size() == 1);
  }

  TEST_CASE("property: flip is an involution and maps hosts") {
    const auto res = plus_r_cycle(11, 2, 3, 2, 1, 0, 0);
    const auto host = plus_r_host(11, 2, 3, 2, 1, 0);
    const auto cs = orbit(11, res.base);
    CHECK(flip(flip(cs)) == cs);
    CHECK(passes(flip(host), flip(cs)));
  }
}
