#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "sunsys/errors.hpp"
#include "sunsys/prime.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;
using namespace sunsys::prime;

namespace {

// Sorted residues of the (i, j)-differences of a sun over Z_p.
std::vector<int> residues(const diff_list& d, int i, int j) {
  std::vector<int> out;
  for (const auto& e : diff_at(d, i, j)) out.push_back(e[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> signed_set(int p, std::initializer_list<int> xs, bool both_signs) {
  std::vector<int> out;
  for (int x : xs) {
    out.push_back(static_cast<int>(mod(x, p)));
    if (both_signs) out.push_back(static_cast<int>(mod(-x, p)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

vertex at(int p, int a, int level) { return vertex::point(group_spec::cyclic(p).reduce({a}), level); }

long long expected_blocks(long long v, int k) { return v * (v - 1) / (4LL * k); }

}  // namespace

TEST_SUITE("prime-direct") {
  TEST_CASE("zigzag base sun for k = 9 matches the reference K_37 sun") {
    const auto z = zigzag_base(9, true);
    CHECK(z.rim == std::vector<long long>{0, -1, 1, -2, 2, -3, 3, -4, 8});
    CHECK(z.pendants == std::vector<long long>{14, 12, 16, 9, 18, 7, 20, 5, 26});
    const auto d = delta(group_spec::cyclic(37), zigzag_base_sun(9, true));
    std::vector<int> all;
    for (int x = 1; x < 37; ++x) all.push_back(x);
    CHECK(residues(d, 0, 0) == all);
  }

  TEST_CASE("zigzag labels stay inside {-3t-1} u [-t, 5t] u {6t+2} before reduction") {
    for (int k = 7; k <= 41; k += 2) {
      CAPTURE(k);
      const long long t = (k - 1) / 2;
      const auto z = zigzag_base(k, true);
      std::vector<long long> labels = z.rim;
      labels.insert(labels.end(), z.pendants.begin(), z.pendants.end());
      for (long long x : labels) CHECK((x == -3 * t - 1 || (x >= -t && x <= 5 * t) || x == 6 * t + 2));
      std::set<long long> reduced;
      for (long long x : labels) reduced.insert(mod(x, 4 * k + 1));
      CHECK(reduced.size() == labels.size());
    }
  }

  TEST_CASE("odd t subtracts the middle pendant difference") {
    // k = 7: t = 3, the second sorted rim vertex -2 gets -2 - 8 = -10
    const auto z = zigzag_base(7, true);
    const auto it = std::find(z.rim.begin(), z.rim.end(), -2);
    REQUIRE(it != z.rim.end());
    CHECK(z.pendants[it - z.rim.begin()] == -10);
  }

  TEST_CASE("K_4k and K_4k+1 for k = 7..25") {
    for (int k = 7; k <= 25; k += 2) {
      CAPTURE(k);
      const auto plus = zigzag_system(k, true);
      CHECK(plus.blocks.size() == static_cast<std::size_t>(expected_blocks(4 * k + 1, k)));
      CHECK(verify_system(plus, k).pass);
      const auto even = zigzag_system(k, false);
      CHECK(even.blocks.size() == static_cast<std::size_t>(expected_blocks(4 * k, k)));
      CHECK(verify_system(even, k).pass);
    }
    CHECK(zigzag_system(7, false).blocks.size() == 27);
    CHECK_THROWS_AS(zigzag_system(5, true), precondition_error);
    CHECK_THROWS_AS(zigzag_system(8, true), precondition_error);
  }

  TEST_CASE("K_4k variant hangs the infinity on the largest rim vertex") {
    const auto s = zigzag_base_sun(9, false);
    CHECK(s.rim.back() == vertex::point(group_spec::cyclic(35).reduce({8}), 0));
    CHECK(s.pendants.back() == vertex::inf(1));
  }

  TEST_CASE("type (i, j) suns") {
    const auto g13 = group_spec::cyclic(13);
    const auto d = delta(g13, type_ij_sun(13, 0, 1, 1, 4));
    CHECK(residues(d, 0, 0) == signed_set(13, {1}, true));
    CHECK(residues(d, 0, 1) == std::vector<int>{4});
    CHECK(residues(d, 1, 0) == std::vector<int>{9});
    CHECK(residues(d, 1, 1).empty());

    const auto d2 = delta(group_spec::cyclic(11), type_ij_sun(11, 2, 0, 3, 0));
    CHECK(residues(d2, 2, 2) == signed_set(11, {3}, true));
    CHECK(residues(d2, 2, 0) == std::vector<int>{0});
    CHECK(residues(d2, 0, 0).empty());

    CHECK_THROWS_AS(type_ij_sun(13, 0, 1, 0, 4), precondition_error);
    CHECK_THROWS_AS(type_ij_sun(13, 0, 1, 13, 4), precondition_error);
    CHECK_THROWS_AS(type_ij_sun(13, 1, 1, 2, 4), precondition_error);
  }

  TEST_CASE("property: type (i, j) difference profile on 1000 random parameter sets") {
    std::mt19937 rng(20240611);
    const std::vector<int> primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int trial = 0; trial < 1000; ++trial) {
      const int p = primes[rng() % primes.size()];
      const int m = 2 + static_cast<int>(rng() % 4);
      const int i = static_cast<int>(rng() % m);
      int j = static_cast<int>(rng() % m);
      if (j == i) j = (i + 1) % m;
      const int x = 1 + static_cast<int>(rng() % (p - 1));
      const int y = static_cast<int>(rng() % p);
      CAPTURE(p);
      CAPTURE(i);
      CAPTURE(j);
      CAPTURE(x);
      CAPTURE(y);
      const sun s = type_ij_sun(p, i, j, x, y);
      validate(s);
      const auto d = delta(group_spec::cyclic(p), s);
      CHECK(residues(d, i, i) == signed_set(p, {x}, true));
      CHECK(residues(d, i, j) == std::vector<int>{y});
      CHECK(residues(d, j, i) == std::vector<int>{static_cast<int>(mod(-y, p))});
      CHECK(residues(d, j, j).empty());
      CHECK(d.size() == 3);
    }
  }

  TEST_CASE("K_40 base sun has the reference difference profile") {
    const int p = 13;
    const auto d = delta(group_spec::cyclic(p), base_sun_3p1(p));
    CHECK(residues(d, 1, 2) == signed_set(p, {2, 3, 4, 6}, true));
    CHECK(residues(d, 0, 2) == signed_set(p, {1, 4, 5, 6}, true));
    CHECK(residues(d, 0, 1) == signed_set(p, {-1, 2, 3, -3, 5, -5}, false));
    CHECK(residues(d, 0, 0).empty());
    CHECK(residues(d, 2, 2).empty());
    CHECK(residues(d, 1, 1) == signed_set(p, {2}, true));
    CHECK(complete_with_type_suns(p, 3, {base_sun_3p1(p)}, true).size() == 17);
    const auto sys = system_3p1(p);
    CHECK(sys.blocks.size() == 30);
    CHECK(verify_system(sys, p).pass);
  }

  TEST_CASE("K_{3p+1} for p = 5 (mod 12) keeps the counted difference sizes") {
    for (int p : {17, 29, 41, 53}) {
      CAPTURE(p);
      const auto d = delta(group_spec::cyclic(p), base_sun_3p1(p));
      CHECK(diff_at(d, 0, 0).size() == static_cast<std::size_t>((p - 9) / 2));
      CHECK(diff_at(d, 1, 1).empty());
      CHECK(diff_at(d, 2, 2).empty());
      CHECK(diff_at(d, 0, 1).size() == static_cast<std::size_t>((p + 1) / 2));
      CHECK(diff_at(d, 0, 2).size() == static_cast<std::size_t>((7 * p + 1) / 12));
      CHECK(diff_at(d, 1, 2).size() == static_cast<std::size_t>((2 * p - 4) / 3));
      const auto sys = system_3p1(p);
      CHECK(sys.blocks.size() == static_cast<std::size_t>(expected_blocks(3 * p + 1, p)));
      CHECK(verify_system(sys, p).pass);
    }
  }

  TEST_CASE("K_{3p+1} for p = 1 (mod 12)") {
    for (int p : {37, 61, 73}) {
      CAPTURE(p);
      const auto d = delta(group_spec::cyclic(p), base_sun_3p1(p));
      const std::size_t pure = diff_at(d, 0, 0).size() + diff_at(d, 1, 1).size() + diff_at(d, 2, 2).size();
      CHECK(pure == static_cast<std::size_t>((p - 9) / 2));
      // level 1 carries as many pure pairs as its classes allow
      CHECK(diff_at(d, 1, 1).size() == static_cast<std::size_t>((p - 1) / 3));
      const auto sys = system_3p1(p);
      CHECK(sys.blocks.size() == static_cast<std::size_t>(expected_blocks(3 * p + 1, p)));
      CHECK(verify_system(sys, p).pass);
    }
    CHECK_THROWS_AS(system_3p1(11), precondition_error);
    CHECK_THROWS_AS(system_3p1(5), precondition_error);
    CHECK_THROWS_AS(system_3p1(21), precondition_error);
  }

  TEST_CASE("K_36 from the reference base sun") {
    const int p = 7;
    const auto g = group_spec({7, 5});
    auto v = [&](int a, int b) { return vertex::point(g.reduce({a, b}), 0); };
    const sun s = base_sun_5p1(p);
    CHECK(s.rim == std::vector<vertex>{v(0, 0), v(1, 1), v(-2, -1), v(3, 1), v(-4, -1), v(5, 1), v(-6, -1)});
    CHECK(s.pendants == std::vector<vertex>{vertex::inf(1), v(-1, 1), v(2, 3), v(-3, 3), v(-3, -3), v(-5, -3), v(6, 3)});

    // complement D = +-{(4,0), (6,0), (2,4), (0,1)}
    const auto d = delta(g, s);
    std::set<group_element> used(diff_at(d, 0, 0).begin(), diff_at(d, 0, 0).end());
    std::set<group_element> complement;
    for (const auto& e : g.elements())
      if (e != g.zero() && !used.count(e)) complement.insert(e);
    std::set<group_element> expect;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{4, 0}, {6, 0}, {2, 4}, {0, 1}}) {
      expect.insert(g.reduce({a, b}));
      expect.insert(g.reduce({-a, -b}));
    }
    CHECK(complement == expect);

    const auto pairing = pairing_5p1(p);
    REQUIRE(pairing.size() == 2);
    std::set<group_element> covered;
    for (const auto& [x, rs] : pairing) {
      CHECK(rs.second != 0);
      for (auto e : {g.reduce({2LL * x, 0}), g.reduce({rs.first, rs.second})}) {
        covered.insert(e);
        covered.insert(neg(g, e));
      }
    }
    CHECK(covered == expect);

    const auto sys = system_5p1(p);
    CHECK(sys.blocks.size() == 45);
    CHECK(verify_system(sys, p).pass);
  }

  TEST_CASE("K_{5p+1} for p = 3 (mod 4)") {
    for (int p : {11, 19, 23, 31}) {
      CAPTURE(p);
      CHECK(pairing_5p1(p).size() == static_cast<std::size_t>((p - 3) / 4 + 1));
      const auto sys = system_5p1(p);
      CHECK(sys.blocks.size() == static_cast<std::size_t>(expected_blocks(5 * p + 1, p)));
      CHECK(verify_system(sys, p).pass);
    }
    CHECK_THROWS_AS(system_5p1(13), precondition_error);
  }

  TEST_CASE("K_33 from the reference S and T families") {
    const int p = 11;
    for (int h = 0; h < 3; ++h)
      for (int r = 1; r <= 3; ++r) {
        const sun s = sun_mp(3, p, r, 1, h);
        const std::vector<std::pair<int, int>> rim{{0, 0}, {1, 1}, {2, 2}, {3, 0}, {4, 1}, {5, 0},
                                                   {6, 1}, {7, 0}, {8, 1}, {9, 0}, {10, 1}};
        const std::vector<std::pair<int, int>> pend{{1, 2}, {2, 0}, {3, 1}, {4, 2}, {5, 2}, {6, 2},
                                                    {7, 2}, {8, 2}, {9, 2}, {10, 2}, {0, 2}};
        for (int i = 0; i < p; ++i) {
          CHECK(s.rim[i] == at(p, rim[i].first * r, (rim[i].second + h) % 3));
          CHECK(s.pendants[i] == at(p, pend[i].first * r, (pend[i].second + h) % 3));
        }
      }
    // the S family covers exactly the classes +-[1,3] between distinct levels
    std::vector<sun> family;
    for (int h = 0; h < 3; ++h)
      for (int r = 1; r <= 3; ++r) family.push_back(sun_mp(3, p, r, 1, h));
    std::vector<edge> es;
    for (const auto& s : family)
      for (const auto& e : sun_edges(s)) es.push_back(e);
    const auto d = delta_edges(group_spec::cyclic(p), es);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) {
          CHECK(diff_at(d, i, i).empty());
          continue;
        }
        std::map<int, int> mult;
        for (int x : residues(d, i, j)) ++mult[x];
        CHECK(mult.size() == 6);
        for (const auto& [x, c] : mult) {
          CHECK(c == p);
          CHECK((x <= 3 || x >= p - 3));
        }
      }
    const auto t = complete_with_type_suns(p, 3, family, false);
    CHECK(t.size() == 15);
    const auto sys = system_mp(3, p);
    CHECK(sys.blocks.size() == 24);
    CHECK(verify_system(sys, p).pass);
  }

  TEST_CASE("K_{mp} type-sun counts and other instances") {
    for (const auto& [m, p] : std::vector<std::pair<int, int>>{{3, 7}, {5, 13}, {3, 19}, {5, 17}, {7, 11}}) {
      CAPTURE(m);
      CAPTURE(p);
      std::vector<sun> family;
      for (int h = 0; h < m; ++h) {
        for (int r = 1; r <= (p + m - 2) / 4; ++r) family.push_back(sun_mp(m, p, r, 1, h));
        for (int r = 1; r <= (p - 1) / 2; ++r)
          for (int s = 2; s <= (m - 1) / 2; ++s) family.push_back(sun_mp(m, p, r, s, h));
      }
      const auto t = complete_with_type_suns(p, m, family, false);
      // |Delta_ij T| = (p-m)/2 + 1 when i - j = +-1, otherwise 1
      std::map<std::pair<int, int>, int> mixed;
      for (const auto& ts : t) ++mixed[{std::min(ts.i, ts.j), std::max(ts.i, ts.j)}];
      for (const auto& [key, c] : mixed) {
        const int gap = key.second - key.first;
        CHECK(c == (gap == 1 || gap == m - 1 ? (p - m) / 2 + 1 : 1));
      }
      const auto sys = system_mp(m, p);
      CHECK(sys.blocks.size() == static_cast<std::size_t>(expected_blocks(static_cast<long long>(m) * p, p)));
      CHECK(verify_system(sys, p).pass);
    }
    CHECK(system_mp(3, 7).blocks.size() == 15);
    CHECK_THROWS_AS(system_mp(3, 13), precondition_error);
    CHECK_THROWS_AS(system_mp(13, 11), precondition_error);
  }

  TEST_CASE("direct constructions cover every admissible v in (2p, 6p)") {
    for (int p : {7, 11, 13, 17, 19, 23}) {
      int covered = 0;
      for (int v = 2 * p + 1; v < 6 * p; ++v) {
        if (!admissible(p, v)) continue;
        CAPTURE(p);
        CAPTURE(v);
        const auto sys = direct(p, v);
        CHECK(static_cast<long long>(sys.blocks.size()) == expected_blocks(v, p));
        CHECK(verify_system(sys, p).pass);
        ++covered;
      }
      CHECK(covered == 4);
    }
    CHECK_THROWS_AS(direct(7, 30), inadmissible_error);
  }

  TEST_CASE("admissible orders") {
    std::vector<int> got;
    for (int v = 1; v <= 100; ++v)
      if (admissible(7, v)) got.push_back(v);
    CHECK(got == std::vector<int>{21, 28, 29, 36, 49, 56, 57, 64, 77, 84, 85, 92});
  }
}
