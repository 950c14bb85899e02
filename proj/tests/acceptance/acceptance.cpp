// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sunsys/assembly.hpp"
#include "sunsys/certificate.hpp"
#include "sunsys/cycles.hpp"
#include "sunsys/diff.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/holes.hpp"
#include "sunsys/lift.hpp"
#include "sunsys/prime.hpp"
#include "sunsys/search.hpp"
#include "sunsys/verify.hpp"
#include "test_support.hpp"

using namespace sunsys;

namespace {

// Collects the failures of one criterion.
struct tally {
  long long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

long long expected_blocks(long long v, int k) { return v * (v - 1) / (4LL * k); }

template <class System>
void expect_system(tally& t, const System& s, int k, long long blocks, const std::string& what) {
  const auto rep = verify(make_certificate(s, k));
  t.expect(rep.pass, what + ": " + rep.summary());
  t.expect(static_cast<long long>(rep.block_count) == blocks,
           what + ": " + std::to_string(rep.block_count) + " blocks, want " + std::to_string(blocks));
}

template <class F>
void expect_no_throw(tally& t, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    t.expect(false, what + ": " + e.what());
  }
}

std::string cases(int k, long long v) { return "k=" + std::to_string(k) + " v=" + std::to_string(v); }

void prime_spectrum(tally& t) {
  for (int p : {7, 11, 13, 17, 19, 23})
    for (long long v = 2 * p + 1; v < 6 * p; ++v) {
      if (!assembly::admissible(p, v)) continue;
      expect_no_throw(t, cases(p, v), [&] { expect_system(t, assembly::solve(p, v), p, expected_blocks(v, p), cases(p, v)); });
    }
}

void zigzag_sweep(tally& t) {
  for (int k = 7; k <= 25; k += 2)
    for (bool plus_one : {false, true}) {
      const long long v = 4LL * k + (plus_one ? 1 : 0);
      expect_no_throw(t, cases(k, v), [&] { expect_system(t, prime::zigzag_system(k, plus_one), k, expected_blocks(v, k), cases(k, v)); });
    }
  t.expect(same_block(prime::zigzag_base_sun(9, true), test_support::k37_sun()), "k=9 base sun differs from the K_37 example");
}

void hole_coverage(tally& t) {
  for (int k : {7, 9, 11, 13})
    for (int n = 2 * k + 1; n < 10 * k; ++n) {
      if (n % 4 > 1 || holes::is_exception(k, n)) continue;
      const std::string what = "hole k=" + std::to_string(k) + " n=" + std::to_string(n);
      const long long edges = 4LL * k * (4 * k - 1) / 2 + 4LL * k * n;
      expect_no_throw(t, what, [&] { expect_system(t, holes::hole(k, n), k, edges / (2 * k), what); });
    }
  expect_no_throw(t, "hole k=9 n=21", [&] {
    const auto s = holes::hole(9, 21);
    t.expect(s.blocks.size() == 77, "hole k=9 n=21 has " + std::to_string(s.blocks.size()) + " blocks");
    const auto parts = holes::hole_parts_for(9, 21);
    t.expect(parts.orbit_suns.size() == 4 && parts.fixed_suns.size() == 25, "hole k=9 n=21 part sizes");
  });
}

void sporadics(tally& t) {
  const std::vector<std::pair<std::string, long long>> want{{"K84", 249}, {"K85", 255}, {"K92", 299},
                                                            {"K144", 468}, {"K105", 390}, {"K49", 84}};
  for (const auto& [name, blocks] : want)
    expect_no_throw(t, name, [&] { expect_system(t, assembly::sporadic(name), assembly::sporadic_k(name), blocks, name); });

  // A single mistyped pendant in a developed system must be caught.
  auto s = assembly::sporadic("K84");
  s.blocks[0].pendants[1] = s.blocks[0].pendants[2];
  bool caught = false;
  try {
    caught = !verify(make_certificate(s, 7)).pass;
  } catch (const sunsys::error&) {
    caught = true;
  }
  t.expect(caught, "a corrupted K84 block passed verification");
}

void recursion_depth(tally& t) {
  for (int k : {7, 11})
    for (long long v = 2 * k; v <= 600; ++v) {
      if (!assembly::admissible(k, v)) continue;
      expect_no_throw(t, cases(k, v), [&] { expect_system(t, assembly::solve(k, v), k, expected_blocks(v, k), cases(k, v)); });
    }
}

void oracle_cross_check(tally& t) {
  const auto k9 = search::search_complete(3, 9, search::block_kind::sun);
  t.expect(k9.status == search::outcome::found, "no 3-sun system of K_9 found");
  if (k9.status == search::outcome::found) expect_system(t, k9.suns, 3, 6, "search K_9");

  const auto k21 = search::search_complete(7, 21, search::block_kind::sun);
  t.expect(k21.status == search::outcome::found, "no 7-sun system of K_21 found");
  if (k21.status != search::outcome::found) return;
  const auto found = verify(make_certificate(k21.suns, 7));
  const auto built = verify(make_certificate(prime::direct(7, 21), 7));
  t.expect(found.pass && built.pass, "K_21 systems fail verification");
  t.expect(found.block_count == 15 && built.block_count == 15, "K_21 block counts differ from 15");
  t.expect(found.host_edges == built.host_edges && found.expected_blocks == built.expected_blocks,
           "K_21 reports disagree");
}

void negative_suite(tally& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int n : {20, 21, 32, 33, 44, 45, 56, 57, 64, 65, 68, 69}) pairs.emplace_back(7, n);
  for (int n : {100, 101, 112, 113}) pairs.emplace_back(11, n);
  for (const auto& [k, n] : pairs) {
    const std::string what = "hole k=" + std::to_string(k) + " n=" + std::to_string(n);
    t.expect(holes::is_exception(k, n), what + " not listed");
    bool typed = false;
    try {
      holes::hole(k, n);
    } catch (const exception_pair_error&) {
      typed = true;
    } catch (const std::exception&) {
    }
    t.expect(typed, what + " did not raise an exception-pair error");
  }

  const std::vector<std::string> texts{to_json(make_certificate(assembly::solve(7, 36), 7)),
                                       to_json(make_certificate(holes::hole(9, 21), 9)),
                                       to_json(make_certificate(assembly::solve(11, 144), 11)),
                                       to_json(make_certificate(assembly::solve(13, 53), 13))};
  for (const auto& text : texts) t.expect(verify(certificate_from_json(text)).pass, "unmutated certificate fails");
  std::mt19937 rng(7331);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = certificate_from_json(texts[trial % texts.size()]);
    auto& b = c.suns[rng() % c.suns.size()];
    const std::size_t i = rng() % b.pendants.size();
    vertex to;
    do {
      to = c.legend[rng() % c.legend.size()];
    } while (to == b.pendants[i] || to == b.rim[i]);
    b.pendants[i] = to;
    bool rejected = false;
    try {
      rejected = !verify(certificate_from_json(to_json(c))).pass;
    } catch (const sunsys::error&) {
      rejected = true;
    }
    t.expect(rejected, "mutation " + std::to_string(trial) + " passed verification");
  }
}

cycle random_cycle(std::mt19937& rng, int k, int m, int u) {
  cycle c;
  std::set<vertex> used;
  while (static_cast<int>(c.rim.size()) < k) {
    const vertex v = u > 0 && rng() % 6 == 0 ? vertex::inf(1 + static_cast<int>(rng() % u))
                                             : cycles::pt(m, static_cast<int>(rng() % m), static_cast<int>(rng() % 2));
    if (used.insert(v).second) c.rim.push_back(v);
  }
  return c;
}

void property_suites(tally& t) {
  std::mt19937 rng(4242);
  {
    const group_spec g({5, 7});
    const auto all = g.elements();
    for (int trial = 0; trial < 1000; ++trial) {
      const int k = 3 + 2 * static_cast<int>(rng() % 4);
      std::vector<vertex> vs;
      std::set<vertex> used;
      while (vs.size() < static_cast<std::size_t>(2 * k)) {
        const vertex v = rng() % 17 == 0 ? vertex::inf(1 + static_cast<int>(rng() % 3))
                                         : vertex::point(all[rng() % all.size()], static_cast<int>(rng() % 3));
        if (used.insert(v).second) vs.push_back(v);
      }
      const sun s{{vs.begin(), vs.begin() + k}, {vs.begin() + k, vs.end()}};
      const auto d = delta(g, s);
      for (const auto& [key, list] : d) {
        std::vector<group_element> negated;
        for (const auto& x : diff_at(d, key.second, key.first)) negated.push_back(neg(g, x));
        std::sort(negated.begin(), negated.end());
        t.expect(negated == list, "antisymmetry fails on " + to_string(s));
      }
    }
  }
  {
    const group_spec g({3, 9});
    const auto all = g.elements();
    for (int trial = 0; trial < 500; ++trial) {
      sun s;
      std::set<vertex> used;
      if (trial % 5 == 0) {
        // a sun fixed by <(0,3)>: rim and pendants are unions of cosets
        const auto base = all[rng() % all.size()];
        for (int i = 0; i < 3; ++i) s.rim.push_back(vertex::point(add(g, base, g.make({0, 3 * i})), 0));
        for (int i = 0; i < 3; ++i) s.pendants.push_back(vertex::point(add(g, base, g.make({0, 3 * i + 1})), 0));
      } else {
        std::vector<vertex> vs;
        while (vs.size() < 10) {
          const vertex v = vertex::point(all[rng() % all.size()], static_cast<int>(rng() % 2));
          if (used.insert(v).second) vs.push_back(v);
        }
        s = sun{{vs.begin(), vs.begin() + 5}, {vs.begin() + 5, vs.end()}};
      }
      const auto orbit = orbit_union(g, std::vector<sun>{s}, whole_group(g));
      const auto st = stabilizer(g, s);
      t.expect(orbit.size() * st.size() == static_cast<std::size_t>(g.order()), "orbit-stabilizer fails on " + to_string(s));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 5 + 2 * (trial % 4);
    const int u = static_cast<int>(rng() % 3);
    const cycle c = random_cycle(rng, k, 13, u);
    std::vector<bool> choice(k);
    for (int i = 0; i < k; ++i) choice[i] = rng() % 2;
    const lift::overline_map bar{u};
    const sun s = lift::sun_from_cycle(c, choice, bar);
    auto both = sun_edges(s);
    const auto other = sun_edges(bar(s));
    both.insert(both.end(), other.begin(), other.end());
    std::sort(both.begin(), both.end());
    t.expect(both == lift::blowup_edges(cycle_edges(c), bar), "sun and overline miss the blowup of " + to_string(c));
  }
  {
    const lift::overline_map bar{3};
    for (int level = 0; level < 4; ++level)
      for (int x = 0; x < 9; ++x) t.expect(bar(bar(cycles::pt(9, x, level))) == cycles::pt(9, x, level), "overline twice");
    for (int h = 1; h <= 6; ++h) t.expect(bar(bar(vertex::inf(h))) == vertex::inf(h), "overline twice on infinity");
    t.expect(bar(vertex::inf_primed(1)) == vertex::inf_primed(1), "primed infinity moved");
    for (int trial = 0; trial < 100; ++trial) {
      const cycle c = random_cycle(rng, 7, 11, 0);
      t.expect(cycles::flip(cycles::flip(c)) == c, "flip twice on " + to_string(c));
      t.expect(bar(bar(c)) == c, "overline twice on " + to_string(c));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 5 + 2 * static_cast<int>(rng() % 3);
    const int w = 1 + static_cast<int>(rng() % 3);
    std::vector<edge> gamma;
    for (int e = 0; e < 12; ++e) {
      const vertex a = cycles::pt(m, static_cast<int>(rng() % m), static_cast<int>(rng() % 2));
      const vertex b = cycles::pt(m, static_cast<int>(rng() % m), static_cast<int>(rng() % 2));
      if (a != b) gamma.emplace_back(a, b);
    }
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    std::vector<vertex> support;
    for (int j = 0; j < 2; ++j)
      for (int x = 0; x < m; ++x) support.push_back(cycles::pt(m, x, j));
    auto plus_w = gamma;
    for (const auto& v : support)
      for (int h = 1; h <= w; ++h) plus_w.emplace_back(v, vertex::inf(h));
    const lift::overline_map bar{w};
    auto rhs = lift::blowup_edges(gamma, bar);
    for (const auto& v : support)
      for (const auto& x : {v, bar(v)})
        for (int h = 1; h <= 2 * w; ++h) rhs.emplace_back(x, vertex::inf(h));
    std::sort(rhs.begin(), rhs.end());
    t.expect(lift::blowup_edges(plus_w, bar) == rhs, "blowup does not commute with + w");
  }
}

struct criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(tally&)> run;
};

}  // namespace

int main() {
  const std::vector<criterion> all{
      {1, "prime spectrum for p in {7, 11, 13, 17, 19, 23}, 2p < v < 6p", 5, prime_spectrum},
      {2, "K_4k and K_4k+1 for odd k = 7..25, k = 9 base sun", 2, zigzag_sweep},
      {3, "hole systems K_4k + n for k in {7, 9, 11, 13}", 60, hole_coverage},
      {4, "sporadic systems K84 K85 K92 K144 K105 K49", 2, sporadics},
      {5, "solve(7, v) and solve(11, v) for admissible v <= 600", 120, recursion_depth},
      {6, "exact-cover search finds K_9 and K_21 systems", 60, oracle_cross_check},
      {7, "exception pairs and 100 certificate mutations", 30, negative_suite},
      {8, "difference, orbit and doubling identities", 30, property_suites},
  };
  int failed = 0;
  for (const auto& c : all) {
    tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds)
      t.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    const bool pass = t.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s (%lld checks, %.2f s)\n", c.id, pass ? "PASS" : "FAIL", c.name.c_str(), t.checks,
                secs);
    for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
