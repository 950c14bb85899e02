#include <string>

#include "doctest.h"
#include "sunsys/certificate.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/prime.hpp"
#include "sunsys/search.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;
using namespace sunsys::search;

TEST_SUITE("exact-cover search") {
  TEST_CASE("3-sun system of K_9 without symmetry") {
    const auto r = search_complete(3, 9, block_kind::sun);
    REQUIRE(r.status == outcome::found);
    CHECK(r.symmetry == 1);
    CHECK(r.suns.blocks.size() == 6);
    CHECK(verify_system(r.suns, 3).pass);
  }

  TEST_CASE("7-sun system of K_21 agrees with the direct construction") {
    const auto r = search_complete(7, 21, block_kind::sun);
    REQUIRE(r.status == outcome::found);
    CHECK(r.symmetry == 7);
    const auto direct = prime::direct(7, 21);
    const auto found = verify_system(r.suns, 7);
    const auto built = verify_system(direct, 7);
    CHECK(found.pass);
    CHECK(built.pass);
    CHECK(found.block_count == 15);
    CHECK(found.block_count == built.block_count);
    CHECK(found.host_edges == built.host_edges);
  }

  TEST_CASE("counting conditions prove impossibility") {
    const auto r7 = search_complete(3, 7, block_kind::sun);
    CHECK(r7.status == outcome::impossible);
    CHECK(r7.nodes == 0);
    const auto r5 = search_complete(3, 5, block_kind::sun);
    CHECK(r5.status == outcome::impossible);
  }

  TEST_CASE("exhaustive search proves K_6 has no triangle decomposition") {
    // 15 edges split into 5 triangles would need even degrees
    options opt;
    opt.symmetry = 1;
    const auto r = search_complete(3, 6, block_kind::cycle, opt);
    CHECK(r.status == outcome::impossible);
    CHECK(r.nodes > 0);
  }

  TEST_CASE("cycle systems") {
    const auto r7 = search_complete(3, 7, block_kind::cycle);
    REQUIRE(r7.status == outcome::found);
    CHECK(r7.cycles.blocks.size() == 7);
    CHECK(verify_system(r7.cycles, 3).pass);
    const auto r15 = search_complete(5, 15, block_kind::cycle);
    REQUIRE(r15.status == outcome::found);
    CHECK(r15.cycles.blocks.size() == 21);
    CHECK(verify_system(r15.cycles, 5).pass);
  }

  TEST_CASE("search on a multipartite host") {
    const auto host = host_graph::multipartite(3, 4);
    const auto g = group_spec::cyclic(12);
    std::vector<vertex> legend;
    for (int i = 0; i < 12; ++i) legend.push_back(vertex::point(g.reduce({i}), 0));
    const auto r = exact_cover_search(host, legend, 3, block_kind::cycle);
    REQUIRE(r.status == outcome::found);
    CHECK(r.cycles.blocks.size() == 16);
    CHECK(verify_system(r.cycles, 3).pass);
    options opt;
    opt.symmetry = 3;
    CHECK_THROWS_AS(exact_cover_search(host, legend, 3, block_kind::cycle, opt), precondition_error);
  }

  TEST_CASE("node cap is reported apart from impossibility") {
    options opt;
    opt.node_cap = 10;
    const auto r = search_complete(7, 21, block_kind::sun, opt);
    CHECK(r.status == outcome::cap_exceeded);
  }

  TEST_CASE("results are deterministic for a fixed seed") {
    for (int v : {9, 13, 21}) {
      CAPTURE(v);
      const int k = v == 21 ? 7 : 3;
      const auto a = search_complete(k, v, block_kind::sun);
      const auto b = search_complete(k, v, block_kind::sun);
      REQUIRE(a.status == outcome::found);
      CHECK(a.nodes == b.nodes);
      CHECK(to_json(make_certificate(a.suns, k)) == to_json(make_certificate(b.suns, k)));
    }
  }

  TEST_CASE("small 3-sun and 5-sun spectra") {
    for (int v : {9, 12, 13, 16, 21, 24, 25, 28, 33, 36, 37, 40}) {
      CAPTURE(v);
      const auto r = search_complete(3, v, block_kind::sun);
      REQUIRE(r.status == outcome::found);
      CHECK(static_cast<long long>(r.suns.blocks.size()) == 1LL * v * (v - 1) / 12);
    }
    for (int v : {16, 20, 21, 25, 36, 40, 41, 45}) {
      CAPTURE(v);
      const auto r = search_complete(5, v, block_kind::sun);
      REQUIRE(r.status == outcome::found);
      CHECK(static_cast<long long>(r.suns.blocks.size()) == 1LL * v * (v - 1) / 20);
    }
  }

  TEST_CASE("bad symmetry requests") {
    options opt;
    opt.symmetry = 4;
    CHECK_THROWS_AS(search_complete(3, 9, block_kind::sun, opt), precondition_error);
    opt.symmetry = 5;
    CHECK_THROWS_AS(search_complete(3, 9, block_kind::sun, opt), precondition_error);
    CHECK_THROWS_AS(search_complete(2, 9, block_kind::sun), precondition_error);
  }
}
