#include <random>

#include "doctest.h"
#include "sunsys/assembly.hpp"
#include "sunsys/certificate.hpp"
#include "sunsys/diff.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"
#include "test_support.hpp"

using namespace sunsys;

namespace {

sun_system k37_system() {
  return develop(base_family<sun>{group_spec::cyclic(37), 1, 0, {test_support::k37_sun()}});
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("a valid system passes") {
    const auto rep = verify_system(k37_system(), 9);
    CHECK(rep.pass);
    CHECK(rep.block_count == 37);
    CHECK(rep.expected_blocks == 37);
  }

  TEST_CASE("redirecting one pendant edge is detected") {
    auto sys = k37_system();
    sys.host = host_graph::complete(37);
    // pendant of the first rim vertex moves to another vertex outside the sun
    auto& s = sys.blocks[0];
    std::vector<vertex> used = block_vertices(s);
    for (const auto& v : sys.legend)
      if (std::find(used.begin(), used.end(), v) == used.end()) {
        s.pendants[0] = v;
        break;
      }
    const auto rep = verify_system(sys, 9);
    CHECK_FALSE(rep.pass);
    CHECK(rep.uncovered.size() == 1);
    CHECK(rep.surplus.size() == 1);
  }

  TEST_CASE("wrong block size and foreign vertices are malformed") {
    auto sys = k37_system();
    sys.blocks[3].rim.pop_back();
    sys.blocks[3].pendants.pop_back();
    sys.blocks[5].pendants[2] = vertex::inf(9);
    const auto rep = verify_system(sys, 9);
    CHECK_FALSE(rep.pass);
    CHECK(rep.malformed.size() == 2);
  }

  TEST_CASE("certificate JSON round trip is byte-identical") {
    const auto cert = make_certificate(k37_system(), 9);
    const std::string text = to_json(cert);
    const auto back = certificate_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(verify(back).pass);
  }

  TEST_CASE("vertex encodings") {
    CHECK(vertex_to_json(vertex::point(group_element{3, 4}, 2)) == R"(["p",[3,4],2])");
    CHECK(vertex_to_json(vertex::inf(2)) == R"(["inf",2])");
    CHECK(vertex_to_json(vertex::inf_primed(1)) == R"(["inf'",1])");
    CHECK(host_to_json(host_graph::complete_plus(36, 21)) == R"({"complete_plus":{"complete":36,"w":21}})");
    CHECK(host_to_json(host_graph::multipartite(3, 28)) == R"({"multipartite":[3,28]})");
  }

  TEST_CASE("malformed certificates are parse errors") {
    CHECK_THROWS_AS(certificate_from_json("not json"), parse_error);
    CHECK_THROWS_AS(certificate_from_json(R"({"format":1})"), parse_error);
    CHECK_THROWS_AS(certificate_from_json(
                        R"({"format":1,"kind":"sun-system","k":3,"host":{"complete":9},"vertices":[["q",1]],"blocks":[]})"),
                    parse_error);
  }

  TEST_CASE("property: 100 random single-edge mutations of a certificate all fail") {
    const auto cert = make_certificate(assembly::solve(7, 36), 7);
    const auto text = to_json(cert);
    REQUIRE(verify(certificate_from_json(text)).pass);
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 100; ++trial) {
      CAPTURE(trial);
      auto c = certificate_from_json(text);
      auto& b = c.suns[rng() % c.suns.size()];
      const std::size_t i = rng() % b.pendants.size();
      vertex to;
      do {
        to = c.legend[rng() % c.legend.size()];
      } while (to == b.pendants[i] || to == b.rim[i]);
      b.pendants[i] = to;
      CHECK_FALSE(verify(certificate_from_json(to_json(c))).pass);
    }
  }
}
