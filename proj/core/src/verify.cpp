#include "sunsys/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sunsys/errors.hpp"
#include "sunsys/parallel.hpp"

namespace sunsys {

std::string verify_report::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << ": " << block_count << " blocks (expected " << expected_blocks << "), "
     << host_edges << " host edges, " << uncovered.size() << " uncovered, " << surplus.size()
     << " surplus, " << malformed.size() << " malformed";
  for (const auto& p : problems) os << "; " << p;
  std::size_t shown = 0;
  for (const auto& m : malformed) {
    if (shown++ == 3) break;
    os << "; " << m;
  }
  return os.str();
}

namespace {

std::vector<edge> edges_of(const sun& s) {
  std::vector<edge> out;
  const std::size_t k = s.rim.size();
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(s.rim[i], s.rim[(i + 1) % k]);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(s.rim[i], s.pendants[i]);
  return out;
}

std::vector<edge> edges_of(const cycle& c) {
  std::vector<edge> out;
  const std::size_t k = c.rim.size();
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(c.rim[i], c.rim[(i + 1) % k]);
  return out;
}

std::string shape_problem(const sun& s, int k) {
  if (s.rim.size() != static_cast<std::size_t>(k)) return "rim length " + std::to_string(s.rim.size());
  if (s.pendants.size() != s.rim.size()) return "pendant count differs from rim length";
  try {
    validate(s);
  } catch (const invalid_block_error& e) {
    return e.what();
  }
  return {};
}

std::string shape_problem(const cycle& c, int k) {
  if (c.rim.size() != static_cast<std::size_t>(k)) return "cycle length " + std::to_string(c.rim.size());
  try {
    validate(c);
  } catch (const invalid_block_error& e) {
    return e.what();
  }
  return {};
}

template <class Block>
verify_report verify_impl(const host_graph& host, const std::vector<vertex>& legend, int k,
                          const std::vector<Block>& blocks, int edges_per_block) {
  verify_report rep;
  rep.block_count = blocks.size();
  rep.host_edges = host.edge_count();
  rep.expected_blocks = rep.host_edges % edges_per_block == 0 ? rep.host_edges / edges_per_block : -1;
  if (rep.expected_blocks < 0) rep.problems.push_back("host edge count not divisible by block size");

  if (legend.size() != host.vertex_count()) {
    rep.problems.push_back("legend has " + std::to_string(legend.size()) + " vertices, host has " +
                           std::to_string(host.vertex_count()));
    return rep;
  }
  std::unordered_map<vertex, std::uint32_t, vertex_hash> index;
  index.reserve(legend.size() * 2);
  for (std::uint32_t i = 0; i < legend.size(); ++i)
    if (!index.emplace(legend[i], i).second) {
      rep.problems.push_back("legend repeats vertex " + to_string(legend[i]));
      return rep;
    }

  // Per-chunk edge lists and diagnostics, merged in chunk order.
  const unsigned workers = worker_count();
  std::vector<std::vector<index_edge>> chunk_edges(workers);
  std::vector<std::vector<std::string>> chunk_bad(workers);
  parallel_chunks(blocks.size(), [&](std::size_t begin, std::size_t end, std::size_t w) {
    auto& out = chunk_edges[w];
    auto& bad = chunk_bad[w];
    for (std::size_t b = begin; b < end; ++b) {
      const std::string problem = shape_problem(blocks[b], k);
      if (!problem.empty()) {
        bad.push_back("block " + std::to_string(b) + ": " + problem);
        continue;
      }
      for (const auto& e : edges_of(blocks[b])) {
        auto ia = index.find(e.a);
        auto ib = index.find(e.b);
        if (ia == index.end() || ib == index.end()) {
          bad.push_back("block " + std::to_string(b) + ": vertex outside the host " +
                        to_string(ia == index.end() ? e.a : e.b));
          break;
        }
        out.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
      }
    }
  });
  std::vector<index_edge> covered;
  for (std::size_t w = 0; w < workers; ++w) {
    covered.insert(covered.end(), chunk_edges[w].begin(), chunk_edges[w].end());
    rep.malformed.insert(rep.malformed.end(), chunk_bad[w].begin(), chunk_bad[w].end());
  }
  std::sort(covered.begin(), covered.end());
  const std::vector<index_edge> wanted = host.edges();

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < covered.size() || j < wanted.size()) {
    if (j == wanted.size() || (i < covered.size() && covered[i] < wanted[j])) {
      rep.surplus.push_back(covered[i++]);
    } else if (i == covered.size() || wanted[j] < covered[i]) {
      rep.uncovered.push_back(wanted[j++]);
    } else {
      ++i;
      ++j;
      while (i < covered.size() && covered[i] == covered[i - 1]) rep.surplus.push_back(covered[i++]);
    }
  }
  rep.pass = rep.problems.empty() && rep.malformed.empty() && rep.uncovered.empty() && rep.surplus.empty() &&
             static_cast<long long>(rep.block_count) == rep.expected_blocks;
  return rep;
}

}  // namespace

verify_report verify_blocks(const host_graph& host, const std::vector<vertex>& legend, int k,
                            const std::vector<sun>& blocks) {
  return verify_impl(host, legend, k, blocks, 2 * k);
}

verify_report verify_blocks(const host_graph& host, const std::vector<vertex>& legend, int k,
                            const std::vector<cycle>& blocks) {
  return verify_impl(host, legend, k, blocks, k);
}

void require_valid(const sun_system& s, int k, const std::string& what) {
  const verify_report rep = verify_system(s, k);
  if (!rep.pass) throw verification_error(what + ": " + rep.summary());
}

void require_valid(const cycle_system& s, int k, const std::string& what) {
  const verify_report rep = verify_system(s, k);
  if (!rep.pass) throw verification_error(what + ": " + rep.summary());
}

}  // namespace sunsys
