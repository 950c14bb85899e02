#include "sunsys/assembly.hpp"

#include <future>
#include <map>
#include <optional>
#include <sstream>

#include "sunsys/errors.hpp"
#include "sunsys/holes.hpp"
#include "sunsys/prime.hpp"
#include "sunsys/search.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::assembly {

namespace {

long long pairs(long long n) { return n * (n - 1) / 2; }

std::string order_name(long long v) { return "K_" + std::to_string(v); }

plan_node leaf(plan_node::step kind, int k, long long v, std::string name) {
  plan_node p;
  p.kind = kind;
  p.k = k;
  p.v = v;
  p.name = std::move(name);
  return p;
}

// K_{n + 4kg} from a plan of K_n, g holes K_4k + n and the filler.
plan_node join(int k, long long n, int g, plan_node inner) {
  plan_node p;
  p.kind = plan_node::step::join;
  p.k = k;
  p.n = n;
  p.g = g;
  p.v = n + 4LL * k * g;
  p.name = "join";
  p.inner.push_back(std::move(inner));
  plan_node h;
  h.kind = plan_node::step::hole;
  h.k = k;
  h.n = n;
  h.g = g;
  h.name = "hole";
  p.inner.push_back(std::move(h));
  if (g >= 3) {
    plan_node m;
    m.kind = plan_node::step::multipartite;
    m.k = k;
    m.g = g;
    m.name = "multipartite";
    p.inner.push_back(std::move(m));
  }
  return p;
}

// 2k < v < 6k.
plan_node plan_direct(int k, long long v) {
  if (v == 4LL * k || v == 4LL * k + 1) return leaf(plan_node::step::direct, k, v, "zigzag");
  if (!is_prime(k))
    throw unsupported_error("no construction for composite k = " + std::to_string(k) + " and v = " +
                            std::to_string(v) + " (only v = 0, 1 mod 4k are covered below 6k)");
  std::string name;
  if (v == 3LL * k + 1) name = "prime Z_p x Z_3 + inf";
  else if (v == 5LL * k + 1) name = "prime Z_p x Z_5 + inf";
  else if (v == 3LL * k) name = "prime Z_p x Z_3";
  else if (v == 5LL * k) name = "prime Z_p x Z_5";
  else throw unsupported_error("no direct construction for k = " + std::to_string(k) + ", v = " + std::to_string(v));
  return leaf(plan_node::step::direct, k, v, name);
}

std::optional<std::string> sporadic_for_split(int k, long long v) {
  static const std::map<std::pair<int, long long>, std::string> table{
      {{7, 84}, "K84"}, {{7, 85}, "K85"}, {{7, 92}, "K92"}, {{11, 144}, "K144"}};
  const auto it = table.find({k, v});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// Blocks of `s` with every vertex renamed through its legend index.
template <class Map>
void relabel_into(const sun_system& s, const Map& id_of_index, const group_spec& zv, std::vector<sun>& out) {
  std::map<vertex, int> index;
  for (std::size_t i = 0; i < s.legend.size(); ++i) index.emplace(s.legend[i], static_cast<int>(i));
  auto map = [&](const vertex& x) { return vertex::point(zv.reduce({id_of_index(index.at(x))}), 0); };
  for (const auto& b : s.blocks) {
    sun t;
    for (const auto& x : b.rim) t.rim.push_back(map(x));
    for (const auto& x : b.pendants) t.pendants.push_back(map(x));
    out.push_back(std::move(t));
  }
}

sun_system on_integers(long long v, std::vector<sun> blocks) {
  sun_system out;
  out.host = host_graph::complete(static_cast<int>(v));
  out.legend = integer_legend(v);
  out.blocks = std::move(blocks);
  return out;
}

sun_system build(const plan_node& p);

sun_system build_leaf(const plan_node& p) {
  switch (p.kind) {
    case plan_node::step::direct:
      return p.name == "zigzag" ? prime::zigzag_system(p.k, p.v == 4LL * p.k + 1) : prime::direct(p.k, static_cast<int>(p.v));
    case plan_node::step::sporadic:
      return sporadic(p.name);
    case plan_node::step::oracle: {
      search::options opt;
      opt.time_cap_seconds = 60;
      auto r = search::search_complete(p.k, static_cast<int>(p.v), search::block_kind::sun, opt);
      if (r.status != search::outcome::found)
        throw unsupported_error("exact-cover oracle: " + search::to_string(r.status) + " for k = " +
                                std::to_string(p.k) + ", v = " + std::to_string(p.v) + " (" + r.reason + ")");
      return std::move(r.suns);
    }
    default:
      throw precondition_error("not a leaf step");
  }
}

sun_system build_join(const plan_node& p) {
  const int k = p.k;
  const long long n = p.n;
  const int g = p.g;
  const long long h = 4LL * k;
  auto inner_f = std::async(std::launch::async, [&] { return build(p.inner[0]); });
  auto hole_f = std::async(std::launch::async, [&] { return holes::hole(k, static_cast<int>(n)); });
  std::future<sun_system> multi_f;
  if (g >= 3) multi_f = std::async(std::launch::async, [&] { return multipartite_sun_system(k, g); });
  const auto inner = inner_f.get();
  const auto hole = hole_f.get();

  // Points: the K_n part takes 0..n-1, hole copy x takes n + 4kx + [0, 4k).
  const auto zv = group_spec::cyclic(static_cast<int>(p.v));
  std::vector<sun> blocks;
  relabel_into(inner, [](int i) { return static_cast<long long>(i); }, zv, blocks);
  for (int x = 0; x < g; ++x)
    relabel_into(hole, [&](int i) { return i < h ? n + h * x + i : static_cast<long long>(i - h); }, zv, blocks);
  if (g >= 3) {
    // blowup(multipartite(g, 2k)): part x holds 2k inner vertices and their
    // 2k overline copies.
    const auto multi = multi_f.get();
    const long long half = 2LL * k;
    const long long inner_count = half * g;
    relabel_into(multi, [&](int i) {
      const bool bar = i >= inner_count;
      const long long j = bar ? i - inner_count : i;
      return n + h * (j / half) + (bar ? half : 0) + j % half;
    }, zv, blocks);
  }
  return on_integers(p.v, std::move(blocks));
}

sun_system build(const plan_node& p) {
  if (p.kind == plan_node::step::join) return build_join(p);
  return build_leaf(p);
}

}  // namespace

bool admissible(int k, long long v) { return v >= 2LL * k && (v * (v - 1)) % (4LL * k) == 0; }

std::vector<vertex> integer_legend(long long v) {
  const auto g = group_spec::cyclic(static_cast<int>(v));
  std::vector<vertex> out;
  out.reserve(static_cast<std::size_t>(v));
  for (long long i = 0; i < v; ++i) out.push_back(vertex::point(g.reduce({i}), 0));
  return out;
}

plan_node plan(int k, long long v) {
  if (k < 3 || k % 2 == 0) throw precondition_error("k must be odd and at least 3");
  if (!admissible(k, v))
    throw inadmissible_error("v = " + std::to_string(v) + " fails v >= 2k and v(v-1) = 0 mod 4k for k = " +
                             std::to_string(k));
  if (k == 3 || k == 5) {
    if (v > oracle_max_v)
      throw unsupported_error("k = " + std::to_string(k) + " is only covered by the exact-cover oracle up to v = " +
                              std::to_string(oracle_max_v));
    return leaf(plan_node::step::oracle, k, v, "exact cover");
  }
  if (v < 6LL * k) return plan_direct(k, v);

  const long long h = 4LL * k;
  long long n = v % h;
  if (n <= 2LL * k) n += h;
  const int g = static_cast<int>((v - n) / h);

  if (k == 7 && n == 21) {
    // K_{28g+21} = K_{28(g-1)+49} around the missing K_28 + 21.
    if (g == 1) return leaf(plan_node::step::sporadic, k, v, "K49");
    if (g == 3) return leaf(plan_node::step::sporadic, k, v, "K105");
    return join(k, 49, g - 1, leaf(plan_node::step::sporadic, k, 49, "K49"));
  }
  if (g == 2) {
    // K_{8k+n} = K_{4k+n} (+) (K_4k + (4k+n)).
    if (const auto name = sporadic_for_split(k, v)) return leaf(plan_node::step::sporadic, k, v, *name);
    return join(k, h + n, 1, plan(k, h + n));
  }
  try {
    return join(k, n, g, plan_direct(k, n));
  } catch (const unsupported_error& e) {
    throw unsupported_error(order_name(v) + " = K_" + std::to_string(n) + " + " + std::to_string(g) + " x " +
                            std::to_string(h) + ": " + e.what());
  }
}

long long plan_edges(const plan_node& p) {
  switch (p.kind) {
    case plan_node::step::hole:
      return p.g * (pairs(4LL * p.k) + 4LL * p.k * p.n);
    case plan_node::step::multipartite:
      return pairs(p.g) * 16LL * p.k * p.k;
    default:
      return pairs(p.v);
  }
}

bool plan_partitions_edges(const plan_node& p) {
  if (p.kind != plan_node::step::join) return p.inner.empty();
  if (p.g < 1 || p.g == 2 || p.inner.size() != (p.g >= 3 ? 3u : 2u)) return false;
  if (p.v != p.n + 4LL * p.k * p.g || p.inner[0].v != p.n) return false;
  if (p.inner[1].kind != plan_node::step::hole || p.inner[1].g != p.g || p.inner[1].n != p.n) return false;
  if (p.g >= 3 && (p.inner[2].kind != plan_node::step::multipartite || p.inner[2].g != p.g)) return false;
  long long total = 0;
  for (const auto& c : p.inner) {
    if (!plan_partitions_edges(c)) return false;
    total += plan_edges(c);
  }
  return total == pairs(p.v);
}

std::string describe(const plan_node& p) {
  std::ostringstream out;
  auto walk = [&](auto&& self, const plan_node& q, int depth) -> void {
    out << std::string(2 * depth, ' ');
    switch (q.kind) {
      case plan_node::step::direct:
        out << order_name(q.v) << ": direct (" << q.name << ")";
        break;
      case plan_node::step::sporadic:
        out << order_name(q.v) << ": sporadic " << q.name;
        break;
      case plan_node::step::oracle:
        out << order_name(q.v) << ": exact-cover oracle";
        break;
      case plan_node::step::hole:
        out << q.g << " x hole K_" << 4 * q.k << " + " << q.n;
        break;
      case plan_node::step::multipartite:
        out << "multipartite K_{" << q.g << " x " << 4 * q.k << "}";
        break;
      case plan_node::step::join:
        out << order_name(q.v) << ": join n = " << q.n << ", g = " << q.g;
        break;
    }
    out << "\n";
    for (const auto& c : q.inner) self(self, c, depth + 1);
  };
  walk(walk, p, 0);
  return out.str();
}

sun_system solve(int k, long long v) {
  const auto p = plan(k, v);
  if (!plan_partitions_edges(p)) throw verification_error("solve plan does not partition the edges of K_v");
  sun_system s = build(p);
  if (p.kind != plan_node::step::join) {
    // leaves come in their own vertex names; move them onto 0..v-1
    std::vector<sun> blocks;
    relabel_into(s, [](int i) { return static_cast<long long>(i); }, group_spec::cyclic(static_cast<int>(v)), blocks);
    s = on_integers(v, std::move(blocks));
  }
  require_valid(s, k, "k-sun system of " + order_name(v));
  return s;
}

}  // namespace sunsys::assembly
