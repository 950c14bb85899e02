#include "sunsys/holes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sunsys/cycles.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::holes {

using cycles::pt;

std::string to_string(hole_case c) {
  switch (c) {
    case hole_case::k1:
      return "k1";
    case hole_case::k3_even:
      return "k3-even";
    case hole_case::k3_even_wide:
      return "k3-even-wide";
    case hole_case::k3_boundary:
      return "k3-boundary";
    case hole_case::k3_odd:
      return "k3-odd";
    case hole_case::k3_odd_boundary:
      return "k3-odd-boundary";
    case hole_case::searched:
      return "searched";
  }
  return "?";
}

hole_params derive_params(int k, int n) {
  if (k < 7 || k % 2 == 0) throw precondition_error("hole: k must be odd and at least 7");
  if (n % 4 != 0 && n % 4 != 1) throw precondition_error("hole: n must be 0 or 1 mod 4");
  if (n <= 2 * k || n >= 10 * k) throw precondition_error("hole: n must satisfy 2k < n < 10k");
  hole_params p;
  p.k = k;
  p.n = n;
  p.l = (k - 1) / 2;
  p.nu = n % 2 == 0 ? 2 : 3;
  const int m = (n - p.nu) / 2;
  p.q = (m - 1) / p.l;
  p.r = m - p.q * p.l;
  return p;
}

bool is_exception(int k, int n) {
  static const std::set<int> k7{20, 21, 32, 33, 44, 45, 56, 57, 64, 65, 68, 69};
  static const std::set<int> k11{100, 101, 112, 113};
  return (k == 7 && k7.count(n)) || (k == 11 && k11.count(n));
}

hole_case classify(const hole_params& p) {
  if (p.k % 4 == 1) return hole_case::k1;
  if (p.q % 2 == 0) {
    if (p.r == p.l) return hole_case::k3_boundary;
    return p.q <= 2 * p.r + 4 ? hole_case::k3_even : hole_case::k3_even_wide;
  }
  if (p.r != p.l - 1) return hole_case::k3_odd;
  // the 1-factorization part needs [3, (q+3)/2] inside [1, l]
  return (p.q + 3) / 2 <= p.l ? hole_case::k3_odd_boundary : hole_case::searched;
}

substitution_result apply_substitution(const sun& s, const std::vector<std::pair<vertex, vertex>>& replace) {
  std::map<vertex, vertex> m;
  const auto vs = block_vertices(s);
  for (const auto& [from, to] : replace) {
    if (std::find(vs.begin(), vs.end(), from) == vs.end())
      throw invalid_block_error("substitution: " + to_string(from) + " is not a vertex of the sun");
    if (!m.emplace(from, to).second) throw invalid_block_error("substitution: vertex replaced twice");
  }
  auto map = [&](const vertex& v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  substitution_result res;
  for (const auto& v : s.rim) res.t.rim.push_back(map(v));
  for (const auto& v : s.pendants) res.t.pendants.push_back(map(v));
  validate(res.t);
  auto before = sun_edges(s);
  auto after = sun_edges(res.t);
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(res.missing));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(res.added));
  return res;
}

namespace {

vertex shift(int k, const vertex& v, long long d) { return v.is_point() ? pt(k, v.elem[0] + d, v.level) : v; }

sun dev_sun(int k, const vertex& p, const vertex& q, const vertex& attach, const vertex& pendant) {
  if (!p.is_point() || !q.is_point() || p.level != q.level) throw invalid_block_error("Dev rim edge must lie on one level");
  const long long d = mod(q.elem[0] - p.elem[0], k);
  if (std::gcd(static_cast<int>(d), k) != 1) throw invalid_block_error("Dev rim edge does not generate a k-cycle");
  if (!attach.is_point() || attach.level != p.level) throw invalid_block_error("pendant edge must meet the rim level");
  sun s;
  for (int i = 0; i < k; ++i) {
    s.rim.push_back(shift(k, attach, i * d));
    s.pendants.push_back(shift(k, pendant, i * d));
  }
  validate(s);
  return s;
}

}  // namespace

sun dev_path_sun(int k, const vertex& a, const vertex& b, const vertex& c) { return dev_sun(k, a, b, b, c); }

sun dev_pair_sun(int k, const vertex& p, const vertex& q, const vertex& u, const vertex& v) {
  const bool u_on = u.is_point() && u.level == p.level;
  const bool v_on = v.is_point() && v.level == p.level;
  if (u_on == v_on) throw invalid_block_error("pendant edge must have exactly one endpoint on the rim level");
  return u_on ? dev_sun(k, p, q, u, v) : dev_sun(k, p, q, v, u);
}

vertex pattern_scope::at(const std::string& token) const {
  if (token.empty()) throw precondition_error("pattern: empty token");
  if (token[0] == '~') return bar_(at(token.substr(1)));
  if (token.rfind("i'", 0) == 0) return vertex::inf_primed(std::stoi(token.substr(2)));
  auto it = names_.find(token);
  if (it == names_.end()) throw precondition_error("pattern: unbound name " + token);
  return it->second;
}

std::vector<vertex> pattern_scope::expand(const std::string& pattern) const {
  std::vector<vertex> out;
  std::istringstream in(pattern);
  std::string tok;
  while (in >> tok) {
    const auto br = tok.find('[');
    if (br == std::string::npos) {
      out.push_back(at(tok));
      continue;
    }
    const bool over = tok[0] == '~';
    const std::string name = tok.substr(over ? 1 : 0, br - (over ? 1 : 0));
    const int from = std::stoi(tok.substr(br + 1));
    auto it = seqs_.find(name);
    if (it == seqs_.end()) throw precondition_error("pattern: unbound sequence " + name);
    const auto& [first, vs] = it->second;
    for (int i = from - first; i < static_cast<int>(vs.size()); ++i) {
      if (i < 0) throw precondition_error("pattern: index before sequence start in " + tok);
      out.push_back(over ? bar_(vs[i]) : vs[i]);
    }
  }
  return out;
}

sun pattern_scope::make_sun(const std::string& rim, const std::string& pendants) const {
  sun s{expand(rim), expand(pendants)};
  validate(s);
  return s;
}

cycle pattern_scope::make_cycle(const std::string& rim) const {
  cycle c{expand(rim)};
  validate(c);
  return c;
}

namespace {

// Renumbers plain infinities into fresh consecutive blocks.
class inf_pool {
public:
  std::vector<cycle> take(std::vector<cycle> cs, int count) {
    for (auto& c : cs)
      for (auto& v : c.rim)
        if (v.kind == vertex_kind::inf) {
          if (v.index > count) throw precondition_error("internal: infinity beyond its block");
          v.index += next_;
        }
    next_ += count;
    return cs;
  }
  cycle take(const cycle& c, int count) { return take(std::vector<cycle>{c}, count)[0]; }
  int used() const { return next_; }

private:
  int next_ = 0;
};

void append(std::vector<cycle>& out, const std::vector<cycle>& more) { out.insert(out.end(), more.begin(), more.end()); }

std::vector<cycle> orbit(int k, const cycle& base) {
  const auto z = cycles::zk(k);
  std::vector<cycle> out;
  for (int g = 0; g < k; ++g) out.push_back(translate(z, base, z.reduce({g})));
  return out;
}

// <{}, {d}, {}> + l for odd l, as a developed system.
std::vector<cycle> mixed_plus_l(int k, int d) { return orbit(k, cycles::plus_ell_difference(k, d)); }

// S with S u (S+1) = [lo, hi], hi - lo odd.
std::vector<int> pair_starts(int lo, int hi) {
  std::vector<int> s;
  for (int x = lo; x < hi; x += 2) s.push_back(x);
  return s;
}

// Sequence tail of a cycle: positions first..k (1-based).
std::vector<vertex> tail(const cycle& c, int first) { return {c.rim.begin() + (first - 1), c.rim.end()}; }

// The same cycle read backwards starting from position `start` (0-based).
cycle reversed_from(const cycle& c, std::size_t start) {
  cycle out;
  const std::size_t n = c.rim.size();
  for (std::size_t i = 0; i < n; ++i) out.rim.push_back(c.rim[(start + n - i) % n]);
  return out;
}

// k = 1 (mod 4).
hole_parts build_k1(const hole_params& p) {
  const int k = p.k, l = p.l, q = p.q, r = p.r, nu = p.nu;
  if (l % 2 != 0 || r % 2 != 1 || q < 2 || q > 10) throw precondition_error("k1 hole: parameter side conditions fail");
  hole_parts out;
  // Gamma1 = <[2,l], [k-2r-2, k-1], [2,l-1]>; the first cycle is pure on level 0.
  std::vector<cycle> gamma1 = cycles::cayley_interval_system(k, {2, l - 1}, {});
  append(gamma1, cycles::cayley_interval_system(k, {}, {2, l - 1}));
  append(gamma1, cycles::ell_pair_system(k, pair_starts(k - 2 * r - 2, k - 1)));
  if (static_cast<int>(gamma1.size()) != k + 2 * r - 2) throw precondition_error("internal: Gamma1 cycle count");
  const cycle c1 = gamma1[0];
  inf_pool pool1;
  for (int j = 1; j < static_cast<int>(gamma1.size()); ++j) {
    if (j + 1 < q)
      append(out.gamma1, pool1.take(cycles::plus_ell_cycle(k, gamma1[j]), l));
    else
      out.gamma1.push_back(gamma1[j]);
  }
  out.w1 = pool1.used();

  inf_pool pool2;
  const auto ares = cycles::plus_r_cycle(k, 1, 1, r, 0, 0, 0);
  const cycle a = pool2.take(ares.base, r);
  const cycle b = pool2.take(cycles::flip(cycles::plus_ell_base(k, 1)), l);
  const auto f = pool2.take(cycles::plus_ell_cycle(k, c1), l);
  const int u = pool2.used();
  out.w2 = 2 * u + nu;

  pattern_scope sc(lift::overline_map{u});
  sc.bind("x1", a.rim[0]);
  sc.bind("x2", a.rim[1]);
  sc.bind("y3", a.rim[2]);
  sc.bind("y4", a.rim[3]);
  sc.bind_seq("a", 5, tail(a, 5));
  sc.bind("y1", b.rim[0]);
  sc.bind("y2", b.rim[1]);
  sc.bind_seq("b", 3, tail(b, 3));
  const auto& bar = sc.bar();

  const sun s1 = sc.make_sun("x1 ~x2 y3 y4 a[5..]", "x2 ~y3 ~y4 ~a[5..] ~x1");
  const sun s3 = sc.make_sun("y1 ~y2 b[3..]", "y2 ~b[3..] ~y1");
  const vertex ip1 = vertex::inf_primed(1), ip2 = vertex::inf_primed(2), ip3 = vertex::inf_primed(3);
  const vertex x2 = sc.at("x2"), y3 = sc.at("y3"), y2 = sc.at("y2");
  out.orbit_suns.push_back(apply_substitution(s1, {{x2, ip1}, {y3, ip2}}).t);
  if (nu == 2)
    out.orbit_suns.push_back(apply_substitution(bar(s1), {{bar(x2), ip1}, {y3, ip2}}).t);
  else
    out.orbit_suns.push_back(apply_substitution(bar(s1), {{bar(x2), ip1}, {y3, ip2}, {bar(y3), ip3}}).t);
  out.orbit_suns.push_back(apply_substitution(s3, {{y2, ip1}}).t);
  out.orbit_suns.push_back(apply_substitution(bar(s3), {{bar(y2), ip1}}).t);

  for (int j = 0; j < k; ++j) {
    std::vector<bool> choice(k, false);
    choice[1] = true;
    const sun s = lift::sun_from_cycle(f[j], choice, bar);
    out.fixed_suns.push_back(s);
    if (nu == 2)
      out.fixed_suns.push_back(bar(s));
    else
      out.fixed_suns.push_back(apply_substitution(bar(s), {{bar(f[j].rim[1]), ip3}}).t);
  }

  auto v = [&](const char* t) { return sc.at(t); };
  out.fixed_suns.push_back(nu == 2 ? dev_path_sun(k, v("x1"), v("x2"), v("~x2")) : dev_path_sun(k, v("x1"), v("x2"), v("~y3")));
  out.fixed_suns.push_back(dev_path_sun(k, v("~x1"), v("~x2"), v("y3")));
  out.fixed_suns.push_back(dev_path_sun(k, v("y4"), v("y3"), v("x2")));
  out.fixed_suns.push_back(dev_path_sun(k, v("y1"), v("y2"), v("~y2")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("~y1"), v("~y2"), v("y3"), v("~y4")));
  if (nu == 3) {
    out.fixed_suns.push_back(dev_path_sun(k, v("~y4"), v("~y3"), v("y4")));
    sun g7;
    for (const auto& c : c1.rim) {
      g7.rim.push_back(bar(c));
      g7.pendants.push_back(c);
    }
    validate(g7);
    out.fixed_suns.push_back(g7);
  }
  return out;
}

// The sun part shared by the q-even k = 3 (mod 4) branches.  `with_b` is
// false when the mixed 1-factor lives in Gamma1.
void k3_even_sun_part(const hole_params& p, bool with_b, int bdiff, hole_parts& out) {
  const int k = p.k, l = p.l, r = p.r, nu = p.nu;
  inf_pool pool;
  const cycle a = pool.take(cycles::plus_r_cycle(k, 2, 2, r, 1, 0, 0).base, r);
  cycle b;
  if (with_b) b = pool.take(cycles::plus_ell_difference(k, bdiff), l);
  const int u = pool.used();
  out.w2 = 2 * u + nu;
  pattern_scope sc(lift::overline_map{u});
  const char* names[] = {"x1", "x2", "x3", "y4", "y5", "y6"};
  for (int i = 0; i < 6; ++i) sc.bind(names[i], a.rim[i]);
  sc.bind_seq("a", 7, tail(a, 7));
  if (with_b) {
    sc.bind("y", b.rim[0]);
    sc.bind("x", b.rim[1]);
    sc.bind_seq("b", 3, tail(b, 3));
  }
  const std::string rim1 = "x1 ~x2 x3 i'2 ~y5 y6 a[7..]";
  const std::string rim2 = "~x1 x2 ~x3 i'1 y5 ~y6 ~a[7..]";
  if (nu == 2) {
    out.orbit_suns.push_back(sc.make_sun(rim1, "i'1 ~x3 ~y4 y5 y4 ~a[7..] ~x1"));
    out.orbit_suns.push_back(sc.make_sun(rim2, "i'2 x3 y4 ~y5 y6 a[7..] x1"));
    if (with_b) {
      out.orbit_suns.push_back(sc.make_sun("y ~x b[3..]", "x ~b[3..] ~y"));
      out.orbit_suns.push_back(sc.make_sun("~y x ~b[3..]", "~x b[3..] y"));
    }
  } else {
    out.orbit_suns.push_back(sc.make_sun(rim1, "i'1 i'3 ~y4 y5 y4 ~a[7..] ~x1"));
    out.orbit_suns.push_back(sc.make_sun(rim2, "i'2 i'3 y4 ~y5 y6 a[7..] x1"));
    if (!with_b) throw precondition_error("internal: nu = 3 needs the mixed cycle");
    out.orbit_suns.push_back(sc.make_sun("y ~x b[3..]", "i'3 ~b[3..] ~y"));
    out.orbit_suns.push_back(sc.make_sun("~y x ~b[3..]", "i'3 b[3..] y"));
  }
  auto v = [&](const char* t) { return sc.at(t); };
  out.fixed_suns.push_back(dev_path_sun(k, v("x1"), v("x2"), v("~x2")));
  out.fixed_suns.push_back(dev_path_sun(k, v("y5"), v("y4"), v("x3")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("~x1"), v("~x2"), v("~x3"), v("~y4")));
  out.fixed_suns.push_back(dev_path_sun(k, v("~y5"), v("~y4"), v("y5")));
  out.fixed_suns.push_back(dev_path_sun(k, v("~y5"), v("~y6"), v("y6")));
  if (nu == 3) {
    out.fixed_suns.push_back(dev_pair_sun(k, v("x2"), v("x3"), v("x"), v("y")));
    out.fixed_suns.push_back(dev_pair_sun(k, v("~x2"), v("~x3"), v("~x"), v("~y")));
  }
}

// k = 3 (mod 4), q even, r < l.
hole_parts build_k3_even(const hole_params& p, bool wide) {
  const int k = p.k, l = p.l, q = p.q, r = p.r, nu = p.nu;
  if (l % 2 != 1 || q % 2 != 0 || r % 2 != 1 || r > l - 2) throw precondition_error("k3 hole: parameter side conditions fail");
  hole_parts out;
  inf_pool pool1;
  if (!wide) {
    // Gamma1 = <[3,l], [k-2r-2, k], [3,l]>
    append(out.gamma1, cycles::ell_pair_system(k, pair_starts(k - 2 * r + q - 3, k)));
    append(out.gamma1, cycles::cayley_interval_system(k, {3, l - 1}, {3, l}));
    for (int d = k - 2 * r - 2; d <= k - 2 * r + q - 4; ++d) append(out.gamma1, pool1.take(mixed_plus_l(k, d), l));
    out.w1 = pool1.used();
    k3_even_sun_part(p, true, k - 2 * r - 3, out);
    return out;
  }
  if (r != 1 || (q != 8 && q != 10) || (l == 3 && q == 10)) throw precondition_error("k3 wide hole: parameter side conditions fail");
  // Gamma1 = <[3,l], {0} u [k-5, k-1], [3,l]>.  With nu = 3 the 1-factor
  // <{}, {k-5}, {}> moves to the sun part so that inf'_3 has its mixed cycle.
  const int first = nu == 3 ? k - 4 : k - 5;
  for (int d = first; d <= k - 1; ++d) append(out.gamma1, pool1.take(mixed_plus_l(k, d), l));
  std::vector<int> dd;
  for (int d = 3; d <= (q - 2) / 2; ++d) dd.push_back(d);
  for (const auto& factor : cycles::one_factorization(k, dd)) {
    // one_factorization lists edges sorted; plus_ell_one_factor wants one
    // edge per translate, which a sorted 1-factor does not give, so map the
    // factor through its own labelling.
    append(out.gamma1, pool1.take(cycles::plus_ell_one_factor(k, factor), l));
  }
  append(out.gamma1, cycles::cayley_interval_system(k, {q / 2, l}, {q / 2, l}));
  out.w1 = pool1.used();
  k3_even_sun_part(p, nu == 3, k - 5, out);
  return out;
}

// k = 3 (mod 4), q even, r = l.
hole_parts build_k3_boundary(const hole_params& p, int r1) {
  const int k = p.k, l = p.l, q = p.q, nu = p.nu;
  const int r2 = l - r1;
  if (l % 2 != 1 || l < 5 || q % 2 != 0 || (l == 5 && q == 10)) throw precondition_error("k3 boundary hole: side conditions fail");
  if (r1 % 2 != 1 || r2 < 2 || r2 % 2 != 0) throw precondition_error("k3 boundary hole: bad split of r");
  hole_parts out;
  inf_pool pool1;
  if (q <= 4) {
    for (int d = k - 3; d <= k - 4 + q; ++d) append(out.gamma1, pool1.take(mixed_plus_l(k, d), l));
    // <{}, [k-3+q, k], {l}> is the flip of <{l}, [0, 3-q], {}>
    append(out.gamma1, cycles::flip(cycles::ell_pair_system(k, q == 2 ? std::vector<int>{0} : std::vector<int>{})));
    append(out.gamma1, cycles::cayley_interval_system(k, {3, l}, {4, l - 1}));
  } else {
    for (int d = k - 3; d <= k - 1; ++d) append(out.gamma1, pool1.take(mixed_plus_l(k, d), l));
    std::vector<int> dd;
    for (int d = l + 3 - q / 2; d <= l; ++d) dd.push_back(d);
    for (const auto& factor : cycles::one_factorization(k, dd))
      append(out.gamma1, pool1.take(cycles::plus_ell_one_factor(k, factor), l));
    append(out.gamma1, cycles::cayley_interval_system(k, {3, l + 2 - q / 2}, {4, l + 2 - q / 2}));
  }
  out.w1 = pool1.used();

  inf_pool pool;
  // A = (y1, y2, x3, x4, ...): the <{1}, [1, k-2r1-2], {1}> cycle read backwards.
  const cycle a = pool.take(reversed_from(cycles::plus_r_cycle(k, 1, 1, r1, 1, 0, 0).base, 3), r1);
  const cycle b = pool.take(cycles::plus_r_cycle(k, 1, 2, r2, k - 2 * r1 - 1, 1, 0).base, r2);
  const int u = pool.used();
  out.w2 = 2 * u + nu;
  pattern_scope sc(lift::overline_map{u});
  sc.bind("y1", a.rim[0]);
  sc.bind("y2", a.rim[1]);
  sc.bind("x3", a.rim[2]);
  sc.bind("x4", a.rim[3]);
  sc.bind_seq("a", 5, tail(a, 5));
  sc.bind("x1", b.rim[0]);
  sc.bind("x2", b.rim[1]);
  sc.bind("y3", b.rim[2]);
  sc.bind("y4", b.rim[3]);
  sc.bind_seq("b", 5, tail(b, 5));

  out.orbit_suns.push_back(sc.make_sun("y1 ~y2 x3 ~x4 a[5..]", "i'2 ~x3 x4 ~a[5..] ~y1"));
  out.orbit_suns.push_back(sc.make_sun("~y1 i'1 ~x3 x4 ~a[5..]", nu == 2 ? "i'2 x3 ~x4 a[5..] y1" : "i'2 x3 i'3 a[5..] y1"));
  out.orbit_suns.push_back(sc.make_sun("x1 ~x2 y3 ~y4 b[5..]", "i'2 ~y3 i'1 ~b[5..] ~x1"));
  out.orbit_suns.push_back(
      sc.make_sun(nu == 2 ? "~x1 x2 ~y3 y4 ~b[5..]" : "~x1 x2 i'3 y4 ~b[5..]", "i'2 y3 ~y4 b[5..] x1"));
  auto v = [&](const char* t) { return sc.at(t); };
  out.fixed_suns.push_back(dev_path_sun(k, v("y1"), v("y2"), v("x3")));
  out.fixed_suns.push_back(dev_path_sun(k, v("~y2"), v("~y1"), v("y2")));
  out.fixed_suns.push_back(dev_path_sun(k, v("y3"), v("y4"), v("~y4")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("~x1"), v("~x2"), v("~x3"), v("y2")));
  out.fixed_suns.push_back(nu == 2 ? dev_path_sun(k, v("x1"), v("x2"), v("~x2")) : dev_path_sun(k, v("x1"), v("x2"), v("~y3")));
  if (nu == 3) {
    out.fixed_suns.push_back(dev_path_sun(k, v("~x3"), v("~x4"), v("x4")));
    out.fixed_suns.push_back(dev_path_sun(k, v("~y4"), v("~y3"), v("y4")));
  }
  return out;
}

// k = 3 (mod 4), q odd, r < l - 1.
hole_parts build_k3_odd(const hole_params& p) {
  const int k = p.k, l = p.l, q = p.q, r = p.r, nu = p.nu;
  if (l % 2 != 1 || q % 2 != 1 || q < 3 || q > 9 || r % 2 != 0 || r < 2 || r > l - 3)
    throw precondition_error("k3 odd hole: parameter side conditions fail");
  hole_parts out;
  inf_pool pool1;
  // Gamma1 = <[4,l], [k-2r-1, k], [3,l]>
  append(out.gamma1, cycles::cayley_interval_system(k, {4, l}, {3, l - 1}));
  // <{}, [k-2r-4+q, k], {l}> is the flip of <{l}, [0, 2r+4-q], {}>
  append(out.gamma1, cycles::flip(cycles::ell_pair_system(k, pair_starts(0, 2 * r + 4 - q))));
  for (int d = k - 2 * r - 1; d <= k - 2 * r - 5 + q; ++d) append(out.gamma1, pool1.take(mixed_plus_l(k, d), l));
  out.w1 = pool1.used();

  inf_pool pool;
  // A = (x1, x2, x3, y4, y5, y6, ...): <[1,2], -D, [1,3]> flipped and read backwards.
  const auto base = cycles::plus_r_cycle(k, 2, 3, r, 2 * r + 5, 0, 0).base;
  const cycle a = pool.take(reversed_from(cycles::flip(base), 5), r);
  // B_1 = (x, y, ...), B_2 and B_3 = (y, x, ...)
  const cycle b1 = pool.take(reversed_from(cycles::plus_ell_difference(k, k - 2 * r - 4), 1), l);
  const cycle b2 = pool.take(cycles::plus_ell_difference(k, k - 2 * r - 3), l);
  const cycle b3 = pool.take(cycles::plus_ell_difference(k, k - 2 * r - 2), l);
  const int u = pool.used();
  out.w2 = 2 * u + nu;
  pattern_scope sc(lift::overline_map{u});
  const char* names[] = {"x1", "x2", "x3", "y4", "y5", "y6"};
  for (int i = 0; i < 6; ++i) sc.bind(names[i], a.rim[i]);
  sc.bind_seq("a", 7, tail(a, 7));
  sc.bind("x1_0", b1.rim[0]);
  sc.bind("y1_1", b1.rim[1]);
  sc.bind_seq("b1", 2, tail(b1, 3));
  sc.bind("y2_0", b2.rim[0]);
  sc.bind("x2_1", b2.rim[1]);
  sc.bind_seq("b2", 2, tail(b2, 3));
  sc.bind("y3_0", b3.rim[0]);
  sc.bind("x3_1", b3.rim[1]);
  sc.bind_seq("b3", 2, tail(b3, 3));

  const std::string p0 = nu == 2 ? "x2" : "i'3";
  const std::string p1 = nu == 2 ? "~x2" : "i'3";
  out.orbit_suns.push_back(sc.make_sun("x1 ~x2 x3 ~y4 y5 ~y6 a[7..]", p0 + " i'1 y4 i'2 y6 ~a[7..] ~x1"));
  out.orbit_suns.push_back(sc.make_sun("~x1 x2 ~x3 y4 ~y5 y6 ~a[7..]", p1 + " i'1 ~y4 i'2 y5 a[7..] x1"));
  out.orbit_suns.push_back(sc.make_sun("x1_0 y1_1 b1[2..]", "i'2 ~b1[2..] ~x1_0"));
  out.orbit_suns.push_back(sc.make_sun("~x1_0 ~y1_1 ~b1[2..]", "i'2 b1[2..] x1_0"));
  out.orbit_suns.push_back(sc.make_sun("y2_0 x2_1 b2[2..]", "i'1 ~b2[2..] ~y2_0"));
  out.orbit_suns.push_back(sc.make_sun("~y2_0 ~x2_1 ~b2[2..]", "i'1 b2[2..] y2_0"));
  out.orbit_suns.push_back(sc.make_sun("y3_0 x3_1 b3[2..]", (nu == 2 ? "~x3_1" : "i'3") + std::string(" ~b3[2..] ~y3_0")));
  out.orbit_suns.push_back(sc.make_sun("~y3_0 ~x3_1 ~b3[2..]", (nu == 2 ? "x3_1" : "i'3") + std::string(" b3[2..] y3_0")));

  auto v = [&](const char* t) { return sc.at(t); };
  out.fixed_suns.push_back(dev_path_sun(k, v("x2"), v("x3"), v("~x3")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("~x2"), v("~x3"), v("~x1_0"), v("y1_1")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("y4"), v("y5"), v("y2_0"), v("~x2_1")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("~y4"), v("~y5"), v("~y2_0"), v("x2_1")));
  out.fixed_suns.push_back(dev_pair_sun(k, v("~y5"), v("~y6"), v("~y1_1"), v("x1_0")));
  if (nu == 3) {
    out.fixed_suns.push_back(dev_pair_sun(k, v("x1"), v("x2"), v("x3_1"), v("~y3_0")));
    out.fixed_suns.push_back(dev_pair_sun(k, v("~x1"), v("~x2"), v("~x3_1"), v("y3_0")));
  }
  return out;
}

// k = 3 (mod 4), q odd, r = l - 1.
hole_parts build_k3_odd_boundary(const hole_params& p, int r1) {
  const int k = p.k, l = p.l, q = p.q, nu = p.nu;
  const int r2 = l - 1 - r1;
  if (l % 2 != 1 || q % 2 != 1 || q < 3 || q > 9 || p.r != l - 1 || (l == 5 && q == 9))
    throw precondition_error("k3 odd boundary hole: parameter side conditions fail");
  if (r1 % 2 != 1 || r2 % 2 != 1 || r2 < 1) throw precondition_error("k3 odd boundary hole: bad split of r");
  hole_parts out;
  inf_pool pool1;
  std::vector<int> dd;
  for (int d = 3; d <= (q + 3) / 2; ++d) dd.push_back(d);
  for (const auto& factor : cycles::one_factorization(k, dd))
    append(out.gamma1, pool1.take(cycles::plus_ell_one_factor(k, factor), l));
  append(out.gamma1, cycles::cayley_interval_system(k, {(q + 5) / 2, l}, {(q + 5) / 2, l}));
  out.w1 = pool1.used();

  inf_pool pool;
  const cycle a = pool.take(reversed_from(cycles::plus_r_cycle(k, 1, 1, r1, 1, 0, 0).base, 3), r1);
  const cycle b = pool.take(cycles::plus_r_cycle(k, 1, 1, r2, k - 2 * r1 - 1, 1, 0).base, r2);
  const int u = pool.used();
  out.w2 = 2 * u + nu;
  pattern_scope sc(lift::overline_map{u});
  sc.bind("y1", a.rim[0]);
  sc.bind("y2", a.rim[1]);
  sc.bind("x3", a.rim[2]);
  sc.bind("x4", a.rim[3]);
  sc.bind_seq("a", 5, tail(a, 5));
  sc.bind("x1", b.rim[0]);
  sc.bind("x2", b.rim[1]);
  sc.bind("y3", b.rim[2]);
  sc.bind("y4", b.rim[3]);
  sc.bind_seq("b", 5, tail(b, 5));

  out.orbit_suns.push_back(
      sc.make_sun(nu == 2 ? "y1 ~y2 x3 ~x4 a[5..]" : "y1 ~y2 i'3 ~x4 a[5..]", "i'1 i'2 x4 ~a[5..] ~y1"));
  out.orbit_suns.push_back(sc.make_sun("~y1 y2 ~x3 x4 ~a[5..]", "i'1 i'2 ~x4 a[5..] y1"));
  out.orbit_suns.push_back(sc.make_sun("x1 ~x2 ~y3 y4 b[5..]", "i'1 i'2 y3 ~b[5..] ~x1"));
  out.orbit_suns.push_back(
      sc.make_sun("~x1 x2 y3 ~y4 ~b[5..]", nu == 2 ? "i'1 i'2 y4 b[5..] x1" : "i'1 i'2 i'3 b[5..] x1"));
  auto v = [&](const char* t) { return sc.at(t); };
  out.fixed_suns.push_back(dev_path_sun(k, v("y1"), v("y2"), v("x3")));
  out.fixed_suns.push_back(dev_path_sun(k, v("~y1"), v("~y2"), v("~x3")));
  out.fixed_suns.push_back(dev_path_sun(k, v("~y4"), v("~y3"), v("x2")));
  out.fixed_suns.push_back(dev_path_sun(k, v("x1"), v("x2"), v("~x2")));
  out.fixed_suns.push_back(nu == 2 ? dev_path_sun(k, v("~x1"), v("~x2"), v("y3"))
                                   : dev_pair_sun(k, v("~x1"), v("~x2"), v("~x4"), v("x3")));
  if (nu == 3) {
    out.fixed_suns.push_back(dev_path_sun(k, v("y4"), v("y3"), v("~x2")));
    out.fixed_suns.push_back(dev_path_sun(k, v("x4"), v("x3"), v("~y2")));
  }
  return out;
}

}  // namespace

hole_parts hole_parts_for(int k, int n) {
  if (is_exception(k, n))
    throw exception_pair_error(k, n, "hole: (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) +
                                         ") is a listed exception");
  const hole_params p = derive_params(k, n);
  switch (classify(p)) {
    case hole_case::k1:
      return build_k1(p);
    case hole_case::k3_even:
      return build_k3_even(p, false);
    case hole_case::k3_even_wide:
      return build_k3_even(p, true);
    case hole_case::k3_boundary:
      // the smallest odd r1 leaving a non-empty mixed interval for r2
      return build_k3_boundary(p, 3);
    case hole_case::k3_odd:
      return build_k3_odd(p);
    case hole_case::k3_odd_boundary:
      return build_k3_odd_boundary(p, 1);
    case hole_case::searched:
      break;
  }
  throw precondition_error("hole: unclassified parameters");
}

sun_system hole(int k, int n) {
  if (!is_exception(k, n) && classify(derive_params(k, n)) == hole_case::searched) return searched_hole(k, n);
  const hole_parts parts = hole_parts_for(k, n);
  std::vector<sun> second = parts.fixed_suns;
  const auto z = cycles::zk(k);
  for (const auto& t : parts.orbit_suns)
    for (int g = 0; g < k; ++g) second.push_back(translate(z, t, z.reduce({g})));
  if (2 * parts.w1 + parts.w2 != n) throw precondition_error("internal: infinity budget does not add up to n");
  sun_system sys = lift::compose_4k(k, parts.gamma1, parts.w1, second, parts.w2);
  require_valid(sys, k, "hole K_" + std::to_string(4 * k) + "+" + std::to_string(n));
  return sys;
}

}  // namespace sunsys::holes
