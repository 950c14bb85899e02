#include "sunsys/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sunsys/errors.hpp"

namespace sunsys {

group_element::group_element(std::initializer_list<int> coords) {
  if (coords.size() > max_factors) throw precondition_error("too many coordinates");
  n = static_cast<std::uint8_t>(coords.size());
  std::size_t i = 0;
  for (int x : coords) c[i++] = x;
}

std::string to_string(const group_element& e) {
  std::ostringstream os;
  if (e.n == 1) {
    os << e.c[0];
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < e.n; ++i) os << (i ? "," : "") << e.c[i];
  os << ')';
  return os.str();
}

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

group_spec::group_spec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > max_factors)
    throw precondition_error("group must have between 1 and 4 cyclic factors");
  for (int f : factors_)
    if (f < 1) throw precondition_error("cyclic factor orders must be >= 1");
}

group_spec group_spec::galois_square(int p) {
  if (p < 3 || !is_prime(p)) throw precondition_error("GF(p^2) needs an odd prime p");
  group_spec g({p, p});
  g.field_tag_ = true;
  if (p % 4 == 3) {
    g.field_square_ = p - 1;
  } else {
    // smallest quadratic non-residue
    for (int a = 2; a < p; ++a) {
      bool square = false;
      for (int y = 1; y < p && !square; ++y) square = (1LL * y * y) % p == a;
      if (!square) {
        g.field_square_ = a;
        break;
      }
    }
  }
  return g;
}

long long group_spec::order() const {
  long long o = 1;
  for (int f : factors_) o *= f;
  return o;
}

bool group_spec::is_field() const {
  if (field_tag_) return true;
  return factors_.size() == 1 && is_prime(factors_[0]);
}

int group_spec::characteristic() const { return factors_.empty() ? 0 : factors_[0]; }

bool group_spec::contains(const group_element& e) const {
  if (e.n != factors_.size()) return false;
  for (std::size_t i = 0; i < e.n; ++i)
    if (e.c[i] < 0 || e.c[i] >= factors_[i]) return false;
  return true;
}

group_element group_spec::zero() const {
  group_element e;
  e.n = static_cast<std::uint8_t>(factors_.size());
  return e;
}

group_element group_spec::one() const {
  if (!is_field()) throw not_a_field_error("group " + to_string(*this) + " is not a field");
  group_element e = zero();
  e.c[0] = 1;
  return e;
}

group_element group_spec::make(std::initializer_list<int> coords) const {
  std::vector<long long> v(coords.begin(), coords.end());
  return reduce(v);
}

group_element group_spec::reduce(std::initializer_list<long long> coords) const {
  return reduce(std::vector<long long>(coords));
}

group_element group_spec::reduce(const std::vector<long long>& coords) const {
  if (coords.size() != factors_.size())
    throw spec_mismatch_error("coordinate count does not match group " + to_string(*this));
  group_element e = zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    e.c[i] = static_cast<std::int32_t>(mod(coords[i], factors_[i]));
  return e;
}

long long group_spec::index_of(const group_element& e) const {
  long long idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + e.c[i];
  return idx;
}

group_element group_spec::from_index(long long idx) const {
  group_element e = zero();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e.c[i] = static_cast<std::int32_t>(idx % factors_[i]);
    idx /= factors_[i];
  }
  return e;
}

std::vector<group_element> group_spec::elements() const {
  std::vector<group_element> out;
  const long long n = order();
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.push_back(from_index(i));
  return out;
}

std::string to_string(const group_spec& g) {
  std::ostringstream os;
  if (g.has_field_tag()) {
    os << "GF(" << g.factors()[0] << "^2)";
    return os.str();
  }
  for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "xZ" : "Z") << g.factors()[i];
  return os.str();
}

namespace {

void check_member(const group_spec& g, const group_element& a) {
  if (!g.contains(a))
    throw spec_mismatch_error("element " + to_string(a) + " is not in " + to_string(g));
}

}  // namespace

group_element add(const group_spec& g, const group_element& a, const group_element& b) {
  check_member(g, a);
  check_member(g, b);
  group_element r = a;
  for (std::size_t i = 0; i < r.n; ++i) {
    int s = a.c[i] + b.c[i];
    if (s >= g.factors()[i]) s -= g.factors()[i];
    r.c[i] = s;
  }
  return r;
}

group_element neg(const group_spec& g, const group_element& a) {
  check_member(g, a);
  group_element r = a;
  for (std::size_t i = 0; i < r.n; ++i) r.c[i] = a.c[i] == 0 ? 0 : g.factors()[i] - a.c[i];
  return r;
}

group_element sub(const group_spec& g, const group_element& a, const group_element& b) {
  return add(g, a, neg(g, b));
}

group_element scale(const group_spec& g, const group_element& a, long long m) {
  check_member(g, a);
  group_element r = a;
  for (std::size_t i = 0; i < r.n; ++i)
    r.c[i] = static_cast<std::int32_t>(mod(mod(m, g.factors()[i]) * a.c[i], g.factors()[i]));
  return r;
}

group_element field_mul(const group_spec& g, const group_element& a, const group_element& b) {
  if (!g.is_field()) throw not_a_field_error("group " + to_string(g) + " is not a field");
  check_member(g, a);
  check_member(g, b);
  const long long p = g.factors()[0];
  if (!g.has_field_tag()) return g.reduce({1LL * a.c[0] * b.c[0]});
  const long long c0 = 1LL * a.c[0] * b.c[0] + 1LL * g.field_square() * a.c[1] * b.c[1];
  const long long c1 = 1LL * a.c[0] * b.c[1] + 1LL * a.c[1] * b.c[0];
  return g.reduce({mod(c0, p), mod(c1, p)});
}

group_element field_pow(const group_spec& g, const group_element& a, long long e) {
  group_element result = g.one();
  group_element base = a;
  while (e > 0) {
    if (e & 1) result = field_mul(g, result, base);
    base = field_mul(g, base, base);
    e >>= 1;
  }
  return result;
}

long long multiplicative_order(const group_spec& g, const group_element& a) {
  if (!g.is_field()) throw not_a_field_error("group " + to_string(g) + " is not a field");
  if (a == g.zero()) return 0;
  const group_element one = g.one();
  group_element x = a;
  long long ord = 1;
  while (x != one) {
    x = field_mul(g, x, a);
    ++ord;
  }
  return ord;
}

group_element primitive_root(const group_spec& g) {
  if (!g.is_field()) throw not_a_field_error("group " + to_string(g) + " is not a field");
  const long long target = g.order() - 1;
  for (const auto& e : g.elements())
    if (e != g.zero() && multiplicative_order(g, e) == target) return e;
  throw not_a_field_error("no primitive root found in " + to_string(g));
}

std::vector<group_element> generated_subgroup(const group_spec& g,
                                              const std::vector<group_element>& gens) {
  std::set<group_element> seen{g.zero()};
  std::vector<group_element> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<group_element> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        group_element y = add(g, x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace sunsys
