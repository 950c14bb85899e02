#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sunsys {

inline constexpr std::size_t max_factors = 4;

// Residue vector of a finite abelian group Z_{n1} x ... x Z_{nt}.
// Unused trailing slots stay zero so the default ordering is lexicographic
// on the coordinates.
struct group_element {
  std::array<std::int32_t, max_factors> c{};
  std::uint8_t n = 0;

  group_element() = default;
  group_element(std::initializer_list<int> coords);

  int operator[](std::size_t i) const { return c[i]; }
  std::size_t size() const { return n; }

  friend auto operator<=>(const group_element&, const group_element&) = default;
  friend bool operator==(const group_element&, const group_element&) = default;
};

std::string to_string(const group_element& e);

class group_spec {
public:
  group_spec() = default;
  explicit group_spec(std::vector<int> factors);

  static group_spec cyclic(int n) { return group_spec({n}); }
  // Additive group of GF(p^2) with multiplication enabled.  Elements are
  // (a0, a1) meaning a0 + a1*x with x^2 = field_square().
  static group_spec galois_square(int p);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  long long order() const;

  bool has_field_tag() const { return field_tag_; }
  // Value a with x^2 = a in the GF(p^2) polynomial basis.
  int field_square() const { return field_square_; }
  // Z_p with p prime, or a tagged GF(p^2).
  bool is_field() const;
  int characteristic() const;

  bool contains(const group_element& e) const;
  group_element zero() const;
  group_element one() const;
  group_element make(std::initializer_list<int> coords) const;
  // Reduces arbitrary integers into range.
  group_element reduce(std::initializer_list<long long> coords) const;
  group_element reduce(const std::vector<long long>& coords) const;

  // Mixed-radix index, first coordinate most significant.  Index order agrees
  // with the lexicographic element order.
  long long index_of(const group_element& e) const;
  group_element from_index(long long idx) const;
  std::vector<group_element> elements() const;

  friend bool operator==(const group_spec&, const group_spec&) = default;

private:
  std::vector<int> factors_;
  bool field_tag_ = false;
  int field_square_ = 0;
};

std::string to_string(const group_spec& g);

group_element add(const group_spec& g, const group_element& a, const group_element& b);
group_element sub(const group_spec& g, const group_element& a, const group_element& b);
group_element neg(const group_spec& g, const group_element& a);
group_element scale(const group_spec& g, const group_element& a, long long m);

group_element field_mul(const group_spec& g, const group_element& a, const group_element& b);
group_element field_pow(const group_spec& g, const group_element& a, long long e);
// Order of a in the multiplicative group; 0 for the zero element.
long long multiplicative_order(const group_spec& g, const group_element& a);
// Smallest element (canonical order) of full multiplicative order.
group_element primitive_root(const group_spec& g);

bool is_prime(long long n);
long long mod(long long a, long long m);

// Subgroup generated by a list of elements, enumerated in canonical order.
std::vector<group_element> generated_subgroup(const group_spec& g,
                                              const std::vector<group_element>& gens);

}  // namespace sunsys
