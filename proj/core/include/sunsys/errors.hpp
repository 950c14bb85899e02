#pragma once

#include <stdexcept>
#include <string>

namespace sunsys {

// Root of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two operands live in different groups.
class spec_mismatch_error : public error {
public:
  using error::error;
};

// Field multiplication requested on a group without a field structure.
class not_a_field_error : public error {
public:
  using error::error;
};

// A block is structurally malformed (repeated vertex, wrong edge shape).
class invalid_block_error : public error {
public:
  using error::error;
};

// A construction was called outside its documented parameter range.
class precondition_error : public error {
public:
  using error::error;
};

// A hole instance (k, n) that the construction explicitly leaves open.
class exception_pair_error : public precondition_error {
public:
  exception_pair_error(int k, int n, const std::string& what)
      : precondition_error(what), k_(k), n_(n) {}
  int k() const { return k_; }
  int n() const { return n_; }

private:
  int k_;
  int n_;
};

// v fails the necessary conditions v >= 2k and v(v-1) = 0 mod 4k.
class inadmissible_error : public error {
public:
  using error::error;
};

// Admissible, but no implemented construction covers the instance.
class unsupported_error : public error {
public:
  using error::error;
};

// A constructed system failed the independent verifier.
class verification_error : public error {
public:
  using error::error;
};

// Malformed certificate or vertex encoding.
class parse_error : public error {
public:
  using error::error;
};

}  // namespace sunsys
