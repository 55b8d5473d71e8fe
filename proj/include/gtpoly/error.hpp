#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gtpoly {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_input : error {
  using error::error;
};

struct parse_error : invalid_input {
  using invalid_input::invalid_input;
};

struct division_by_zero : error {
  using error::error;
};

/// An internal identity failed; always a bug in a presentation or transform.
struct consistency_error : error {
  using error::error;
};

/// Enumeration of a torsion group or poset was refused for size.
struct budget_exceeded : error {
  budget_exceeded(const std::string& what, mpz_class size) : error(what), size_(std::move(size)) {}
  const mpz_class& size() const { return size_; }

 private:
  mpz_class size_;
};

struct torsion_too_large : budget_exceeded {
  explicit torsion_too_large(const mpz_class& cardinality)
      : budget_exceeded("torsion too large: " + cardinality.get_str() + " elements", cardinality) {}
};

}  // namespace gtpoly
