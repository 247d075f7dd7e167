#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfcat {

struct bad_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base field: the rationals, or a prime field F_p with p a machine-word prime.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime_field(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  std::string describe() const;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 means Q
};

// An exact field element, tagged with its FieldSpec. Rationals are kept in
// lowest terms with positive denominator (gmp canonicalization); F_p residues
// lie in [0, p).
class Scalar {
 public:
  Scalar() : spec_(FieldSpec::rationals()), q_(0), r_(0) {}

  static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
  static Scalar one(const FieldSpec& f) { return from_int(1, f); }
  static Scalar from_int(long v, const FieldSpec& f);
  static Scalar from_rational(const mpq_class& q);               // Q only
  static Scalar from_residue(std::uint64_t r, const FieldSpec& f);  // F_p only
  // Parses "a/b" or "a" relative to the field.
  static Scalar parse(const std::string& s, const FieldSpec& f);

  const FieldSpec& field() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  FieldSpec spec_;
  mpq_class q_;        // used when spec_ is Q
  std::uint64_t r_;    // used when spec_ is F_p
};

}  // namespace hopfcat
