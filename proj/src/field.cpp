#include "hopfcat/field.hpp"

namespace hopfcat {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw bad_input("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::string FieldSpec::describe() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar Scalar::from_int(long v, const FieldSpec& f) {
  Scalar s;
  s.spec_ = f;
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    long m = static_cast<long>(f.modulus());
    long r = v % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  s.spec_ = FieldSpec::rationals();
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::from_residue(std::uint64_t r, const FieldSpec& f) {
  if (f.is_rational()) throw bad_input("from_residue requires a prime field");
  Scalar s;
  s.spec_ = f;
  s.r_ = r % f.modulus();
  return s;
}

Scalar Scalar::parse(const std::string& str, const FieldSpec& f) {
  mpq_class q;
  if (q.set_str(str, 10) != 0 || (str.find('/') != std::string::npos &&
                                  mpz_class(q.get_den()) == 0))
    throw bad_input("cannot parse scalar '" + str + "'");
  q.canonicalize();
  if (f.is_rational()) return from_rational(q);
  // reduce p/q mod the prime
  mpz_class p(f.modulus());
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw bad_input("denominator divisible by field modulus");
  std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  std::uint64_t inv = powmod(d, f.modulus() - 2, f.modulus());
  return from_residue(mulmod(n, inv, f.modulus()), f);
}

void Scalar::check_same(const Scalar& o) const {
  if (spec_ != o.spec_)
    throw bad_input("mixed field specs: " + spec_.describe() + " vs " +
                    o.spec_.describe());
}

bool Scalar::is_zero() const {
  return spec_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return spec_.is_rational() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % spec_.modulus();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.spec_ = spec_;
  if (spec_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mulmod(r_, o.r_, spec_.modulus());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.spec_ = spec_;
  if (spec_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : spec_.modulus() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw bad_input("division by zero");
  Scalar s;
  s.spec_ = spec_;
  if (spec_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, spec_.modulus() - 2, spec_.modulus());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return spec_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational() const {
  if (!spec_.is_rational()) throw bad_input("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (spec_.is_rational()) throw bad_input("not a prime-field scalar");
  return r_;
}

std::string Scalar::str() const {
  if (spec_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace hopfcat
