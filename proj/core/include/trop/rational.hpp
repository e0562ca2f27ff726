#ifndef TROP_RATIONAL_HPP
#define TROP_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace trop {

/// Arbitrary-size integer, thin RAII wrapper over GMP's mpz.
class Int {
 public:
  Int() { mpz_init(z_); }
  Int(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  explicit Int(const std::string& s);
  Int(const Int& o) { mpz_init_set(z_, o.z_); }
  Int(Int&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Int() { mpz_clear(z_); }

  mpz_ptr raw() { return z_; }
  mpz_srcptr raw() const { return z_; }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  int sign() const { return mpz_sgn(z_); }
  long to_long() const { return mpz_get_si(z_); }
  double to_double() const { return mpz_get_d(z_); }
  std::string str() const;
  size_t bits() const { return mpz_sizeinbase(z_, 2); }

  friend Int operator+(const Int& a, const Int& b) {
    Int r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a, const Int& b) {
    Int r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
  }
  friend Int operator-(const Int& a) {
    Int r;
    mpz_neg(r.z_, a.z_);
    return r;
  }
  Int& operator+=(const Int& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Int& operator-=(const Int& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Int& operator*=(const Int& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  void addmul(const Int& a, const Int& b) { mpz_addmul(z_, a.z_, b.z_); }
  void submul(const Int& a, const Int& b) { mpz_submul(z_, a.z_, b.z_); }

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }

  static Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }
  static Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
  }
  /// Exact division; quotient must be integral.
  static Int divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }
  static Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.z_, a.raw(), e);
    return r;
  }
  static Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.z_, n);
    return r;
  }
  static Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
  }

 private:
  mpz_t z_;
};

/// Exact rational number, always canonical (lowest terms, positive denominator).
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(long num, long den);
  Rational(const Int& num, const Int& den);
  explicit Rational(const Int& num) {
    mpq_init(q_);
    mpq_set_z(q_, num.raw());
  }
  /// Parses "p/q" or "p"; throws on malformed input.
  explicit Rational(const std::string& s);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  mpq_ptr raw() { return q_; }
  mpq_srcptr raw() const { return q_; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  Int num() const {
    Int r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
  }
  Int den() const {
    Int r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
  }
  double to_double() const { return mpq_get_d(q_); }
  /// "p/q", with "/q" omitted when q = 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }

  Rational inverse() const;
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  static Rational pow(const Rational& a, long e);

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Int& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace trop

#endif
