#ifndef TROP_RATFUN_HPP
#define TROP_RATFUN_HPP

#include <string>
#include <vector>

#include "trop/laurent.hpp"
#include "trop/rational.hpp"

namespace trop {

/// Dense univariate polynomial over Rational, ascending powers, no trailing
/// zero coefficients (zero polynomial = empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const Rational& c);
  /// a + b*x
  static Poly linear(const Rational& a, const Rational& b);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& operator[](size_t i) const { return c_[i]; }
  Rational coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[i];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  Poly scaled(const Rational& c) const;

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  /// p(x0 + x) as a polynomial in x.
  Poly taylor_shift(const Rational& x0) const;
  /// Lowest exponent with nonzero coefficient (zero poly -> -1).
  int ord() const;

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);  // monic gcd
  Poly monic() const;

  std::string str(const std::string& var = "eps") const;

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

/// Ratio of polynomials in the regulator, kept reduced (gcd = 1) with monic
/// denominator. This is the exact value domain of tropical Feynman integrals.
class RatFun {
 public:
  RatFun() : num_(), den_(Poly::constant(Rational(1))) {}
  RatFun(Poly num, Poly den);
  static RatFun constant(const Rational& c) { return RatFun(Poly::constant(c), Poly::constant(1)); }
  static RatFun from_rational(const Rational& c) { return constant(c); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  bool operator==(const RatFun& o) const;

  RatFun reciprocal() const;
  Rational eval(const Rational& x) const;  // throws on pole

  /// Truncated Laurent expansion around eps = base, window width w.
  Laurent expand(int w, const Rational& base = Rational(0)) const;
  /// Order of vanishing at eps = 0 (negative for a pole).
  int ord_at_zero() const { return num_.ord() - den_.ord(); }
  /// Residue of a pole of order <= 1 at eps = 0 (0 if regular there).
  Rational residue_at_zero() const;
  /// Principal part at eps = 0 as sum c_k eps^-k, returned in a width-w window.
  Laurent pole_part(int w) const;

  /// "p(eps)/q(eps)" with integer coefficients; "/q" omitted when q = 1.
  std::string str() const;

 private:
  Poly num_, den_;
  void reduce();
};

}  // namespace trop

#endif
