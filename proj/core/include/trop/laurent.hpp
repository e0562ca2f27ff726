#ifndef TROP_LAURENT_HPP
#define TROP_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

/// Truncated Laurent series in the regulator epsilon (or in eps - eps0 when a
/// computation runs at a shifted base point), over a sliding window of fixed
/// width W: exponents lo .. lo+W-1. Coefficients are exact rationals, stored
/// as integer numerators over one common denominator so that convolutions run
/// on mpz without per-slot gcd normalization.
///
/// Window semantics: slots below lo are exact zeros; slots at lo+W and above
/// are unknown (truncated). Addition aligns to the smaller lo and silently
/// drops whatever falls off the top; multiplication adds the lo's.
class Laurent {
 public:
  Laurent() = default;
  static Laurent zero(int width) {
    Laurent x;
    x.den_ = Int(1);
    x.num_.resize(width);
    return x;
  }
  static Laurent constant(const Rational& c, int width) { return monomial(c, 0, width); }
  /// c * eps^k
  static Laurent monomial(const Rational& c, int k, int width);
  /// Coefficients c[i] at exponent lo+i, given as rationals.
  static Laurent from_rationals(int lo, const std::vector<Rational>& c, int width);

  int lo() const { return lo_; }
  int width() const { return static_cast<int>(num_.size()); }
  int hi() const { return lo_ + width() - 1; }  // highest stored exponent

  bool is_zero() const;
  /// Lowest exponent with a nonzero coefficient, if any.
  std::optional<int> lowest_nonzero() const;

  /// Coefficient at absolute exponent k. Exact zero below the window; throws
  /// for k above the stored range (that information was truncated away).
  Rational at(int k) const;
  bool covers(int k) const { return k < lo_ + width(); }

  /// Re-anchor the window at new_lo, keeping width; drops slots below new_lo
  /// only if they are zero (throws otherwise) and truncates the top.
  Laurent rebased(int new_lo) const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);

  Laurent scaled(const Rational& c) const;
  /// Multiply by eps^m (window shifts with the value; no information loss).
  Laurent shifted(int m) const;

  /// Multiplicative inverse within the window. The result window starts at
  /// -(lowest nonzero exponent). Throws AllZeroWindow for the zero series.
  Laurent reciprocal() const;

  /// Divide by the linear form (a + b*eps), exact. When a = 0 this shifts the
  /// window down by one; b may be zero (plain scalar division).
  Laurent divided_by_linear(const Rational& a, const Rational& b) const;

  /// Sub-series with exponents < 0 only (relative to the eps = 0 base point).
  Laurent pole_part() const;
  /// Complement of pole_part within the window.
  Laurent regular_part() const;

  /// Divide out gcd(content, denominator); result is observably identical.
  void normalize();

  bool operator==(const Laurent& o) const;

  /// One line "eps^k: p/q; ..." listing nonzero slots (all-zero -> "0").
  std::string str() const;

  const Int& raw_den() const { return den_; }
  const Int& raw_num(int i) const { return num_[i]; }
  void set_coeff(int k, const Rational& c);

 private:
  int lo_ = 0;
  Int den_ = Int(1);
  std::vector<Int> num_;  // numerators over den_, index i <-> exponent lo_+i

  friend class LaurentMulAcc;
};

/// Accumulator for sums of products sum_k a_k * b_k at one common window,
/// used by series convolution loops. Keeps one running denominator and adds
/// integer cross products via addmul.
class LaurentMulAcc {
 public:
  explicit LaurentMulAcc(int width) : acc_(Laurent::zero(width)), fresh_(true) {}
  void add_product(const Laurent& a, const Laurent& b);
  void add_scaled(const Laurent& a, const Rational& c);
  /// Finalize; normalizes once.
  Laurent take();

 private:
  Laurent acc_;
  bool fresh_;
};

}  // namespace trop

#endif
