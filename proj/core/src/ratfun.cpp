#include "trop/ratfun.hpp"

#include <sstream>

#include "trop/error.hpp"

namespace trop {

Poly Poly::constant(const Rational& c) {
  if (c.is_zero()) return Poly();
  return Poly(std::vector<Rational>{c});
}

Poly Poly::linear(const Rational& a, const Rational& b) {
  Poly p(std::vector<Rational>{a, b});
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rational> c(a.c_);
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= c;
  return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::taylor_shift(const Rational& x0) const {
  // Horner: p(x0 + x) built bottom-up.
  Poly res;
  Poly xpol = Poly::linear(x0, Rational(1));
  for (size_t i = c_.size(); i-- > 0;) res = res * xpol + Poly::constant(c_[i]);
  return res;
}

int Poly::ord() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw Error(errc::parse_error, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  Rational lead = b.c_.back();
  std::vector<Rational> quo;
  int da = static_cast<int>(rem.size()) - 1;
  if (da >= db) quo.assign(da - db + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < db) break;
    int k = static_cast<int>(rem.size()) - 1 - db;
    Rational f = rem.back() / lead;
    quo[k] = f;
    for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.c_[i];
    rem.pop_back();
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return scaled(c_.back().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    if (i == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(errc::parse_error, "rational function with zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  // monic denominator
  Rational lead = den_.coeffs().back();
  if (!(lead == Rational(1))) {
    den_ = den_.scaled(lead.inverse());
    num_ = num_.scaled(lead.inverse());
  }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}
RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(errc::zero_omega_division, "rational-function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}
RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }

bool RatFun::operator==(const RatFun& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RatFun RatFun::reciprocal() const {
  if (is_zero()) throw Error(errc::zero_omega_division, "reciprocal of zero rational function");
  return RatFun(den_, num_);
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw Error(errc::out_of_range, "rational function evaluated at a pole");
  return num_.eval(x) / d;
}

Laurent RatFun::expand(int w, const Rational& base) const {
  if (num_.is_zero()) return Laurent::zero(w);
  Poly n = base.is_zero() ? num_ : num_.taylor_shift(base);
  Poly d = base.is_zero() ? den_ : den_.taylor_shift(base);
  int on = n.ord(), od = d.ord();
  int lo = on - od;
  // strip the power of x from both
  std::vector<Rational> nc(n.coeffs().begin() + on, n.coeffs().end());
  std::vector<Rational> dc(d.coeffs().begin() + od, d.coeffs().end());
  // long division nc/dc to w terms
  std::vector<Rational> out(w);
  Rational inv = dc[0].inverse();
  for (int k = 0; k < w; ++k) {
    Rational s = k < static_cast<int>(nc.size()) ? nc[k] : Rational(0);
    int jmax = std::min<int>(k, static_cast<int>(dc.size()) - 1);
    for (int j = 1; j <= jmax; ++j) s -= dc[j] * out[k - j];
    out[k] = s * inv;
  }
  return Laurent::from_rationals(lo, out, w);
}

Rational RatFun::residue_at_zero() const {
  int o = ord_at_zero();
  if (o >= 0) return Rational(0);
  Laurent l = expand(std::max(2, -o + 1));
  return l.at(-1);
}

Laurent RatFun::pole_part(int w) const {
  int o = ord_at_zero();
  if (o >= 0) return Laurent::zero(w);
  return expand(w).pole_part();
}

std::string RatFun::str() const {
  // scale both polynomials to integer coefficients
  Int l(1);
  for (const auto& c : num_.coeffs()) l = Int::lcm(l, c.den());
  for (const auto& c : den_.coeffs()) l = Int::lcm(l, c.den());
  Rational f{l, Int(1)};
  Poly n = num_.scaled(f), d = den_.scaled(f);
  // positive lowest denominator coefficient
  int od = d.ord();
  if (od >= 0 && d.coeff(od).sign() < 0) {
    n = -n;
    d = -d;
  }
  if (d.degree() == 0 && d.coeff(0) == Rational(1)) return n.str();
  bool wrap_n = true;
  std::string ns = n.str(), ds = d.str();
  std::ostringstream os;
  if (wrap_n && n.degree() > 0) os << "(" << ns << ")";
  else os << ns;
  os << "/(" << ds << ")";
  return os.str();
}

}  // namespace trop
